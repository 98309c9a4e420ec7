#include <pbf/commands.hpp>

#include <pbf/approx.hpp>
#include <pbf/generators.hpp>
#include <pbf/oracle.hpp>
#include <pbf/rng.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace pbf::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(const std::string& text, const char* what) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ValidationError(std::string(what) + ": cannot parse '" + text + "' as a number");
  }
  return v;
}

int parse_int(const std::string& text, const char* what) {
  int v = 0;
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ValidationError(std::string(what) + ": cannot parse '" + text + "' as an integer");
  }
  return v;
}

std::string format_profile(const ProbabilityProfile& p) {
  std::string out = "(";
  for (int i = 0; i < p.players(); ++i) {
    if (i) out += ", ";
    out += format_number(p[i]);
  }
  return out + ")";
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw ValidationError("unknown output format '" + name + "' (expected csv or text)");
}

ProbabilityProfile parse_profile(const std::optional<std::string>& arg, int n) {
  if (!arg || trim(*arg).empty()) return ProbabilityProfile::uniform(n);
  const auto parts = split(*arg, ',');
  std::vector<double> p;
  for (const auto& part : parts) p.push_back(parse_real(part, "--p"));
  if (p.size() == 1) return ProbabilityProfile::constant(n, p.front());
  if (p.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("--p: " + std::to_string(p.size()) + " probabilities for " +
                          std::to_string(n) + " players");
  }
  return ProbabilityProfile(std::move(p));
}

CoalitionMask parse_subset(const std::string& text, int n) {
  std::string body = trim(text);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
    body = trim(std::string_view(body).substr(1, body.size() - 2));
  }
  if (body.empty()) return CoalitionMask::empty(n);
  std::vector<int> players;
  for (const auto& part : split(body, ',')) players.push_back(parse_int(part, "subset"));
  for (int player : players) {
    if (player < 1 || player > n) {
      throw ValidationError("subset: player " + std::to_string(player) + " outside 1.." +
                            std::to_string(n));
    }
  }
  return CoalitionMask::from_players(n, players);
}

std::vector<CoalitionMask> parse_selector(const std::string& selector, int n) {
  std::vector<CoalitionMask> out;
  if (selector == "all") {
    if (n > kMaxEnumeratedPlayers) {
      throw ValidationError("--subsets all is limited to n <= " +
                            std::to_string(kMaxEnumeratedPlayers) + "; got n = " +
                            std::to_string(n));
    }
    for (mask_t m = 0; m < table_size(n); ++m) out.emplace_back(n, m);
  } else if (selector == "singletons") {
    for (int i = 0; i < n; ++i) out.emplace_back(n, mask_t{1} << i);
  } else if (selector == "pairs") {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) out.emplace_back(n, (mask_t{1} << i) | (mask_t{1} << j));
    }
  } else {
    for (const auto& part : split(selector, ';')) out.push_back(parse_subset(part, n));
  }
  return out;
}

std::string format_subset(const CoalitionMask& s) {
  std::string out = "{";
  bool first = true;
  for (int player : s.members()) {
    if (!first) out += ',';
    out += std::to_string(player);
    first = false;
  }
  return out + "}";
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc()) return "nan";
  std::string out(buf, ptr);
  return out == "-0" ? "0" : out;
}

std::vector<ReportRow> report_rows(const IndexReport& report) {
  std::vector<ReportRow> rows;
  rows.reserve(report.records.size() * 4);
  for (const IndexRecord& rec : report.records) {
    rows.push_back({rec.subset, "interaction", rec.interaction});
    rows.push_back({rec.subset, "influence", rec.influence});
    rows.push_back({rec.subset, "shapley", rec.shapley});
    if (rec.normalized) rows.push_back({rec.subset, "normalized", *rec.normalized});
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "subset,index,value,mask\n";
  for (const ReportRow& row : rows) {
    out << '"' << format_subset(row.subset) << "\"," << row.index << ','
        << format_number(row.value) << ',' << row.subset.bits() << '\n';
  }
}

// analyze --------------------------------------------------------------------

int cmd_analyze(const io::Game& game, const AnalyzeOptions& opts, std::ostream& out) {
  const int n = game.function.players();
  const ProbabilityProfile p = parse_profile(opts.profile, n);
  const std::vector<CoalitionMask> subsets = parse_selector(opts.subsets, n);
  const GameIndices indices(game.function);
  const IndexReport report = build_index_report(indices, game.name, p, subsets);

  if (opts.format == OutputFormat::csv) {
    write_csv(out, report_rows(report));
    return kExitOk;
  }
  out << "game: " << (report.game_id.empty() ? "(unnamed)" : report.game_id) << "\n"
      << "players: " << n << "\n"
      << "profile: " << format_profile(p) << "\n\n";
  std::size_t width = 6;
  for (const auto& rec : report.records) width = std::max(width, format_subset(rec.subset).size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "subset" << std::setw(20)
      << "interaction" << std::setw(20) << "influence" << std::setw(20) << "shapley"
      << "normalized\n";
  for (const auto& rec : report.records) {
    out << std::setw(static_cast<int>(width) + 2) << format_subset(rec.subset) << std::setw(20)
        << format_number(rec.interaction) << std::setw(20) << format_number(rec.influence)
        << std::setw(20) << format_number(rec.shapley)
        << (rec.normalized ? format_number(*rec.normalized) : std::string("-")) << "\n";
  }
  return kExitOk;
}

// approximate ----------------------------------------------------------------

int cmd_approximate(const io::Game& game, const ApproximateOptions& opts, std::ostream& out) {
  const PseudoBooleanFunction& f = game.function;
  const int n = f.players();
  const ProbabilityProfile p = parse_profile(opts.profile, n);
  if (opts.subset && opts.degree) {
    throw ValidationError("--subset and --degree are mutually exclusive");
  }
  const CoalitionMask target = opts.subset ? parse_subset(*opts.subset, n) : CoalitionMask::full(n);
  const Approximation approx =
      opts.degree ? best_k_approximation(f, *opts.degree, p) : best_s_approximation(f, target, p);
  const double residual = residual_norm(f, approx, p);

  // Coefficients below this are rounding noise from the basis expansion.
  const double noise = 1e-12 * std::max(1.0, max_abs(approx.multilinear.values()));
  std::vector<ReportRow> rows;
  for (mask_t t = 0; t < approx.multilinear.size(); ++t) {
    if (std::abs(approx.multilinear[t]) > noise) {
      rows.push_back({CoalitionMask(n, t), "coefficient", approx.multilinear[t]});
    }
  }
  std::optional<double> leading;
  if (!opts.degree) leading = approx.multilinear[target];

  if (opts.format == OutputFormat::csv) {
    if (leading) rows.push_back({target, "interaction", *leading});
    rows.push_back({target, "residual", residual});
    write_csv(out, rows);
    return kExitOk;
  }
  out << "game: " << (game.name.empty() ? "(unnamed)" : game.name) << "\n";
  if (opts.degree) {
    out << "target: degree <= " << *opts.degree << "\n";
  } else {
    out << "target: S = " << format_subset(target) << "\n";
  }
  out << "profile: " << format_profile(p) << "\n"
      << "unanimity-basis coefficients:\n";
  for (const ReportRow& row : rows) {
    out << "  " << std::left << std::setw(16) << format_subset(row.subset)
        << format_number(row.value);
    if (leading && row.subset == target) out << "  (leading: interaction index)";
    out << "\n";
  }
  if (leading) {
    out << "interaction index " << format_subset(target) << ": " << format_number(*leading)
        << "\n";
  }
  out << "residual: " << format_number(residual) << "\n";
  return kExitOk;
}

// verify ---------------------------------------------------------------------

namespace {

// Projection-route work grows like 2^(|S| + n); beyond this the route is skipped.
constexpr int kProjectionBudgetLog2 = 22;
// z-score bound for the single-seed Monte Carlo checks.
constexpr double kMonteCarloSigmas = 4.0;

class CheckBuilder {
public:
  CheckBuilder(std::string name, double tolerance) : name_(std::move(name)), tol_(tolerance) {}

  void observe(double deviation) {
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    max_ = std::max(max_, deviation);
  }
  void note(std::string detail) { detail_ = std::move(detail); }
  CheckResult finish() const { return {name_, max_ <= tol_, max_, tol_, detail_}; }

private:
  std::string name_;
  double tol_;
  double max_ = 0.0;
  std::string detail_;
};

double projection_influence(const PseudoBooleanFunction& f, const CoalitionMask& s,
                            const ProbabilityProfile& p, bool corrupt) {
  if (!corrupt) return banzhaf_influence(f, s, p, InfluenceMethod::projection);
  Approximation approx = best_s_approximation(f, s, p);
  approx.fourier[s.bits()] += 1e-3;
  const MobiusRepresentation c = to_multilinear(approx);
  double sum = 0.0;
  for (mask_t r = s.bits(); r != 0; r = (r - 1) & s.bits()) sum += c[r];
  return sum;
}

}  // namespace

std::vector<CheckResult> run_verification(const io::Game& game, const VerifyOptions& opts) {
  const PseudoBooleanFunction& f = game.function;
  const int n = f.players();
  const ProbabilityProfile p = parse_profile(opts.profile, n);
  if (opts.trials < 1) throw ValidationError("--trials must be positive");
  const double scale = std::max(1.0, max_abs(f.values()));
  Rng rng(opts.seed);
  auto random_mask = [&] { return static_cast<mask_t>(rng.engine()() & full_mask(n)); };

  std::vector<CoalitionMask> subsets{CoalitionMask::empty(n), CoalitionMask::full(n)};
  for (int i = 0; i < n; ++i) subsets.emplace_back(n, mask_t{1} << i);
  for (int k = 0; k < opts.trials; ++k) subsets.emplace_back(n, random_mask());

  const GameIndices indices(f);
  std::vector<CheckResult> results;

  {
    CheckBuilder four("four_way_influence", 1e-9 * scale);
    CheckBuilder lead("leading_coefficient", 1e-9 * scale);
    int skipped = 0;
    for (const CoalitionMask& s : subsets) {
      const double mob = indices.influence(s, p);
      const double avg = banzhaf_influence(f, s, p, InfluenceMethod::average);
      const double inner = banzhaf_influence(f, s, p, InfluenceMethod::inner_product);
      four.observe(std::abs(mob - avg));
      four.observe(std::abs(mob - inner));
      four.observe(std::abs(avg - inner));
      if (s.size() + n > kProjectionBudgetLog2) {
        ++skipped;
        continue;
      }
      const double proj = projection_influence(f, s, p, opts.inject_fault);
      four.observe(std::abs(mob - proj));
      four.observe(std::abs(avg - proj));
      four.observe(std::abs(inner - proj));
      Approximation approx = best_s_approximation(f, s, p);
      if (opts.inject_fault) {
        approx.fourier[s.bits()] += 1e-3;
        approx.multilinear = to_multilinear(approx);
      }
      lead.observe(std::abs(approx.multilinear[s] - indices.interaction(s, p)));
    }
    if (skipped) {
      four.note(std::to_string(skipped) + " subsets without the projection route");
      lead.note(std::to_string(skipped) + " subsets skipped");
    }
    results.push_back(four.finish());
    results.push_back(lead.finish());
  }

  {
    CheckBuilder check("expectation_identities", 1e-10 * scale);
    const ProductMeasure mu(p);
    for (const CoalitionMask& s : subsets) {
      check.observe(std::abs(indices.influence(s, p) - mu.expectation(sigma_s(f, s))));
      check.observe(std::abs(indices.interaction(s, p) - mu.expectation(s_difference(f, s))));
    }
    results.push_back(check.finish());
  }

  {
    CheckBuilder check("orthonormality", 1e-10);
    const ProductMeasure mu(p);
    if (n <= 8) {
      std::vector<PseudoBooleanFunction> basis;
      for (mask_t t = 0; t < table_size(n); ++t) basis.push_back(basis_function(p, {n, t}));
      for (mask_t t = 0; t < basis.size(); ++t) {
        for (mask_t r = t; r < basis.size(); ++r) {
          check.observe(std::abs(mu.inner_product(basis[t], basis[r]) - (t == r ? 1.0 : 0.0)));
        }
      }
    } else {
      for (int k = 0; k < opts.trials; ++k) {
        const mask_t t = random_mask();
        const mask_t r = k % 2 == 0 ? t : random_mask();
        const double ip = mu.inner_product(basis_function(p, {n, t}), basis_function(p, {n, r}));
        check.observe(std::abs(ip - (t == r ? 1.0 : 0.0)));
      }
      check.note("sampled pairs");
    }
    results.push_back(check.finish());
  }

  {
    CheckBuilder check("parseval", 1e-9);
    if (2 * n <= kProjectionBudgetLog2 + 2) {
      const Approximation full = best_k_approximation(f, n, p);
      double energy = 0.0;
      for (const auto& [t, c] : full.fourier) energy += c * c;
      const double norm = inner_product(p, f, f);
      check.observe(std::abs(energy - norm) / std::max(norm, 1e-300));
    } else {
      check.note("skipped: n too large for the full basis");
    }
    results.push_back(check.finish());
  }

  {
    CheckBuilder check("normal_equations", 1e-8 * scale);
    if (n <= 12) {
      const int max_size = std::min(n, 6);
      for (int k = 0; k < std::min(opts.trials, 10); ++k) {
        mask_t m = random_mask();
        while (cardinality(m) > max_size) m &= m - 1;
        const CoalitionMask s(n, m);
        const Approximation proj = best_s_approximation(f, s, p);
        const Approximation lsq = oracle::lsq_normal_equations(f, s, p);
        for (mask_t t = 0; t < proj.multilinear.size(); ++t) {
          check.observe(std::abs(proj.multilinear[t] - lsq.multilinear[t]));
        }
      }
    } else {
      check.note("skipped: n > 12");
    }
    results.push_back(check.finish());
  }

  {
    CheckBuilder check("monte_carlo", kMonteCarloSigmas);
    auto z_score = [](const oracle::SampleEstimate& est, double truth) {
      if (est.std_error == 0.0) {
        return std::abs(est.mean - truth) <= 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
      }
      return std::abs(est.mean - truth) / est.std_error;
    };
    const std::size_t samples = std::max<std::size_t>(opts.samples, 1000);
    for (int k = 0; k < 3; ++k) {
      mask_t m = random_mask();
      if (m == 0) m = 1;
      const CoalitionMask s(n, m);
      const std::uint64_t seed = Rng::splitmix64(opts.seed + static_cast<std::uint64_t>(k));
      check.observe(z_score(
          oracle::mc_expectation(f, oracle::Transform::sigma_s, s, p, samples, seed),
          indices.influence(s, p)));
      check.observe(z_score(
          oracle::mc_expectation(f, oracle::Transform::delta_s, s, p, samples, seed + 1),
          indices.interaction(s, p)));
      check.observe(z_score(
          oracle::mc_expectation(f, oracle::Transform::identity, s, p, samples, seed + 2),
          expectation(p, f)));
      check.observe(z_score(oracle::cdf_integral_check(f, s, p, samples, seed + 3),
                            indices.influence(s, p)));
    }
    check.note("max z-score over sigma_S, Delta_S, identity and Beta-CDF estimates");
    results.push_back(check.finish());
  }

  {
    CheckBuilder quad("quadrature", 1e-10 * scale);
    CheckBuilder cube("cube_average", 1e-12 * scale);
    const ProbabilityProfile half = ProbabilityProfile::uniform(n);
    for (const CoalitionMask& s : subsets) {
      quad.observe(std::abs(oracle::diagonal_quadrature(f, s) - indices.shapley(s)));
      cube.observe(std::abs(oracle::cube_average(f, s) - indices.influence(s, half)));
    }
    results.push_back(quad.finish());
    results.push_back(cube.finish());
  }

  {
    CheckBuilder check("taylor_roundtrip", 1e-9 * scale);
    const std::vector<double> table = indices.all_interactions(p);
    std::map<mask_t, double> interactions;
    for (mask_t m = 0; m < table.size(); ++m) interactions.emplace(m, table[m]);
    const PseudoBooleanFunction back = taylor_reconstruct(interactions, p);
    for (mask_t m = 0; m < f.size(); ++m) check.observe(std::abs(back[m] - f[m]));
    results.push_back(check.finish());
  }

  return results;
}

int cmd_verify(const io::Game& game, const VerifyOptions& opts, std::ostream& out) {
  const auto results = run_verification(game, opts);
  const CheckResult* first_failure = nullptr;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name
        << " max_deviation=" << format_number(r.max_deviation)
        << " tolerance=" << format_number(r.tolerance);
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    out << "verification failed: " << first_failure->name << "\n";
    return kExitVerificationFailed;
  }
  out << "all " << results.size() << " checks passed\n";
  return kExitOk;
}

// generate -------------------------------------------------------------------

io::Game generate_game(const GenerateOptions& opts) {
  if (opts.kind == "random") {
    if (!opts.players) throw ValidationError("--n is required for random games");
    check_player_count(*opts.players);
    const RandomDistribution dist = [&] {
      try {
        return parse_distribution(opts.distribution);
      } catch (const DomainError& e) {
        throw ValidationError(e.what());
      }
    }();
    return {opts.name, random_game(*opts.players, opts.seed, dist)};
  }
  if (opts.kind == "weighted-voting") {
    if (!opts.quota) throw ValidationError("--quota is required for weighted-voting games");
    std::vector<double> weights;
    for (const auto& part : split(opts.weights, ',')) weights.push_back(parse_real(part, "--weights"));
    if (opts.players && static_cast<std::size_t>(*opts.players) != weights.size()) {
      throw ValidationError("--n disagrees with the number of --weights");
    }
    return {opts.name, weighted_voting_game(*opts.quota, weights)};
  }
  if (opts.kind == "unanimity") {
    if (!opts.players) throw ValidationError("--n is required for unanimity games");
    check_player_count(*opts.players);
    return {opts.name, unanimity_game(*opts.players, parse_subset(opts.members, *opts.players))};
  }
  throw ValidationError("unknown generator kind '" + opts.kind +
                        "' (expected random, weighted-voting or unanimity)");
}

int cmd_generate(const GenerateOptions& opts, std::ostream& out) {
  out << io::serialize_game(generate_game(opts));
  return kExitOk;
}

}  // namespace pbf::cli
