#include <pbf/core.hpp>
#include <pbf/generators.hpp>

#include <doctest.h>

#include "reference.hpp"

#include <cmath>
#include <limits>

using namespace pbf;

namespace {

PseudoBooleanFunction or_game() { return PseudoBooleanFunction(2, {0, 1, 1, 1}); }

}  // namespace

TEST_CASE("coalition masks") {
  const auto s = CoalitionMask::from_players(4, {3, 1, 3});
  CHECK(s.bits() == 0b0101u);
  CHECK(s.size() == 2);
  CHECK(s.members() == std::vector<int>{1, 3});
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK_FALSE(s.contains(5));
  CHECK(s.complement().bits() == 0b1010u);
  CHECK((s | CoalitionMask(4, 0b0010)).bits() == 0b0111u);
  CHECK((s & CoalitionMask(4, 0b0110)).bits() == 0b0100u);
  CHECK((s - CoalitionMask(4, 0b0001)).bits() == 0b0100u);
  CHECK(CoalitionMask(4, 0b0001).is_subset_of(s));
  CHECK_FALSE(CoalitionMask(4, 0b0010).is_subset_of(s));
  CHECK(CoalitionMask::empty(3).is_empty());
  CHECK(CoalitionMask::full(3).bits() == 7u);
  CHECK(CoalitionMask::full(24).size() == 24);

  CHECK_THROWS_AS(CoalitionMask(2, 0b100), DomainError);
  CHECK_THROWS_AS(CoalitionMask(0, 0), ValidationError);
  CHECK_THROWS_AS(CoalitionMask(25, 0), ValidationError);
  CHECK_THROWS_AS(CoalitionMask::from_players(3, {4}), DomainError);
  CHECK_THROWS_AS(CoalitionMask::from_players(3, {0}), DomainError);
  CHECK_THROWS_AS((void)(s | CoalitionMask(3, 1)), DimensionError);
}

TEST_CASE("table construction validates length and finiteness") {
  CHECK_THROWS_AS(PseudoBooleanFunction(2, {0, 1, 1}), ValidationError);
  CHECK_THROWS_AS(PseudoBooleanFunction(0, {1}), ValidationError);
  CHECK_THROWS_AS(PseudoBooleanFunction(25, {}), ValidationError);
  CHECK_THROWS_AS(PseudoBooleanFunction(1, {0, std::numeric_limits<double>::quiet_NaN()}),
                  ValidationError);
  CHECK_THROWS_AS(PseudoBooleanFunction(1, {0, std::numeric_limits<double>::infinity()}),
                  ValidationError);
  CHECK_THROWS_AS(MobiusRepresentation(1, {0, 1, 2}), ValidationError);
  const auto c = PseudoBooleanFunction::constant(3, 2.5);
  CHECK(c.size() == 8);
  for (double v : c.values()) CHECK(v == 2.5);
}

TEST_CASE("arithmetic on functions") {
  const auto f = or_game();
  const auto g = PseudoBooleanFunction(2, {1, 2, 3, 4});
  CHECK(ref::table(f + g) == std::vector<double>{1, 3, 4, 5});
  CHECK(ref::table(g - f) == std::vector<double>{1, 1, 2, 3});
  CHECK(ref::table(2.0 * g) == std::vector<double>{2, 4, 6, 8});
  CHECK(ref::table(f + 1.0) == std::vector<double>{1, 2, 2, 2});
  CHECK_THROWS_AS(f + PseudoBooleanFunction::constant(3, 0), DimensionError);
}

TEST_CASE("mobius examples") {
  CHECK(ref::table(mobius(PseudoBooleanFunction(2, {0, 0, 0, 1}))) ==
        std::vector<double>{0, 0, 0, 1});
  CHECK(ref::table(mobius(or_game())) == std::vector<double>{0, 1, 1, -1});
  CHECK(ref::table(mobius(PseudoBooleanFunction::constant(3, 4.0))) ==
        std::vector<double>{4, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("zeta examples") {
  CHECK(ref::table(zeta(MobiusRepresentation(2, {0, 0, 0, 1}))) ==
        std::vector<double>{0, 0, 0, 1});
  CHECK(ref::table(zeta(MobiusRepresentation(2, {5, 0, 0, 0}))) ==
        std::vector<double>{5, 5, 5, 5});
}

TEST_CASE("mobius agrees with the alternating-sum definition") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = ref::random_int(rng, 1, 8);
    const auto v = ref::random_table(rng, n);
    const auto a = mobius(ref::function(n, v));
    CHECK(ref::max_abs_diff(ref::table(a), ref::mobius(v, n)) <= 1e-12);
    const auto back = zeta(a);
    CHECK(ref::max_abs_diff(ref::table(back), ref::zeta(ref::table(a), n)) <= 1e-12);
  }
}

TEST_CASE("zeta inverts mobius on random tables") {
  Rng rng(12);
  SUBCASE("n = 8, values in [-1,1]") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = ref::random_table(rng, 8);
      const auto back = zeta(mobius(ref::function(8, v)));
      CHECK(ref::max_abs_diff(ref::table(back), v) <= 1e-12);
    }
  }
  SUBCASE("relative accuracy for values up to 1e6, n <= 12") {
    for (int n = 1; n <= 12; ++n) {
      const auto v = ref::random_table(rng, n, -1e6, 1e6);
      const auto back = zeta(mobius(ref::function(n, v)));
      CHECK(ref::max_abs_diff(ref::table(back), v) <= 1e-10 * 1e6);
    }
  }
  SUBCASE("integer tables round-trip exactly") {
    for (int n = 1; n <= 16; n += 3) {
      const auto v = ref::integer_table(rng, n, -1000000, 1000000);
      const auto back = zeta(mobius(ref::function(n, v)));
      CHECK(ref::table(back) == v);
    }
  }
  SUBCASE("mobius inverts zeta") {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = ref::random_table(rng, 7);
      const auto back = mobius(zeta(MobiusRepresentation(7, a)));
      CHECK(ref::max_abs_diff(ref::table(back), a) <= 1e-12);
    }
  }
}

TEST_CASE("mobius is linear") {
  Rng rng(13);
  const auto f = ref::function(6, ref::random_table(rng, 6));
  const auto g = ref::function(6, ref::random_table(rng, 6));
  const auto lhs = mobius(2.0 * f + g);
  const auto af = mobius(f);
  const auto ag = mobius(g);
  for (mask_t m = 0; m < 64; ++m) CHECK(lhs[m] == doctest::Approx(2 * af[m] + ag[m]).epsilon(1e-12));
}

TEST_CASE("multilinear extension") {
  const auto a = mobius(or_game());
  const double one[] = {1, 1};
  CHECK(eval_multilinear_extension(a, one) == 1.0);
  const double x[] = {0.3, 0.8};
  CHECK(eval_multilinear_extension(a, x) == doctest::Approx(0.3 + 0.8 - 0.3 * 0.8).epsilon(1e-15));

  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = ref::random_int(rng, 1, 9);
    const auto v = ref::random_table(rng, n);
    const auto am = mobius(ref::function(n, v));
    const mask_t m = ref::random_mask(rng, n);
    std::vector<double> vertex(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertex[static_cast<std::size_t>(i)] = (m >> i & 1u) ? 1.0 : 0.0;
    CHECK(eval_multilinear_extension(am, vertex) == doctest::Approx(v[m]).epsilon(1e-12));

    // At an interior point the extension is the expectation of f under the
    // independent coalition model.
    const auto p = ref::random_probabilities(rng, n);
    CHECK(std::abs(eval_multilinear_extension(am, p) - ref::expectation(p, v)) <= 1e-12);
  }

  const double short_point[] = {0.5};
  CHECK_THROWS_AS(eval_multilinear_extension(a, short_point), DimensionError);
  const double outside[] = {0.5, 1.5};
  CHECK_THROWS_AS(eval_multilinear_extension(a, outside), DomainError);
  const double negative[] = {-0.1, 0.5};
  CHECK_THROWS_AS(eval_multilinear_extension(a, negative), DomainError);
  const double nan_point[] = {std::numeric_limits<double>::quiet_NaN(), 0.5};
  CHECK_THROWS_AS(eval_multilinear_extension(a, nan_point), DomainError);
}

TEST_CASE("s-difference") {
  const auto f = or_game();
  CHECK(ref::table(s_difference(f, CoalitionMask::empty(2))) == ref::table(f));
  const auto d1 = s_difference(f, CoalitionMask::from_players(2, {1}));
  CHECK(d1[0b00] == 1.0);
  CHECK(d1[0b10] == 0.0);
  CHECK(d1[0b01] == d1[0b00]);
  CHECK(d1[0b11] == d1[0b10]);

  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = ref::random_int(rng, 1, 7);
    const auto v = ref::random_table(rng, n);
    const mask_t s = ref::random_mask(rng, n);
    const auto d = s_difference(ref::function(n, v), CoalitionMask(n, s));
    for (mask_t t = 0; t < v.size(); ++t) {
      CHECK(std::abs(d[t] - ref::delta(v, s, t)) <= 1e-12);
      CHECK(d[t] == d[t & ~s]);
    }
  }
}

TEST_CASE("sigma_s") {
  const auto f = or_game();
  const auto s1 = sigma_s(f, CoalitionMask::from_players(2, {1}));
  CHECK(ref::table(s1) == std::vector<double>{1, 1, 0, 0});
  CHECK(ref::table(sigma_s(f, CoalitionMask::empty(2))) == std::vector<double>{0, 0, 0, 0});

  SUBCASE("unanimity games map to unanimity games") {
    const int n = 4;
    for (mask_t t = 0; t < 16; ++t) {
      for (mask_t s = 0; s < 16; ++s) {
        const auto got = sigma_s(unanimity_game(n, {n, t}), {n, s});
        const auto want = (s & t) ? unanimity_game(n, {n, t & ~s})
                                  : PseudoBooleanFunction::constant(n, 0.0);
        CHECK(ref::table(got) == ref::table(want));
      }
    }
  }
  SUBCASE("matches the pinning definition") {
    Rng rng(16);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = ref::random_int(rng, 1, 7);
      const auto v = ref::random_table(rng, n);
      const mask_t s = ref::random_mask(rng, n);
      const auto g = sigma_s(ref::function(n, v), CoalitionMask(n, s));
      for (mask_t t = 0; t < v.size(); ++t) CHECK(g[t] == ref::sigma(v, s, t));
    }
  }
}

TEST_CASE("unanimity games") {
  CHECK(ref::table(unanimity_game(2, CoalitionMask::full(2))) == std::vector<double>{0, 0, 0, 1});
  CHECK(ref::table(unanimity_game(2, CoalitionMask::empty(2))) == std::vector<double>{1, 1, 1, 1});
  const auto u = unanimity_game(3, CoalitionMask::from_players(3, {2}));
  int ones = 0;
  for (mask_t m = 0; m < 8; ++m) {
    CHECK(u[m] == ((m & 0b010) ? 1.0 : 0.0));
    ones += u[m] == 1.0;
  }
  CHECK(ones == 4);
  CHECK_THROWS_AS(unanimity_game(3, CoalitionMask::full(2)), DimensionError);
}

TEST_CASE("generators") {
  const double weights[] = {2, 2, 1};
  const auto wv = weighted_voting_game(3, weights);
  CHECK(wv[CoalitionMask::from_players(3, {1, 2})] == 1.0);
  CHECK(wv[CoalitionMask::from_players(3, {1, 3})] == 1.0);
  CHECK(wv[CoalitionMask::from_players(3, {3})] == 0.0);
  CHECK(wv[CoalitionMask::from_players(3, {2, 3})] == 1.0);
  CHECK(wv[CoalitionMask::from_players(3, {1})] == 0.0);

  CHECK(ref::table(random_game(6, 99)) == ref::table(random_game(6, 99)));
  CHECK(ref::table(random_game(6, 99)) != ref::table(random_game(6, 100)));
  const auto coin = random_game(5, 3, RandomDistribution::boolean);
  for (double v : coin.values()) {
    CHECK((v == 0.0 || v == 1.0));
  }
  const auto mono = random_game(6, 4, RandomDistribution::monotone);
  for (mask_t m = 0; m < 64; ++m) {
    for (int i = 0; i < 6; ++i) CHECK(mono[m] <= mono[m | (mask_t{1} << i)]);
  }
  CHECK(parse_distribution("boolean") == RandomDistribution::boolean);
  CHECK(to_string(RandomDistribution::monotone) == "monotone");
  CHECK_THROWS_AS(parse_distribution("gaussian"), DomainError);
}
