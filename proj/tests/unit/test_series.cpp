#include <doctest.h>

#include <random>

#include "stacksort/series.hpp"
#include "stacksort/series_lab.hpp"

using namespace stacksort;

namespace {

RingPtr small_ring() { return make_ring({"x", "y", "z"}, {0, 0, 1}, {5, 3}); }

Series random_series(const RingPtr& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4), d(1, 3);
  Series s(ring);
  for (int i = 0; i < 6; ++i) s.add_term({e(rng), e(rng), e(rng)}, BigRational(c(rng), d(rng)));
  return s;
}

}  // namespace

TEST_CASE("ring truncation") {
  auto ring = small_ring();
  CHECK(ring->admits({2, 3, 3}));
  CHECK_FALSE(ring->admits({3, 3, 0}));
  CHECK_FALSE(ring->admits({0, 0, 4}));
  CHECK(ring->admits({-2, 7, 0}));
  CHECK(ring->index("z") == 2);
  CHECK(ring->format_monomial({1, 0, 2}) == "x*z^2");
  auto x = Series::variable(ring, "x");
  CHECK(x.pow(5).terms().size() == 1);
  CHECK(x.pow(6).is_zero());
}

TEST_CASE("ring axioms on random elements") {
  auto ring = small_ring();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Series a = random_series(ring, rng), b = random_series(ring, rng), c = random_series(ring, rng);
    CHECK((a + b - (b + a)).is_zero());
    CHECK((a * b - b * a).is_zero());
    CHECK(((a * b) * c - a * (b * c)).is_zero());
    CHECK((a * (b + c) - (a * b + a * c)).is_zero());
    CHECK((a - a).is_zero());
    CHECK((a * Series::constant(ring, 1) - a).is_zero());
    CHECK((a * BigRational(0)).is_zero());
    CHECK((a.pow(3) - a * a * a).is_zero());
  }
}

TEST_CASE("inverse and composition") {
  auto ring = small_ring();
  std::mt19937_64 rng(5);
  auto one = Series::constant(ring, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Series a = random_series(ring, rng);
    Series u = a - Series::constant(ring, a.constant_term()) + Series::constant(ring, BigRational(3, 2));
    CHECK((u * u.inverse() - one).is_zero());
  }
  CHECK_THROWS(Series(ring).inverse());
  auto x = Series::variable(ring, "x");
  // 1/(1-x) via composition.
  auto geo = x.compose([](unsigned) { return BigRational(1); });
  CHECK((geo * (one - x) - one).is_zero());
  CHECK_THROWS((one + Series::monomial(ring, {-1, 0, 0}, 1)).inverse());
}

TEST_CASE("shift, slice, rebound and Laurent products") {
  auto ring = small_ring();
  auto x = Series::variable(ring, "x");
  auto z = Series::variable(ring, "z");
  auto s = (x + z + x * z).pow(2);
  CHECK(s.slice(2, 1).coeff({1, 0, 0}) == 2);
  CHECK(s.slice(2, 1).coeff({2, 0, 0}) == 2);
  auto inv_z = Series::monomial(ring, {0, 0, -1}, 1);
  CHECK((z * inv_z - Series::constant(ring, 1)).is_zero());
  CHECK(s.shift(2, -2).min_exponent(2) == -2);
  CHECK(s.max_exponent(0) == 2);
  auto tight = ring->with_bounds({1, 3});
  CHECK(s.rebound(tight).max_exponent(0) == 1);
  auto wide = ring->with_bounds({9, 9});
  auto prod = multiply(x.pow(5), x.pow(4), wide);
  CHECK(prod.coeff({9, 0, 0}) == 1);
  CHECK(Series(ring).to_string() == "0");
}

TEST_CASE("symmetric polynomials") {
  auto ring = x_ring(2, 4);
  std::vector<std::size_t> vars{0, 1, 2};
  auto e2 = sym_poly(SymKind::Elementary, 2, ring, vars);
  CHECK(e2.terms().size() == 3);
  auto h2 = sym_poly(SymKind::Homogeneous, 2, ring, vars);
  CHECK(h2.terms().size() == 6);
  CHECK(sym_poly(SymKind::Elementary, 4, ring, vars).is_zero());
  CHECK((sym_poly(SymKind::Elementary, 0, ring, vars) - Series::constant(ring, 1)).is_zero());
  // sum_j (-1)^j e_j h_{m-j} = 0 for m >= 1.
  for (unsigned m = 1; m <= 4; ++m) {
    Series acc(ring);
    for (unsigned j = 0; j <= m; ++j) {
      auto term = sym_poly(SymKind::Elementary, j, ring, vars) * sym_poly(SymKind::Homogeneous, m - j, ring, vars);
      acc += j % 2 ? -term : term;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("functional equations hold on the recurrence bundle and catch a perturbation") {
  for (unsigned r = 1; r <= 2; ++r) {
    auto b = g_f_by_recurrence(r, 4, 4);
    CHECK(verify_fe(b, 4).ok());
    auto bad = b;
    auto& cell = bad.g[2][1];
    REQUIRE_FALSE(cell.is_zero());
    auto e = cell.terms().begin()->first;
    cell.add_term(e, BigRational(1));
    auto rep = verify_fe(bad, 4);
    CHECK_FALSE(rep.ok());
    CHECK(rep.mismatch_count() > 0);
    CHECK_FALSE(rep.mismatches.empty());
  }
}
