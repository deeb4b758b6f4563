#include <doctest.h>

#include <random>

#include "stacksort/closed_forms.hpp"
#include "stacksort/error.hpp"

using namespace stacksort;

namespace {

DescentVector dv(std::initializer_list<std::uint64_t> l) { return DescentVector(std::vector<std::uint64_t>(l)); }

BigInt sum_over(unsigned total, unsigned types, BigInt (*f)(const DescentVector&)) {
  BigInt s = 0;
  for (const auto& k : descent_vectors(total, types)) s += f(k);
  return s;
}

}  // namespace

TEST_CASE("binomial and friends") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(2, 5) == 0);
  CHECK(factorial(10) == 3628800);
  CHECK(exact_div(BigInt(12), BigInt(4)) == 3);
  CHECK_THROWS_AS(exact_div(BigInt(12), BigInt(5)), InternalError);
  CHECK(descent_vectors(2, 2).size() == 3);
  CHECK(descent_vectors(3, 3).size() == 10);
  CHECK(descent_vectors(0, 3) == std::vector<DescentVector>{dv({0, 0, 0})});
}

TEST_CASE("stack-sortable formula") {
  CHECK(ss_count(dv({1, 1})) == 3);
  CHECK(ss_count(dv({0, 0})) == 1);
  CHECK(ss_count(dv({0, 0, 0})) == 1);
  CHECK(sum_over(3, 2, ss_count) == 14);
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(sum_over(n - 1, 2, ss_count) == catalan(n));
    for (unsigned k = 1; k <= n; ++k) CHECK(ss_count(dv({k - 1, n - k})) == narayana(n, k));
  }
}

TEST_CASE("two-stack-sortable formulas") {
  CHECK(twoss_descent_count(dv({1, 1})) == 4);
  CHECK(twoss_descent_count(dv({0, 2})) == 1);
  CHECK(sum_over(3, 2, twoss_descent_count) == 22);
  CHECK_THROWS_AS(formula_a(2, dv({2, 0})), DomainError);
  CHECK(twoss_total(1, 1) == 1);
  CHECK(twoss_total(4, 1) == 22);
  CHECK(twoss_total(3, 2) == 15);
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(twoss_total(n, 1) == west_number(n));
    CHECK(sum_over(n - 1, 2, twoss_descent_count) == west_number(n));
    for (unsigned k = 0; k < n; ++k) CHECK(twoss_descent_count(dv({n - 1 - k, k})) == bmt_descent_count(n, k));
  }
  for (unsigned r = 2; r <= 3; ++r)
    for (unsigned n = 1; n <= 6; ++n) CHECK(sum_over(n - 1, r + 1, twoss_descent_count) == twoss_total(n, r));
}

TEST_CASE("catalan powers") {
  long expect[] = {1, 1, 2, 5, 14};
  for (unsigned i = 0; i < 5; ++i) CHECK(catalan_power_coeff(1, i) == expect[i]);
  CHECK(catalan_power_coeff(3, 2) == 9);
  CHECK_THROWS_AS(catalan_power_coeff(0, 0), DomainError);
  CHECK(catalan_power_coeff(0, 3) == 0);
  CHECK_THROWS_AS(catalan_power_coeff(-4, 2), DomainError);
  // c^-1 = 1 - t c: coefficients 1, -1, -1, -2, -5.
  CHECK(catalan_power_coeff(-1, 0) == 1);
  CHECK(catalan_power_coeff(-1, 3) == -2);
}

TEST_CASE("h-variant and reflection") {
  CHECK(h_variant_count(dv({0, 0})) == 1);
  CHECK(h_variant_count(dv({1, 0})) == 1);
  CHECK(reflection_check(1, dv({0, 0})));
  CHECK(reflection_check(4, dv({2, 1})));
  for (unsigned r = 1; r <= 2; ++r)
    for (unsigned s = 0; s <= 4; ++s)
      for (const auto& k : descent_vectors(s, r + 1)) CHECK(reflection_check(1 + static_cast<long>(s), k));
  CHECK(formula_b(3, dv({1, 1})) == BigRational(h_variant_count(dv({1, 1}))));
}

TEST_CASE("determinant identity") {
  CHECK(det_identity_check({BigRational(5, 7)}));
  CHECK(det_matrix({BigRational(5, 7)}) == 1);
  CHECK(det_matrix({BigRational(1), BigRational(1)}) == 0);
  CHECK(det_closed_form({BigRational(1), BigRational(1)}) == 0);
  CHECK_THROWS_AS(det_closed_form({BigRational(-1), BigRational(2)}), DomainError);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigRational> x(1 + trial % 5);
    for (auto& v : x) {
      do {
        v = BigRational(num(rng), den(rng));
        v.canonicalize();
      } while (v == -1);
    }
    CHECK(det_identity_check(x));
  }
}

TEST_CASE("lambda (1,2) coefficient") {
  CHECK(lambda12_p1_coeff(0) == 1);
  CHECK(lambda12_p1_coeff(1) == 1);
}
