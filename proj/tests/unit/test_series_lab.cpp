#include <doctest.h>

#include "stacksort/closed_forms.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/series_lab.hpp"

using namespace stacksort;

namespace {

void require_ok(const SeriesReport& rep) {
  for (const auto& m : rep.mismatches)
    MESSAGE(m.check << " at " << m.monomial << ": expected " << m.expected << ", got " << m.actual);
  CHECK(rep.ok());
}

}  // namespace

TEST_CASE("bundle agrees with brute force at small size") {
  auto b = g_f_by_recurrence(1, 2, 4);
  // [x^k] g_1 summed over monomials of degree d equals the two-stack-sortable
  // count of [d+1].
  for (unsigned d = 0; d <= 4; ++d) {
    BigRational s = 0;
    for (const auto& [e, c] : b.g[1][d].terms()) s += c;
    CHECK(s == BigRational(count_2ss(d + 1, 1)));
  }
  CHECK(b.g[0][0].constant_term() == 1);
  CHECK(b.g[0][1].is_zero());
}

TEST_CASE("verify_fe") {
  require_ok(verify_fe(1, 3, 5));
  require_ok(verify_fe(2, 3, 4));
}

TEST_CASE("y substitution") {
  require_ok(y_residual(1, 5));
  require_ok(y_residual(2, 4));
  require_ok(y_residual(1, 5, SymKind::Homogeneous));
}

TEST_CASE("closed-form solution") {
  require_ok(verify_solution_2ss(1, 3, 5));
  require_ok(verify_solution_2ss(2, 3, 3));
}

TEST_CASE("P pipeline and Zeilberger") {
  require_ok(verify_p_pipeline(1, 4, 4));
  require_ok(verify_p_pipeline(2, 3, 3));
  require_ok(verify_zeilberger(4));
  require_ok(verify_zeilberger(0));
}

TEST_CASE("h-variant") {
  auto rep = verify_h_variant(1, 3, 4);
  require_ok(rep);
  auto b = g_f_by_recurrence(1, 1, 3, SymKind::Homogeneous);
  // [x_0^a x_1^b] g_1 = B(a+b+1; (a, b)).
  for (unsigned d = 0; d <= 3; ++d)
    for (const auto& [e, c] : b.g[1][d].terms()) {
      DescentVector k({static_cast<std::uint64_t>(e[0]), static_cast<std::uint64_t>(e[1])});
      CHECK(c == BigRational(h_variant_count(k)));
    }
}

TEST_CASE("lambda (1,2) and identities") {
  require_ok(verify_lambda12(4));
  require_ok(verify_identities(6));
}

TEST_CASE("dispatch") {
  CHECK(verify_series("fe", 1, 2, 2).ok());
  CHECK_THROWS(verify_series("nope", 1, 2, 2));
  CHECK_THROWS(verify_series("zeilberger", 2, 2, 2));
}
