#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stacksort/series.hpp"

namespace stacksort {

enum class SymKind { Elementary, Homogeneous };

/// e_j or h_j in the listed variables of `ring`.
Series sym_poly(SymKind kind, unsigned j, const RingPtr& ring, const std::vector<std::size_t>& vars);

/// prod_i (1 + w y_i).
Series e_product(const std::vector<Series>& y, const Series& w);
/// prod_i 1/(1 - w y_i).
Series h_product(const std::vector<Series>& y, const Series& w);

/// Ring over x_0..x_r with a single group of the given bound.
RingPtr x_ring(unsigned r, int x_degree);
/// Ring over x_0..x_r and z; groups {x}, {z}.
RingPtr xz_ring(unsigned r, int x_degree, int z_order);

/// g_k and f_k split by x-degree: g[k][d] is the degree-d part of g_k, i.e.
/// the weight sum over two-stack-sortable k-tuples of [k+d] with nonempty
/// components; f[k][d] is the degree-d part of f_k. Entries exist for
/// k + d <= k_max + x_degree and d <= x_degree, so g_k and f_k are complete
/// to x-degree x_degree for k <= k_max.
struct SeriesBundle {
  SymKind kind = SymKind::Elementary;
  unsigned r = 1;
  unsigned k_max = 0;
  unsigned x_degree = 0;
  RingPtr ring;
  std::vector<std::vector<Series>> g, f;

  /// Everything stored for g_k / f_k (partial above k_max).
  Series g_k(unsigned k) const;
  Series f_k(unsigned k) const;
  /// sum_k g_k z^k inside the target (x, z) ring.
  Series G(const RingPtr& xz) const;
  Series F(const RingPtr& xz) const;
};

SeriesBundle g_f_by_recurrence(unsigned r, unsigned k_max, unsigned x_degree,
                               SymKind kind = SymKind::Elementary);

struct Mismatch {
  std::string check;
  std::string monomial;
  std::string expected;
  std::string actual;
};

struct SeriesCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
};

struct SeriesReport {
  std::string which;
  unsigned r = 0;
  unsigned z_order = 0;
  unsigned x_degree = 0;
  std::vector<SeriesCheck> checks;
  /// First few mismatches per check, for diagnostics.
  std::vector<Mismatch> mismatches;

  std::uint64_t checked_coeffs() const;
  std::uint64_t mismatch_count() const;
  bool ok() const { return mismatch_count() == 0 && !checks.empty(); }

  /// Coefficientwise comparison over the union of both supports.
  void compare(const std::string& name, const Series& expected, const Series& actual);
  void expect_zero(const std::string& name, const Series& s);
  void expect(const std::string& name, bool holds, const std::string& detail = {});
  void merge(const SeriesReport& other);
};

/// f_k = sum_j g_{k+j} e_j (or h_j) and G = 1 + zFG on a bundle,
/// for k <= z_order (needs z_order <= bundle.k_max).
SeriesReport verify_fe(const SeriesBundle& b, unsigned z_order);
/// verify_fe on a fresh bundle plus agreement of g_1 and f_k with brute force.
SeriesReport verify_fe(unsigned r, unsigned z_order, unsigned x_degree);

/// y_i(x) with x_i = y_i(1+y_i)/E^2(y) (or y_i(1-y_i)/H^2(y)), by fixed-point
/// iteration in the ring of `x`.
std::vector<Series> y_substitution(unsigned r, unsigned x_degree, SymKind kind = SymKind::Elementary);
SeriesReport y_residual(unsigned r, unsigned x_degree, SymKind kind = SymKind::Elementary);

/// Closed forms G = c(t)E(y)/E(y,c(t)), F = (E(y)/t)(E(y) - E(y,c(t))/c(t)),
/// t = zE^2(y), against the recurrence; g_1 closed form; the factorization of
/// E(x,1/z) in cleared form; nonnegative z-powers of G E(x,1/z) - F vanish.
SeriesReport verify_solution_2ss(unsigned r, unsigned z_order, unsigned x_degree);

/// p_k from g (empty components allowed), the P equation, the closed solution in y with
/// x = y/(1+y)^(2r+1), deg_y p_k <= 2k, p_1 = 1 + y - r y^2, and p_n^(k)
/// against brute force for small n.
SeriesReport verify_p_pipeline(unsigned r, unsigned z_order, unsigned x_degree);

/// r = 1: Phi-bar_i = x^i p_{i+1} against brute force, Phi(x,1) = Phi-bar(x,0),
/// and both forms of Zeilberger's equation.
SeriesReport verify_zeilberger(unsigned x_degree);

/// h in place of e: recurrence vs closed forms with H(y) = prod 1/(1-y_i),
/// x_i = y_i(1-y_i)/H^2(y); [x^k] g_1 against B(n;k); H(x,1/z) factorization.
SeriesReport verify_h_variant(unsigned r, unsigned z_order, unsigned x_degree);

/// lambda = (1,2): refined g_1 in u, x_0, x_1, x_2 against by-descent brute
/// force for n <= n_max - 1, and [u^n] p_1 with y = u(1+y)^3(1+y-y^2) against
/// brute force and the coefficient formula for n <= n_max.
SeriesReport verify_lambda12(unsigned n_max);

/// t c^2 - c + 1 = 0, (t c)^(n-1) + c^(1-n) polynomial of degree <= (n-1)/2,
/// and sum (1-i) e_i(y) = E(y)(1 - sum y_i/(1+y_i)) for r <= 4.
SeriesReport verify_identities(unsigned t_order);

/// Dispatch by name: fe, solution, p, zeilberger, h, lambda12, identities.
SeriesReport verify_series(const std::string& which, unsigned r, unsigned z_order, unsigned x_degree);

}  // namespace stacksort
