#pragma once

#include <vector>

#include "stacksort/bigint.hpp"
#include "stacksort/word.hpp"

namespace stacksort {

/// All descent vectors with `types` entries summing to `total`, in
/// lexicographic order.
std::vector<DescentVector> descent_vectors(unsigned total, unsigned types);

/// Generalized binomial: 0 for b < 0, otherwise a(a-1)...(a-b+1)/b! for any
/// integer a.
BigInt binomial(long a, long b);
BigInt factorial(unsigned long n);

/// Integer quotient; throws InternalError when d does not divide n.
BigInt exact_div(const BigInt& n, const BigInt& d);

/// (1/n) prod_i C(n, k_i), n = 1 + sum k_i: stack-sortable r-permutations
/// with k_i descents of type i (r = types - 1).
BigInt ss_count(const DescentVector& k);

/// (1/n^2) prod_i (n/(n-k_i)) C(2n-1-k_i, k_i), n = 1 + sum k_i: two-stack-
/// sortable r-permutations by descent type. Throws DomainError if some k_i >= n.
BigInt twoss_descent_count(const DescentVector& k);

/// 2(r+1)((2r+1)n)! / (n!(2rn+2)!).
BigInt twoss_total(unsigned n, unsigned r);

/// 2(3n)! / ((n+1)!(2n+1)!).
BigInt west_number(unsigned n);

/// (n+k)!(2n-k-1)! / ((k+1)!(n-k)!(2k+1)!(2n-2k-1)!): two-stack-sortable
/// permutations of [n] with k descents, 0 <= k < n.
BigInt bmt_descent_count(unsigned n, unsigned k);

BigInt catalan(unsigned n);
/// (1/n) C(n,k) C(n,k-1), 1 <= k <= n.
BigInt narayana(unsigned n, unsigned k);

/// [t^i] c(t)^n = n/(2i+n) C(2i+n, i) for any integer n. Throws DomainError
/// when 2i+n = 0.
BigInt catalan_power_coeff(long n, unsigned long i);

/// (1/n^2) prod_i (n/(n+k_i)) C(2n+2k_i, k_i), n = 1 + sum k_i.
BigInt h_variant_count(const DescentVector& k);

/// The two-stack-sortable descent formula as a function of a free integer n:
/// (1/n^2) prod_i (n/(n-k_i)) C(2n-1-k_i, k_i). DomainError at n = 0 or
/// n = k_i.
BigRational formula_a(long n, const DescentVector& k);
/// (1/n^2) prod_i (n/(n+k_i)) C(2n+2k_i, k_i) for a free integer n.
BigRational formula_b(long n, const DescentVector& k);

/// A(-n; k) == (-1)^(n-1) B(n; k).
bool reflection_check(long n, const DescentVector& k);

/// det of the (r+1)x(r+1) matrix with entries delta_ij + (delta_ij - 1) x_j,
/// by exact elimination.
BigRational det_matrix(const std::vector<BigRational>& x);
/// E(x) (1 - sum x_i/(1+x_i)). DomainError if some x_i = -1.
BigRational det_closed_form(const std::vector<BigRational>& x);
bool det_identity_check(const std::vector<BigRational>& x);

/// sum_{i=0}^n (-1)^(n-i) (1/n) C(n,i) [C(3n+i, 2i-1-n) - 2 C(3n+i, 2i-2-n)];
/// 1 at n = 0.
BigInt lambda12_p1_coeff(unsigned n);

}  // namespace stacksort
