#include "stacksort/closed_forms.hpp"

#include "stacksort/error.hpp"

namespace stacksort {

namespace {

long descent_n(const DescentVector& k) {
  return 1 + static_cast<long>(k.total());
}

}  // namespace

std::vector<DescentVector> descent_vectors(unsigned total, unsigned types) {
  std::vector<DescentVector> out;
  if (types == 0) return out;
  DescentVector k(types);
  auto rec = [&](auto&& self, unsigned slot, unsigned left) -> void {
    if (slot + 1 == types) {
      k[slot] = left;
      out.push_back(k);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      k[slot] = v;
      self(self, slot + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

BigInt binomial(long a, long b) {
  if (b < 0) return 0;
  BigInt top = a;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt exact_div(const BigInt& n, const BigInt& d) {
  if (d == 0) throw InternalError("division by zero");
  if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
    throw InternalError(to_string(n) + " is not divisible by " + to_string(d));
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt ss_count(const DescentVector& k) {
  if (k.types() == 0) throw InvalidInput("empty descent vector");
  long n = descent_n(k);
  BigInt num = 1;
  for (std::size_t i = 0; i < k.types(); ++i) num *= binomial(n, static_cast<long>(k[i]));
  return exact_div(num, n);
}

BigInt twoss_descent_count(const DescentVector& k) {
  if (k.types() == 0) throw InvalidInput("empty descent vector");
  long n = descent_n(k);
  BigInt num = 1, den = BigInt(n) * n;
  for (std::size_t i = 0; i < k.types(); ++i) {
    long ki = static_cast<long>(k[i]);
    if (ki >= n) throw DomainError("k_i must be smaller than n");
    num *= BigInt(n) * binomial(2 * n - 1 - ki, ki);
    den *= n - ki;
  }
  return exact_div(num, den);
}

BigInt twoss_total(unsigned n, unsigned r) {
  if (n == 0 || r == 0) throw InvalidInput("n and r must be positive");
  unsigned long N = n, R = r;
  BigInt num = 2 * BigInt(R + 1) * factorial((2 * R + 1) * N);
  return exact_div(num, factorial(N) * factorial(2 * R * N + 2));
}

BigInt west_number(unsigned n) {
  unsigned long N = n;
  return exact_div(2 * factorial(3 * N), factorial(N + 1) * factorial(2 * N + 1));
}

BigInt bmt_descent_count(unsigned n, unsigned k) {
  if (k >= n) throw DomainError("need k < n");
  unsigned long N = n, K = k;
  BigInt num = factorial(N + K) * factorial(2 * N - K - 1);
  BigInt den = factorial(K + 1) * factorial(N - K) * factorial(2 * K + 1) * factorial(2 * N - 2 * K - 1);
  return exact_div(num, den);
}

BigInt catalan(unsigned n) { return exact_div(binomial(2L * n, n), n + 1); }

BigInt narayana(unsigned n, unsigned k) {
  if (k == 0 || k > n) return 0;
  return exact_div(binomial(n, k) * binomial(n, static_cast<long>(k) - 1), n);
}

BigInt catalan_power_coeff(long n, unsigned long i) {
  long d = 2 * static_cast<long>(i) + n;
  if (d == 0) throw DomainError("[t^i] c^n(t) is undefined by the coefficient formula when 2i + n = 0");
  return exact_div(BigInt(n) * binomial(d, static_cast<long>(i)), d);
}

BigInt h_variant_count(const DescentVector& k) {
  if (k.types() == 0) throw InvalidInput("empty descent vector");
  BigRational b = formula_b(descent_n(k), k);
  if (b.get_den() != 1) throw InternalError("B(n;k) is not an integer");
  return b.get_num();
}

BigRational formula_a(long n, const DescentVector& k) {
  if (n == 0) throw DomainError("n = 0");
  BigRational out(1, 1);
  out /= BigRational(BigInt(n) * n);
  for (std::size_t i = 0; i < k.types(); ++i) {
    long ki = static_cast<long>(k[i]);
    if (n == ki) throw DomainError("n = k_i");
    BigRational f(BigInt(BigInt(n) * binomial(2 * n - 1 - ki, ki)), BigInt(n - ki));
    f.canonicalize();
    out *= f;
  }
  out.canonicalize();
  return out;
}

BigRational formula_b(long n, const DescentVector& k) {
  if (n == 0) throw DomainError("n = 0");
  BigRational out(1, 1);
  out /= BigRational(BigInt(n) * n);
  for (std::size_t i = 0; i < k.types(); ++i) {
    long ki = static_cast<long>(k[i]);
    if (n + ki == 0) throw DomainError("n = -k_i");
    BigRational f(BigInt(BigInt(n) * binomial(2 * n + 2 * ki, ki)), BigInt(n + ki));
    f.canonicalize();
    out *= f;
  }
  out.canonicalize();
  return out;
}

bool reflection_check(long n, const DescentVector& k) {
  BigRational lhs = formula_a(-n, k);
  BigRational rhs = formula_b(n, k);
  if ((n - 1) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

BigRational det_matrix(const std::vector<BigRational>& x) {
  const std::size_t m = x.size();
  std::vector<std::vector<BigRational>> a(m, std::vector<BigRational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = i == j ? BigRational(1) : BigRational(-x[j]);
  BigRational det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      BigRational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < m; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

BigRational det_closed_form(const std::vector<BigRational>& x) {
  BigRational e = 1, s = 0;
  for (const auto& xi : x) {
    if (xi == -1) throw DomainError("x_i = -1");
    e *= 1 + xi;
    s += xi / (1 + xi);
  }
  return e * (1 - s);
}

bool det_identity_check(const std::vector<BigRational>& x) { return det_matrix(x) == det_closed_form(x); }

BigInt lambda12_p1_coeff(unsigned n) {
  if (n == 0) return 1;
  long N = n;
  BigInt sum = 0;
  for (long i = 0; i <= N; ++i) {
    BigInt term = binomial(N, i) * (binomial(3 * N + i, 2 * i - 1 - N) - 2 * binomial(3 * N + i, 2 * i - 2 - N));
    if ((N - i) % 2 != 0) term = -term;
    sum += term;
  }
  return exact_div(sum, N);
}

}  // namespace stacksort
