#include "stacksort/series_lab.hpp"

#include <algorithm>

#include "stacksort/closed_forms.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"

namespace stacksort {

namespace {

constexpr std::size_t kMismatchesPerCheck = 5;

BigRational catalan_coeff(unsigned i) { return BigRational(catalan(i)); }

std::vector<std::string> x_names(unsigned r) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= r; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// Moves a series into a ring that has (at least) the same variable names.
Series lift(const Series& s, const RingPtr& target) {
  const Ring& from = *s.ring();
  std::vector<std::size_t> where(from.size());
  for (std::size_t v = 0; v < from.size(); ++v) where[v] = target->index(from.name(v));
  return s.map_monomials(target, [&](const Exponents& e) {
    Exponents out(target->size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) out[where[v]] += e[v];
    return out;
  });
}

std::vector<Series> lift_all(const std::vector<Series>& v, const RingPtr& target) {
  std::vector<Series> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(lift(s, target));
  return out;
}

Series one(const RingPtr& r) { return Series::constant(r, 1); }

// Series over x_0..x_r (first r+1 variables of `ring`) from a histogram.
Series histogram_series(const Histogram& h, const RingPtr& ring, const Exponents& extra) {
  Series s(ring);
  for (const auto& [k, v] : h) {
    Exponents e = extra;
    for (std::size_t i = 0; i < k.types(); ++i) e[i] += static_cast<int>(k[i]);
    s.add_term(e, BigRational(v));
  }
  return s;
}

unsigned brute_limit(unsigned r) {
  switch (r) {
    case 1: return 6;
    case 2: return 4;
    case 3: return 3;
    default: return 2;
  }
}

bool tuple_is_2ss(const std::vector<WordView>& comps, Word& once, Word& twice) {
  once.clear();
  for (auto c : comps) detail::stack_sort_into(c, once);
  twice.clear();
  detail::stack_sort_into(once, twice);
  return is_identity(twice);
}

// Fixed point y = step(y) for a vector of series; stops when unchanged.
template <class Step>
std::vector<Series> fixed_point(std::vector<Series> y, Step step, std::size_t limit) {
  for (std::size_t it = 0; it <= limit; ++it) {
    auto next = step(y);
    bool same = true;
    for (std::size_t i = 0; i < y.size() && same; ++i) same = (next[i] - y[i]).is_zero();
    y = std::move(next);
    if (same) return y;
  }
  throw InternalError("fixed-point iteration did not settle");
}

}  // namespace

Series sym_poly(SymKind kind, unsigned j, const RingPtr& ring, const std::vector<std::size_t>& vars) {
  Series out(ring);
  Exponents e(ring->size(), 0);
  // choose j variables (with repetition for h), nondecreasing index order
  auto rec = [&](auto&& self, std::size_t from, unsigned left) -> void {
    if (left == 0) {
      out.add_term(e, 1);
      return;
    }
    for (std::size_t i = from; i < vars.size(); ++i) {
      ++e[vars[i]];
      self(self, kind == SymKind::Elementary ? i + 1 : i, left - 1);
      --e[vars[i]];
    }
  };
  rec(rec, 0, j);
  return out;
}

Series e_product(const std::vector<Series>& y, const Series& w) {
  Series out = one(w.ring());
  for (const auto& yi : y) out = out * (one(w.ring()) + w * yi);
  return out;
}

Series h_product(const std::vector<Series>& y, const Series& w) {
  Series out = one(w.ring());
  for (const auto& yi : y) out = out * (one(w.ring()) - w * yi).inverse();
  return out;
}

RingPtr x_ring(unsigned r, int x_degree) {
  return make_ring(x_names(r), std::vector<unsigned>(r + 1, 0), {x_degree});
}

RingPtr xz_ring(unsigned r, int x_degree, int z_order) {
  auto names = x_names(r);
  names.push_back("z");
  std::vector<unsigned> groups(r + 1, 0);
  groups.push_back(1);
  return make_ring(names, groups, {x_degree, z_order});
}

Series SeriesBundle::g_k(unsigned k) const {
  Series s(ring);
  if (k < g.size())
    for (const auto& part : g[k]) s += part;
  return s;
}

Series SeriesBundle::f_k(unsigned k) const {
  Series s(ring);
  if (k < f.size())
    for (const auto& part : f[k]) s += part;
  return s;
}

namespace {

Series assemble(const std::vector<std::vector<Series>>& parts, const RingPtr& xz) {
  const std::size_t zv = xz->index("z");
  Series out(xz);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (static_cast<int>(k) > xz->bound(xz->group_of(zv))) break;
    for (const auto& part : parts[k]) {
      Series lifted = lift(part, xz);
      out += lifted.shift(zv, static_cast<int>(k));
    }
  }
  return out;
}

}  // namespace

Series SeriesBundle::G(const RingPtr& xz) const { return assemble(g, xz); }
Series SeriesBundle::F(const RingPtr& xz) const { return assemble(f, xz); }

SeriesBundle g_f_by_recurrence(unsigned r, unsigned k_max, unsigned x_degree, SymKind kind) {
  SeriesBundle b;
  b.kind = kind;
  b.r = r;
  b.k_max = k_max;
  b.x_degree = x_degree;
  b.ring = x_ring(r, static_cast<int>(x_degree));
  const unsigned N = k_max + x_degree;
  const unsigned D = x_degree;
  b.g.assign(N + 1, std::vector<Series>(D + 1, Series(b.ring)));
  b.f.assign(N + 1, std::vector<Series>(D + 1, Series(b.ring)));
  std::vector<std::size_t> vars(r + 1);
  for (unsigned i = 0; i <= r; ++i) vars[i] = i;
  std::vector<Series> sym;
  for (unsigned j = 0; j <= D; ++j) sym.push_back(sym_poly(kind, j, b.ring, vars));

  b.g[0][0] = one(b.ring);
  for (unsigned n = 0; n <= N; ++n) {
    // g_n^(k) = sum over a + m = k - 1 and n1 + n2 = n - 1 of f_{n1}^(a) g_{n2}^(m)
    for (unsigned d = 0; d <= std::min(D, n); ++d) {
      unsigned k = n - d;
      if (k == 0) continue;
      Series acc(b.ring);
      for (unsigned a = 0; a < k; ++a) {
        unsigned m = k - 1 - a;
        for (unsigned d1 = 0; d1 <= d; ++d1) {
          const Series& fp = b.f[a][d1];
          const Series& gp = b.g[m][d - d1];
          if (fp.is_zero() || gp.is_zero()) continue;
          acc += fp * gp;
        }
      }
      b.g[k][d] = std::move(acc);
    }
    // f_n^(a) = sum_j g_n^(a+j) e_j, all at the same n
    for (unsigned d = 0; d <= std::min(D, n); ++d) {
      unsigned a = n - d;
      Series acc(b.ring);
      for (unsigned j = 0; j <= d; ++j) {
        const Series& gp = b.g[a + j][d - j];
        if (gp.is_zero() || sym[j].is_zero()) continue;
        acc += gp * sym[j];
      }
      b.f[a][d] = std::move(acc);
    }
  }
  return b;
}

std::uint64_t SeriesReport::checked_coeffs() const {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.checked;
  return n;
}

std::uint64_t SeriesReport::mismatch_count() const {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.mismatches;
  return n;
}

void SeriesReport::compare(const std::string& name, const Series& expected, const Series& actual) {
  SeriesCheck check{name, 0, 0};
  const Ring& ring = *expected.ring();
  auto note = [&](const Exponents& e, const BigRational& want, const BigRational& got) {
    ++check.checked;
    if (want == got) return;
    if (check.mismatches++ < kMismatchesPerCheck)
      mismatches.push_back({name, ring.format_monomial(e), want.get_str(), got.get_str()});
  };
  for (const auto& [e, c] : expected.terms()) note(e, c, actual.coeff(e));
  for (const auto& [e, c] : actual.terms())
    if (!expected.terms().count(e)) note(e, 0, c);
  checks.push_back(check);
}

void SeriesReport::expect_zero(const std::string& name, const Series& s) { compare(name, Series(s.ring()), s); }

void SeriesReport::expect(const std::string& name, bool holds, const std::string& detail) {
  SeriesCheck check{name, 1, holds ? 0u : 1u};
  if (!holds) mismatches.push_back({name, detail, "true", "false"});
  checks.push_back(check);
}

void SeriesReport::merge(const SeriesReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

SeriesReport verify_fe(const SeriesBundle& b, unsigned z_order) {
  if (z_order > b.k_max) throw InvalidInput("z order exceeds the bundle");
  SeriesReport rep;
  rep.which = "fe";
  rep.r = b.r;
  rep.z_order = z_order;
  rep.x_degree = b.x_degree;
  const unsigned D = b.x_degree;
  std::vector<std::size_t> vars(b.r + 1);
  for (unsigned i = 0; i <= b.r; ++i) vars[i] = i;

  for (unsigned k = 0; k <= z_order; ++k) {
    Series rhs(b.ring);
    for (unsigned j = 0; j <= D; ++j) rhs += b.g_k(k + j) * sym_poly(b.kind, j, b.ring, vars);
    rep.compare("f_" + std::to_string(k) + " = sum_j g_(k+j) e_j", rhs, b.f_k(k));
  }
  auto xz = xz_ring(b.r, static_cast<int>(D), static_cast<int>(z_order));
  Series G = b.G(xz), F = b.F(xz);
  Series z = Series::variable(xz, "z");
  rep.compare("G = 1 + zFG", one(xz) + z * F * G, G);
  rep.compare("g_0 = 1", one(b.ring), b.g_k(0));
  rep.compare("f_0 = g_1", b.g_k(1), b.f_k(0));
  return rep;
}

SeriesReport verify_fe(unsigned r, unsigned z_order, unsigned x_degree) {
  auto b = g_f_by_recurrence(r, z_order, x_degree);
  SeriesReport rep = verify_fe(b, z_order);

  // g_1 against brute force by descent type
  const unsigned lim = std::min(brute_limit(r), x_degree + 1);
  Series brute(b.ring);
  for (unsigned n = 1; n <= lim; ++n)
    brute += histogram_series(count_2ss_by_descents(n, r), b.ring, Exponents(r + 1, 0));
  Series g1(b.ring);
  for (unsigned d = 0; d + 1 <= lim && d <= x_degree; ++d) g1 += b.g[1][d];
  rep.compare("g_1 = brute force (n <= " + std::to_string(lim) + ")", brute, g1);

  // f_n^(k): (k+1)-tuples of [n+1], largest letter only in the last component
  for (unsigned k = 0; k <= std::min(z_order, 2u); ++k) {
    Series fb(b.ring), fr(b.ring);
    for (unsigned n = k; n + 1 <= lim && n - k <= x_degree; ++n) {
      Histogram h;
      Word once, twice;
      for_each_ktuple(n + 1, r, k + 1, false, [&](const std::vector<WordView>& comps) {
        const auto& last = comps.back();
        if (std::find(last.begin(), last.end(), static_cast<Letter>(n + 1)) == last.end()) return;
        if (!tuple_is_2ss(comps, once, twice)) return;
        DescentVector dv(r + 1);
        for (auto c : comps) detail::descent_vector_into(c, r, dv);
        ++h[dv];
      });
      fb += histogram_series(h, b.ring, Exponents(r + 1, 0));
      fr += b.f[k][n - k];
    }
    rep.compare("f_" + std::to_string(k) + " = brute force", fb, fr);
  }
  return rep;
}

std::vector<Series> y_substitution(unsigned r, unsigned x_degree, SymKind kind) {
  auto ring = x_ring(r, static_cast<int>(x_degree));
  std::vector<Series> x;
  for (unsigned i = 0; i <= r; ++i) x.push_back(Series::variable(ring, i));
  std::vector<Series> y(r + 1, Series(ring));
  Series w = one(ring);
  return fixed_point(
      y,
      [&](const std::vector<Series>& cur) {
        Series P = kind == SymKind::Elementary ? e_product(cur, w) : h_product(cur, w);
        Series P2 = P * P;
        std::vector<Series> next;
        for (unsigned i = 0; i <= r; ++i) {
          Series denom = kind == SymKind::Elementary ? one(ring) + cur[i] : one(ring) - cur[i];
          next.push_back(x[i] * P2 * denom.inverse());
        }
        return next;
      },
      x_degree + 2);
}

SeriesReport y_residual(unsigned r, unsigned x_degree, SymKind kind) {
  SeriesReport rep;
  rep.which = "y";
  rep.r = r;
  rep.x_degree = x_degree;
  auto y = y_substitution(r, x_degree, kind);
  auto ring = y[0].ring();
  Series w = one(ring);
  Series P = kind == SymKind::Elementary ? e_product(y, w) : h_product(y, w);
  for (unsigned i = 0; i <= r; ++i) {
    Series xi = Series::variable(ring, i);
    Series side = kind == SymKind::Elementary ? one(ring) + y[i] : one(ring) - y[i];
    rep.compare("x_" + std::to_string(i) + " E^2(y) = y_" + std::to_string(i) + "(1 +- y)", xi * P * P,
                y[i] * side);
    // lowest order: y_i = x_i + ...
    Series low = y[i].rebound(ring->with_bounds({1}));
    rep.compare("y_" + std::to_string(i) + " = x_" + std::to_string(i) + " + O(x^2)", xi.rebound(low.ring()), low);
  }
  return rep;
}

namespace {

struct Closed {
  Series Ey, t, c, Eyc, G;
  std::vector<Series> y;
};

// c(t), E(y), E(y, c(t)) and G in an (x, z) ring.
Closed closed_forms_in(const std::vector<Series>& y_x, const RingPtr& xz, SymKind kind) {
  Closed cf{Series(xz), Series(xz), Series(xz), Series(xz), Series(xz), lift_all(y_x, xz)};
  Series z = Series::variable(xz, "z");
  Series w = one(xz);
  cf.Ey = kind == SymKind::Elementary ? e_product(cf.y, w) : h_product(cf.y, w);
  cf.t = z * cf.Ey * cf.Ey;
  cf.c = cf.t.compose(catalan_coeff);
  cf.Eyc = kind == SymKind::Elementary ? e_product(cf.y, cf.c) : h_product(cf.y, cf.c);
  cf.G = cf.c * cf.Ey * cf.Eyc.inverse();
  return cf;
}

// F = (P(y)/t)(P(y) - P(y,c)/c) = N/(z P(y)), computed with one extra z degree.
Series closed_F(const std::vector<Series>& y_x, unsigned r, unsigned K, unsigned D, SymKind kind,
                SeriesReport& rep) {
  auto xz1 = xz_ring(r, static_cast<int>(D), static_cast<int>(K + 1));
  auto xz = xz_ring(r, static_cast<int>(D), static_cast<int>(K));
  Closed cf = closed_forms_in(y_x, xz1, kind);
  Series N = cf.Ey - cf.Eyc * cf.c.inverse();
  const std::size_t zv = xz1->index("z");
  rep.expect_zero("numerator of F vanishes at z = 0", N.slice(zv, 0));
  Series F = N.shift(zv, -1).rebound(xz);
  return F * cf.Ey.rebound(xz).inverse();
}

}  // namespace

SeriesReport verify_solution_2ss(unsigned r, unsigned z_order, unsigned x_degree) {
  const unsigned K = z_order, D = x_degree;
  SeriesReport rep;
  rep.which = "solution";
  rep.r = r;
  rep.z_order = K;
  rep.x_degree = D;
  auto b = g_f_by_recurrence(r, K, D);
  auto y = y_substitution(r, D);
  auto xz = xz_ring(r, static_cast<int>(D), static_cast<int>(K));
  const std::size_t zv = xz->index("z");
  Closed cf = closed_forms_in(y, xz, SymKind::Elementary);

  rep.compare("G = c(t)E(y)/E(y,c(t))", b.G(xz), cf.G);
  Series F = closed_F(y, r, K, D, SymKind::Elementary, rep);
  rep.compare("F = (E(y)/t)(E(y) - E(y,c(t))/c(t))", b.F(xz), F);

  // g_1 closed forms, in x only
  auto X = b.ring;
  Series Ey = e_product(y, one(X));
  Series s(X);
  for (const auto& yi : y) s += yi * (one(X) + yi).inverse();
  rep.compare("g_1 = E^2(y)(1 - sum y_i/(1+y_i))", b.g_k(1), Ey * Ey * (one(X) - s));
  // e_i(y) by the usual product recurrence
  std::vector<Series> ey{one(X)};
  for (const auto& yi : y) {
    ey.push_back(Series(X));
    for (std::size_t i = ey.size() - 1; i > 0; --i) ey[i] += yi * ey[i - 1];
  }
  Series alt(X);
  for (std::size_t i = 0; i < ey.size(); ++i) alt += ey[i] * BigRational(1 - static_cast<long>(i));
  rep.compare("g_1 = E(y) sum_i (1-i) e_i(y)", b.g_k(1), Ey * alt);

  // E(x,1/z) = E(y,c) E(y,1/(tc)) per factor, cleared: E^2 (z + x_i) = (1 + c y_i)(t + y_i/c)
  Series z = Series::variable(xz, "z");
  Series cinv = cf.c.inverse();
  Series lhs = one(xz), rhs = cf.Eyc;
  Series E2 = cf.Ey * cf.Ey;
  for (unsigned i = 0; i <= r; ++i) {
    Series xi = Series::variable(xz, i);
    Series right = cf.t + cf.y[i] * cinv;
    rep.compare("E^2(y)(z + x_" + std::to_string(i) + ") = (1 + c y_" + std::to_string(i) + ")(t + y_" +
                    std::to_string(i) + "/c)",
                E2 * (z + xi), (one(xz) + cf.c * cf.y[i]) * right);
    lhs = lhs * E2 * (z + xi);
    rhs = rhs * right;
  }
  rep.compare("E^(2(r+1))(y) prod(z + x_i) = E(y,c) prod(t + y_i/c)", lhs, rhs);

  // G E(x,1/z) - F has only negative powers of z
  auto xzl = xz_ring(r, static_cast<int>(D), static_cast<int>(K + r + 1));
  Closed wide = closed_forms_in(y, xzl, SymKind::Elementary);
  std::vector<std::size_t> vars(r + 1);
  for (unsigned i = 0; i <= r; ++i) vars[i] = i;
  Series Ex(xzl);
  const std::size_t zl = xzl->index("z");
  for (unsigned j = 0; j <= r + 1; ++j) Ex += sym_poly(SymKind::Elementary, j, xzl, vars).shift(zl, -static_cast<int>(j));
  Series minus = multiply(wide.G, Ex, xz) - F;
  Series nonneg(xz);
  for (const auto& [e, c] : minus.terms())
    if (e[zv] >= 0) nonneg.add_term(e, c);
  rep.expect_zero("G E(x,1/z) - F has no z^k, k >= 0", nonneg);
  rep.expect("G E(x,1/z) - F has negative z-powers", minus.min_exponent(zv) < 0 || D == 0);

  rep.merge(y_residual(r, D));
  return rep;
}

SeriesReport verify_p_pipeline(unsigned r, unsigned z_order, unsigned x_degree) {
  const unsigned K = z_order, D = x_degree;
  SeriesReport rep;
  rep.which = "p";
  rep.r = r;
  rep.z_order = K;
  rep.x_degree = D;
  const unsigned KW = K + r + 1;
  auto b = g_f_by_recurrence(r, KW, D);
  auto PXW = make_ring({"x", "zb"}, {0, 1}, {static_cast<int>(D), static_cast<int>(KW)});
  auto PX = PXW->with_bounds({static_cast<int>(D), static_cast<int>(K)});
  const std::size_t zb = 1;

  // collapse x_i -> x
  auto collapse = [&](const Series& s) {
    return s.map_monomials(PXW, [](const Exponents& e) {
      int d = 0;
      for (int v : e) d += v;
      return Exponents{d, 0};
    });
  };
  Series x = Series::variable(PXW, "x");
  std::vector<Series> p;
  for (unsigned k = 0; k <= KW; ++k) {
    Series pk(PXW);
    for (unsigned i = 0; i <= k; ++i) pk += x.pow(i) * collapse(b.g_k(i)) * BigRational(binomial(k, i));
    p.push_back(pk);
  }
  Series P(PXW);
  for (unsigned k = 0; k <= KW; ++k) P += p[k].shift(zb, static_cast<int>(k));

  // P equation via Q = (P - sum_{i<=r} p_i zb^i) / zb^(r+1)
  Series low(PXW);
  for (unsigned i = 0; i <= r; ++i) low += p[i].shift(zb, static_cast<int>(i));
  Series Q = (P - low).shift(zb, -static_cast<int>(r + 1)).rebound(PX);
  Series Pk = P.rebound(PX);
  Series zbar = Series::variable(PX, "zb");
  Series geo = (one(PX) - zbar).inverse();
  Series xk = Series::variable(PX, "x");
  rep.compare("P = 1/(1-zb) + x P (P - sum p_i zb^i)/zb^r", Pk, geo + xk * zbar * Pk * Q);

  // closed solution
  Series y(PX);
  {
    std::vector<Series> yy{Series(PX)};
    yy = fixed_point(
        yy, [&](const std::vector<Series>& cur) { return std::vector<Series>{xk * (one(PX) + cur[0]).pow(2 * r + 1)}; },
        D + 2);
    y = yy[0];
  }
  Series t = y * (one(PX) + y) * zbar * geo;
  Series c = t.compose(catalan_coeff);
  Series Gt = c * (one(PX) + y).pow(r + 1) * (one(PX) + y * c).pow(r + 1).inverse();
  rep.compare("P = (1 + t/(y(1+y))) c(t)(1+y)^(r+1)/(1+yc(t))^(r+1)", Pk, (one(PX) + zbar * geo) * Gt);
  rep.compare("x = y/(1+y)^(2r+1)", xk, y * (one(PX) + y).pow(2 * r + 1).inverse());

  // p_k as polynomials in y
  auto Y = make_ring({"y"}, {0}, {static_cast<int>(D)});
  Series yv = Series::variable(Y, "y");
  Series x_of_y = yv * (one(Y) + yv).pow(2 * r + 1).inverse();
  for (unsigned k = 0; k <= K; ++k) {
    Series in_y(Y);
    Series xp = one(Y);
    for (unsigned n = 0; n <= D; ++n) {
      BigRational cn = p[k].coeff({static_cast<int>(n), 0});
      if (cn != 0) in_y += xp * cn;
      xp = xp * x_of_y;
    }
    Series high(Y);
    for (const auto& [e, cc] : in_y.terms())
      if (e[0] > static_cast<int>(2 * k)) high.add_term(e, cc);
    rep.expect_zero("deg_y p_" + std::to_string(k) + " <= " + std::to_string(2 * k), high);
    if (k == 1) {
      Series want = one(Y) + yv - yv * yv * BigRational(r);
      rep.compare("p_1 = 1 + y - r y^2", want, in_y);
    }
  }

  // empty components allowed: brute force
  const unsigned lim = std::min({r == 1 ? 4u : (r == 2 ? 3u : 2u), D});
  Series brute(PX), series(PX);
  for (unsigned k = 0; k <= std::min(K, 3u); ++k)
    for (unsigned n = 0; n <= lim; ++n) {
      brute.add_term({static_cast<int>(n), static_cast<int>(k)}, BigRational(count_2ss_ktuple(n, r, k, true)));
      series.add_term({static_cast<int>(n), static_cast<int>(k)}, Pk.coeff({static_cast<int>(n), static_cast<int>(k)}));
    }
  rep.compare("p_n^(k) = brute force (n <= " + std::to_string(lim) + ")", brute, series);
  return rep;
}

SeriesReport verify_zeilberger(unsigned x_degree) {
  const unsigned D = x_degree;
  SeriesReport rep;
  rep.which = "zeilberger";
  rep.r = 1;
  rep.x_degree = D;
  auto b = g_f_by_recurrence(1, D + 1, D);
  auto ZX = make_ring({"x", "t"}, {0, 1}, {static_cast<int>(D), static_cast<int>(D + 2)});
  const std::size_t tv = 1;
  Series x = Series::variable(ZX, "x");
  Series t = Series::variable(ZX, "t");
  auto collapse = [&](const Series& s) {
    return s.map_monomials(ZX, [](const Exponents& e) {
      int d = 0;
      for (int v : e) d += v;
      return Exponents{d, 0};
    });
  };
  // Phi-bar_i = x^i p_{i+1}
  Series Phib(ZX);
  std::vector<Series> phib;
  for (unsigned i = 0; i <= D + 1; ++i) {
    unsigned k = i + 1;
    Series pk(ZX);
    for (unsigned j = 0; j <= k; ++j) pk += x.pow(j) * collapse(b.g_k(j)) * BigRational(binomial(k, j));
    phib.push_back(x.pow(i) * pk);
    Phib += phib.back().shift(tv, static_cast<int>(i));
  }
  // brute force: 2SS permutations of [n] whose n, n-1, ..., n-i+1 are decreasing
  const unsigned lim = std::min(D, 7u);
  Series brute(ZX), window(ZX);
  for (unsigned n = 0; n <= lim; ++n) {
    auto row = count_2ss_by_top_run(n);
    for (unsigned i = 0; i < row.size(); ++i) brute.add_term({static_cast<int>(n), static_cast<int>(i)}, BigRational(row[i]));
  }
  for (const auto& [e, c] : Phib.terms())
    if (e[0] <= static_cast<int>(lim)) window.add_term(e, c);
  rep.compare("Phi-bar = brute force (n <= " + std::to_string(lim) + ")", brute, window);

  Series Phi(ZX);
  for (unsigned i = 0; i <= D; ++i) Phi += (phib[i] - phib[i + 1]).shift(tv, static_cast<int>(i));
  Series Phi1 = Phi.map_monomials(ZX, [](const Exponents& e) { return Exponents{e[0], 0}; });
  Series Phib0 = Phib.slice(tv, 0);
  rep.compare("Phi(x,1) = Phi-bar(x,0)", Phib0, Phi1);
  rep.compare("(1-t) Phi-bar = Phi(x,1) - t Phi", (one(ZX) - t) * Phib, Phi1 - t * Phi);

  Series geo = (one(ZX) - x * t).inverse();
  Series omt2 = (one(ZX) - t) * (one(ZX) - t);
  rep.compare("Zeilberger: (1-t)^2 Phi = (1-t)^2/(1-xt) + xt(Phi(x,1) - t Phi)(Phi(x,1) - Phi)", omt2 * Phi,
              omt2 * geo + x * t * (Phi1 - t * Phi) * (Phi1 - Phi));
  Series diff = Phib - Phib0;
  rep.expect_zero("Phi-bar - Phi-bar(x,0) has no t^0 term", diff.slice(tv, 0));
  rep.compare("Phi-bar = 1/(1-xt) + (1 + xt Phi-bar)(Phi-bar - Phi-bar(x,0))/t", Phib,
              (geo + (one(ZX) + x * t * Phib) * diff.shift(tv, -1)).rebound(ZX));
  return rep;
}

SeriesReport verify_h_variant(unsigned r, unsigned z_order, unsigned x_degree) {
  const unsigned K = z_order, D = x_degree;
  SeriesReport rep;
  rep.which = "h";
  rep.r = r;
  rep.z_order = K;
  rep.x_degree = D;
  auto b = g_f_by_recurrence(r, K, D, SymKind::Homogeneous);
  auto y = y_substitution(r, D, SymKind::Homogeneous);
  auto xz = xz_ring(r, static_cast<int>(D), static_cast<int>(K));
  const std::size_t zv = xz->index("z");
  Closed cf = closed_forms_in(y, xz, SymKind::Homogeneous);
  rep.compare("G = c(t)H(y)/H(y,c(t))", b.G(xz), cf.G);
  Series F = closed_F(y, r, K, D, SymKind::Homogeneous, rep);
  rep.compare("F = (H(y)/t)(H(y) - H(y,c(t))/c(t))", b.F(xz), F);

  // [x^k] g_1 = B(n; k)
  Series want(b.ring);
  for (unsigned n = 1; n <= D + 1; ++n) {
    DescentVector k(r + 1);
    auto rec = [&](auto&& self, unsigned slot, unsigned left) -> void {
      if (slot == r) {
        k[slot] = left;
        Exponents e(r + 1);
        for (unsigned i = 0; i <= r; ++i) e[i] = static_cast<int>(k[i]);
        want.add_term(e, BigRational(h_variant_count(k)));
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        k[slot] = v;
        self(self, slot + 1, left - v);
      }
    };
    rec(rec, 0, n - 1);
  }
  rep.compare("[x^k] g_1 = B(n;k)", want, b.g_k(1));

  // H(x,1/z) = H(y,c) H(y,1/(tc)), cleared per factor: H^2 (z - x_i) = (1 - c y_i)(t - y_i/c)
  Series z = Series::variable(xz, "z");
  Series cinv = cf.c.inverse();
  Series H2 = cf.Ey * cf.Ey;
  Series lhs = one(xz), rhs = one(xz);
  for (unsigned i = 0; i <= r; ++i) {
    Series xi = Series::variable(xz, i);
    Series a = one(xz) - cf.c * cf.y[i];
    Series right = cf.t - cf.y[i] * cinv;
    rep.compare("H^2(y)(z - x_" + std::to_string(i) + ") = (1 - c y_" + std::to_string(i) + ")(t - y_" +
                    std::to_string(i) + "/c)",
                H2 * (z - xi), a * right);
    lhs = lhs * H2 * (z - xi);
    rhs = rhs * a * right;
  }
  rep.compare("H^(2(r+1))(y) prod(z - x_i) = prod(1 - c y_i)(t - y_i/c)", lhs, rhs);

  // G H(x,1/z) - F has only negative powers of z
  auto xzl = xz_ring(r, static_cast<int>(D), static_cast<int>(K + D));
  Closed wide = closed_forms_in(y, xzl, SymKind::Homogeneous);
  std::vector<std::size_t> vars(r + 1);
  for (unsigned i = 0; i <= r; ++i) vars[i] = i;
  Series Hx(xzl);
  const std::size_t zl = xzl->index("z");
  for (unsigned j = 0; j <= D; ++j) Hx += sym_poly(SymKind::Homogeneous, j, xzl, vars).shift(zl, -static_cast<int>(j));
  Series minus = multiply(wide.G, Hx, xz) - F;
  Series nonneg(xz);
  for (const auto& [e, c] : minus.terms())
    if (e[zv] >= 0) nonneg.add_term(e, c);
  rep.expect_zero("G H(x,1/z) - F has no z^k, k >= 0", nonneg);

  rep.merge(y_residual(r, D, SymKind::Homogeneous));
  return rep;
}

SeriesReport verify_lambda12(unsigned n_max) {
  SeriesReport rep;
  rep.which = "lambda12";
  rep.r = 2;
  rep.x_degree = n_max;
  const Lambda lam({1, 2}, 2);

  // refined: u, x0, x1, x2
  if (n_max >= 2) {
    const int Nr = static_cast<int>(n_max) - 1;
    auto L = make_ring({"x0", "x1", "x2", "u"}, {0, 0, 0, 1}, {Nr - 1, Nr});
    Series u = Series::variable(L, "u");
    Series x0 = Series::variable(L, "x0"), x1 = Series::variable(L, "x1"), x2 = Series::variable(L, "x2");
    auto Qof = [&](const std::vector<Series>& y) {
      return (one(L) + y[0]) * (one(L) + y[1]) * (one(L) - y[0] * y[1]);
    };
    auto y = fixed_point(
        std::vector<Series>{Series(L), Series(L)},
        [&](const std::vector<Series>& cur) {
          Series E = (one(L) + cur[0]) * (one(L) + cur[1]);
          Series Dn = one(L) - u * Qof(cur) * x2;
          Series common = u * E * E * Dn.inverse();
          return std::vector<Series>{common * x0 * (one(L) + cur[0]).inverse(),
                                     common * x1 * (one(L) + cur[1]).inverse()};
        },
        static_cast<std::size_t>(2 * Nr + 2));
    Series Q = Qof(y);
    Series g1 = u * Q * (one(L) - u * Q * x2).inverse();
    Series brute(L);
    for (int n = 1; n <= Nr; ++n) {
      Exponents base{0, 0, 0, n};
      brute += histogram_series(count_2ss_lambda_by_descents(static_cast<unsigned>(n), 2, lam), L, base);
    }
    rep.compare("refined g_1 = brute force by descents (n <= " + std::to_string(Nr) + ")", brute, g1);
  }

  // u only: y = u (1+y)^3 (1+y-y^2), p_1 = 1 + y - y^2
  auto U = make_ring({"u"}, {0}, {static_cast<int>(n_max)});
  Series u = Series::variable(U, "u");
  auto y = fixed_point(
      std::vector<Series>{Series(U)},
      [&](const std::vector<Series>& cur) {
        const Series& v = cur[0];
        return std::vector<Series>{u * (one(U) + v).pow(3) * (one(U) + v - v * v)};
      },
      n_max + 2);
  Series p1 = one(U) + y[0] - y[0] * y[0];
  Series brute(U), formula(U);
  for (unsigned n = 0; n <= n_max; ++n) {
    brute.add_term({static_cast<int>(n)}, BigRational(count_2ss_lambda(n, 2, lam)));
    formula.add_term({static_cast<int>(n)}, BigRational(lambda12_p1_coeff(n)));
  }
  rep.compare("[u^n] p_1 = brute force", brute, p1);
  rep.compare("[u^n] p_1 = coefficient formula", formula, p1);
  return rep;
}

SeriesReport verify_identities(unsigned t_order) {
  SeriesReport rep;
  rep.which = "identities";
  rep.z_order = t_order;
  auto T = make_ring({"t"}, {0}, {static_cast<int>(t_order)});
  Series t = Series::variable(T, "t");
  Series c = t.compose(catalan_coeff);
  rep.expect_zero("t c^2 - c + 1 = 0", t * c * c - c + one(T));
  Series cinv = c.inverse();
  for (unsigned n = 2; n <= 8; ++n) {
    Series s = (t * c).pow(n - 1) + cinv.pow(n - 1);
    Series high(T);
    for (const auto& [e, v] : s.terms())
      if (2 * e[0] > static_cast<int>(n - 1)) high.add_term(e, v);
    rep.expect_zero("(tc)^" + std::to_string(n - 1) + " + c^-" + std::to_string(n - 1) + " has degree <= " +
                        std::to_string((n - 1) / 2),
                    high);
  }
  for (int n = -4; n <= 4; ++n) {
    Series full = n >= 0 ? c.pow(static_cast<unsigned>(n)) : cinv.pow(static_cast<unsigned>(-n));
    // The formula says nothing at 2i + n = 0; leave that coefficient out.
    Series cn(T), want(T);
    for (unsigned i = 0; i <= t_order; ++i) {
      if (2 * static_cast<int>(i) + n == 0) continue;
      cn.add_term({static_cast<int>(i)}, full.coeff({static_cast<int>(i)}));
      want.add_term({static_cast<int>(i)}, BigRational(catalan_power_coeff(n, i)));
    }
    rep.compare("[t^i] c^" + std::to_string(n) + " = n/(2i+n) C(2i+n,i)", want, cn);
  }
  for (unsigned r = 0; r <= 4; ++r) {
    std::vector<std::string> names;
    for (unsigned i = 0; i <= r; ++i) names.push_back("y" + std::to_string(i));
    auto Yr = make_ring(names, std::vector<unsigned>(r + 1, 0), {static_cast<int>(r + 3)});
    std::vector<std::size_t> vars(r + 1);
    std::vector<Series> ys;
    for (unsigned i = 0; i <= r; ++i) {
      vars[i] = i;
      ys.push_back(Series::variable(Yr, i));
    }
    Series lhs(Yr);
    for (unsigned i = 0; i <= r + 1; ++i)
      lhs += sym_poly(SymKind::Elementary, i, Yr, vars) * BigRational(1 - static_cast<long>(i));
    Series s(Yr);
    for (const auto& yi : ys) s += yi * (one(Yr) + yi).inverse();
    rep.compare("sum (1-i) e_i(y) = E(y)(1 - sum y_i/(1+y_i)), r = " + std::to_string(r), lhs,
                e_product(ys, one(Yr)) * (one(Yr) - s));
  }
  return rep;
}

SeriesReport verify_series(const std::string& which, unsigned r, unsigned z_order, unsigned x_degree) {
  if (r == 0) throw InvalidInput("r must be positive");
  if (which == "fe") return verify_fe(r, z_order, x_degree);
  if (which == "solution") return verify_solution_2ss(r, z_order, x_degree);
  if (which == "p") return verify_p_pipeline(r, z_order, x_degree);
  if (which == "zeilberger") {
    if (r != 1) throw InvalidInput("the Zeilberger check is for r = 1");
    return verify_zeilberger(x_degree);
  }
  if (which == "h") return verify_h_variant(r, z_order, x_degree);
  if (which == "lambda12") {
    if (r != 2) throw InvalidInput("lambda = (1,2) needs r = 2");
    return verify_lambda12(x_degree);
  }
  if (which == "identities") return verify_identities(3 * x_degree);
  throw InvalidInput("unknown series check: " + which);
}

}  // namespace stacksort
