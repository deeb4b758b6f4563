#include "stacksort/series.hpp"

#include <algorithm>
#include <sstream>

#include "stacksort/error.hpp"

namespace stacksort {

Ring::Ring(std::vector<std::string> names, std::vector<unsigned> group_of, std::vector<int> bounds)
    : names_(std::move(names)), group_of_(std::move(group_of)), bounds_(std::move(bounds)) {
  if (names_.size() != group_of_.size()) throw InvalidInput("ring: one group per variable");
  for (auto g : group_of_)
    if (g >= bounds_.size()) throw InvalidInput("ring: group index out of range");
}

std::size_t Ring::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidInput("ring has no variable " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

int Ring::group_degree(const Exponents& e, std::size_t g) const {
  int d = 0;
  for (std::size_t v = 0; v < e.size(); ++v)
    if (group_of_[v] == g) d += e[v];
  return d;
}

bool Ring::admits(const Exponents& e) const {
  for (std::size_t g = 0; g < bounds_.size(); ++g)
    if (group_degree(e, g) > bounds_[g]) return false;
  return true;
}

RingPtr Ring::with_bounds(std::vector<int> bounds) const {
  return std::make_shared<const Ring>(names_, group_of_, std::move(bounds));
}

bool Ring::same_variables(const Ring& other) const {
  return names_ == other.names_ && group_of_ == other.group_of_;
}

std::string Ring::format_monomial(const Exponents& e) const {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[v];
    if (e[v] != 1) out += '^' + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<unsigned> group_of, std::vector<int> bounds) {
  return std::make_shared<const Ring>(std::move(names), std::move(group_of), std::move(bounds));
}

namespace {

void require_compatible(const Ring& a, const Ring& b) {
  if (&a != &b && !a.same_variables(b)) throw InvalidInput("series over different variables");
}

std::size_t nilpotency_limit(const Ring& r) {
  std::size_t n = 1;
  for (std::size_t g = 0; g < r.groups(); ++g) n += static_cast<std::size_t>(std::max(0, r.bound(g)) + 1);
  return n;
}

bool has_negative(const Series& s) {
  for (const auto& [e, c] : s.terms())
    for (int x : e)
      if (x < 0) return true;
  return false;
}

}  // namespace

Series::Series(RingPtr ring) : ring_(std::move(ring)) {}

Series Series::constant(RingPtr ring, const BigRational& c) {
  Series s(ring);
  s.add_term(Exponents(ring->size(), 0), c);
  return s;
}

Series Series::variable(RingPtr ring, std::size_t v) {
  Exponents e(ring->size(), 0);
  e.at(v) = 1;
  return monomial(ring, e, 1);
}

Series Series::variable(RingPtr ring, const std::string& name) {
  auto v = ring->index(name);
  return variable(std::move(ring), v);
}

Series Series::monomial(RingPtr ring, const Exponents& e, const BigRational& c) {
  Series s(ring);
  s.add_term(e, c);
  return s;
}

BigRational Series::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational Series::constant_term() const { return coeff(Exponents(ring_->size(), 0)); }

void Series::add_term(const Exponents& e, const BigRational& c) {
  if (e.size() != ring_->size()) throw InvalidInput("exponent vector has the wrong length");
  if (c == 0 || !ring_->admits(e)) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::operator-() const {
  Series out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Series& Series::operator+=(const Series& o) {
  require_compatible(*ring_, *o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_compatible(*ring_, *o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Series& Series::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Series multiply(const Series& a, const Series& b, RingPtr target) {
  require_compatible(*a.ring(), *b.ring());
  require_compatible(*a.ring(), *target);
  const Ring& R = *target;
  const std::size_t G = R.groups();
  auto degrees = [&](const Series& s) {
    std::vector<std::pair<std::vector<int>, const std::pair<const Exponents, BigRational>*>> out;
    out.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
      std::vector<int> d(G);
      for (std::size_t g = 0; g < G; ++g) d[g] = R.group_degree(t.first, g);
      out.emplace_back(std::move(d), &t);
    }
    return out;
  };
  auto da = degrees(a), db = degrees(b);
  Series out(target);
  Series::Terms acc;
  Exponents e(R.size());
  BigRational prod;
  for (const auto& [ga, ta] : da) {
    for (const auto& [gb, tb] : db) {
      bool fits = true;
      for (std::size_t g = 0; g < G && fits; ++g) fits = ga[g] + gb[g] <= R.bound(g);
      if (!fits) continue;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ta->first[v] + tb->first[v];
      prod = ta->second * tb->second;
      acc[e] += prod;
    }
  }
  for (auto& [k, c] : acc)
    if (c != 0) out.add_term(k, c);
  return out;
}

Series operator*(const Series& a, const Series& b) { return multiply(a, b, a.ring()); }

Series Series::pow(unsigned k) const {
  Series out = constant(ring_, 1);
  Series base = *this;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

Series Series::inverse() const {
  BigRational c0 = constant_term();
  if (c0 == 0) throw DomainError("series has no constant term to invert");
  if (has_negative(*this)) throw DomainError("cannot invert a Laurent series");
  // this = c0 (1 + w), 1/(1+w) = sum (-w)^k
  Series w = *this * BigRational(1 / c0);
  w -= constant(ring_, 1);
  Series neg_w = -w;
  Series out = constant(ring_, 1);
  Series term = out;
  std::size_t limit = nilpotency_limit(*ring_);
  for (std::size_t i = 0;; ++i) {
    term = term * neg_w;
    if (term.is_zero()) break;
    if (i > limit) throw InternalError("inverse did not terminate");
    out += term;
  }
  return out * BigRational(1 / c0);
}

Series Series::compose(const std::function<BigRational(unsigned)>& coeff) const {
  if (constant_term() != 0) throw DomainError("composition needs a zero constant term");
  if (has_negative(*this)) throw DomainError("cannot compose with a Laurent series");
  Series out = constant(ring_, coeff(0));
  Series power = constant(ring_, 1);
  std::size_t limit = nilpotency_limit(*ring_);
  for (unsigned i = 1;; ++i) {
    power = power * *this;
    if (power.is_zero()) break;
    if (i > limit) throw InternalError("composition did not terminate");
    BigRational c = coeff(i);
    if (c != 0) out += power * c;
  }
  return out;
}

Series Series::shift(std::size_t var, int delta) const {
  Series out(ring_);
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    e.at(var) += delta;
    out.add_term(e, c);
  }
  return out;
}

Series Series::rebound(RingPtr target) const {
  require_compatible(*ring_, *target);
  Series out(target);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

Series Series::map_monomials(RingPtr target, const std::function<Exponents(const Exponents&)>& f) const {
  Series out(target);
  for (const auto& [e, c] : terms_) out.add_term(f(e), c);
  return out;
}

Series Series::slice(std::size_t var, int k) const {
  Series out(ring_);
  for (const auto& [key, c] : terms_) {
    if (key.at(var) != k) continue;
    Exponents e = key;
    e[var] = 0;
    out.add_term(e, c);
  }
  return out;
}

int Series::min_exponent(std::size_t var) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    m = first ? e.at(var) : std::min(m, e.at(var));
    first = false;
  }
  return m;
}

int Series::max_exponent(std::size_t var) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    m = first ? e.at(var) : std::max(m, e.at(var));
    first = false;
  }
  return m;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << '*' << ring_->format_monomial(e);
  }
  return os.str();
}

}  // namespace stacksort
