#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stacksort/bigint.hpp"

namespace stacksort {

using Exponents = std::vector<int>;

/// Variables of a truncated series ring. Every variable belongs to one
/// grading group; a term is kept while the total degree of each group stays
/// within that group's bound. Exponents may be negative (Laurent direction);
/// only the upper bound truncates.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<unsigned> group_of, std::vector<int> bounds);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_[v]; }
  std::size_t index(const std::string& name) const;
  std::size_t groups() const { return bounds_.size(); }
  unsigned group_of(std::size_t v) const { return group_of_[v]; }
  int bound(std::size_t g) const { return bounds_[g]; }

  int group_degree(const Exponents& e, std::size_t g) const;
  bool admits(const Exponents& e) const;
  /// Same variables and groups, new bounds.
  std::shared_ptr<const Ring> with_bounds(std::vector<int> bounds) const;
  bool same_variables(const Ring& other) const;

  std::string format_monomial(const Exponents& e) const;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> group_of_;
  std::vector<int> bounds_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<unsigned> group_of, std::vector<int> bounds);

/// Multivariate truncated series with exact rational coefficients. Values
/// are immutable once built; every operation returns a new series.
class Series {
 public:
  using Terms = std::map<Exponents, BigRational>;

  explicit Series(RingPtr ring);
  static Series constant(RingPtr ring, const BigRational& c);
  static Series variable(RingPtr ring, std::size_t v);
  static Series variable(RingPtr ring, const std::string& name);
  static Series monomial(RingPtr ring, const Exponents& e, const BigRational& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coeff(const Exponents& e) const;
  BigRational constant_term() const;
  /// Adds c at monomial e when the ring admits it.
  void add_term(const Exponents& e, const BigRational& c);

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const BigRational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const BigRational& c) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);

  Series pow(unsigned k) const;
  /// Multiplicative inverse; needs a nonzero constant term and no negative
  /// exponents.
  Series inverse() const;
  /// sum_i coeff(i) * this^i. Needs a zero constant term and no negative
  /// exponents.
  Series compose(const std::function<BigRational(unsigned)>& coeff) const;
  /// Multiply by var^delta (delta may be negative).
  Series shift(std::size_t var, int delta) const;
  /// Terms as they fit in another ring over the same variables.
  Series rebound(RingPtr target) const;
  /// Term-by-term transport: f maps an exponent vector of this ring to one of
  /// the target ring; coefficients of colliding images add up.
  Series map_monomials(RingPtr target, const std::function<Exponents(const Exponents&)>& f) const;
  /// Coefficient of var^k as a series in the same ring (var exponent 0).
  Series slice(std::size_t var, int k) const;
  int min_exponent(std::size_t var) const;
  int max_exponent(std::size_t var) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

/// Product computed directly into the target ring (all three share variables).
Series multiply(const Series& a, const Series& b, RingPtr target);

}  // namespace stacksort
