#pragma once

#include <string>

#include "ratext/poly.hpp"

namespace ratext {

/// Quotient of two Poly in canonical form: gcd(num, den) = 1, den monic and
/// nonzero. The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(BigRational(1)) {}
  explicit RationalFunction(const Poly& p) : num_(p), den_(BigRational(1), p.var()) {}
  explicit RationalFunction(const BigRational& c, char var = 'z')
      : num_(c, var), den_(BigRational(1), var) {}
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  char var() const { return num_.is_constant() ? den_.var() : num_.var(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Exact value; throws std::domain_error at a pole.
  BigRational eval(const BigRational& v) const;

  /// d/dv by the quotient rule, reduced to canonical form.
  RationalFunction derivative() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void normalize();

  Poly num_, den_;
};

}  // namespace ratext
