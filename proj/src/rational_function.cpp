#include "ratext/rational_function.hpp"

#include <stdexcept>

namespace ratext {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(BigRational(1), den_.var());
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  BigRational lead = den_.leading();
  if (lead != 1) {
    BigRational inv = BigRational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

BigRational RationalFunction::eval(const BigRational& v) const {
  BigRational d = den_.eval(v);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(v) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  // Cross-cancel first so the big product stays small.
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  Poly n1 = g1.degree() > 0 ? Poly::divmod(num_, g1).first : num_;
  Poly d2 = g1.degree() > 0 ? Poly::divmod(o.den_, g1).first : o.den_;
  Poly n2 = g2.degree() > 0 ? Poly::divmod(o.num_, g2).first : o.num_;
  Poly d1 = g2.degree() > 0 ? Poly::divmod(den_, g2).first : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return *this *= RationalFunction(o.den_, o.num_);
}

std::string RationalFunction::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace ratext
