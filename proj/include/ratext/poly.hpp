#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratext/rational.hpp"

namespace ratext {

/// Univariate polynomial over BigRational, dense ascending-degree storage.
/// Each polynomial carries a variable tag ('y' or 'z'); arithmetic between
/// non-constant polynomials with different tags is rejected. The zero
/// polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const BigRational& c, char var = 'z');
  Poly(std::vector<BigRational> coeffs, char var);
  Poly(std::initializer_list<BigRational> coeffs, char var)
      : Poly(std::vector<BigRational>(coeffs), var) {}

  static Poly variable(char var);

  char var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  BigRational coeff(int k) const;
  const BigRational& leading() const;

  BigRational eval(const BigRational& v) const;
  double eval_double(double x) const;

  Poly derivative() const;
  Poly monic() const;
  /// p / gcd(p, p'): same distinct roots, all simple.
  Poly square_free() const;
  /// p(c0 + c1*t) as a polynomial in t, same variable tag.
  Poly compose_linear(const BigRational& c0, const BigRational& c1) const;
  Poly with_var(char var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const BigRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const BigRational& c) { return a *= c; }
  friend Poly operator*(const BigRational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder with deg(rem) < deg(b); b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  void trim();
  static char join_var(const Poly& a, const Poly& b);

  std::vector<BigRational> coeffs_;
  char var_ = 'z';
};

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace ratext
