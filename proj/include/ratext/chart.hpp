#pragma once

#include "ratext/rational_function.hpp"

namespace ratext {

/// Change of variable taking the physical coordinate x to an algebraic one.
enum class ChartId {
  ExpNegX,  // y = exp(-x),  x in R,        y in (0, inf),  dy/dx = -y
  Cosh2X,   // z = cosh(2x), x in (0, inf), z in (1, inf),  dz/dx = 2 sinh(2x)
  CothX,    // y = coth(x),  x in (0, inf), y in (1, inf),  dy/dx = 1 - y^2
  TanhX     // y = tanh(x),  x in R,        y in (-1, 1),   dy/dx = 1 - y^2
};

char chart_var(ChartId chart);

/// Algebraic image of x under the chart map.
double chart_map(ChartId chart, double x);

/// Function of x of the form r(v) or sinh(2x)*r(z). The sinh(2x) prefactor
/// only arises in the Cosh2X chart, where sinh(2x)^2 = z^2 - 1 keeps products
/// and x-derivatives inside rational-function arithmetic.
class ChartExpr {
 public:
  ChartExpr(ChartId chart, RationalFunction rf, int sinh_pow = 0);

  static ChartExpr zero(ChartId chart);
  static ChartExpr constant(ChartId chart, const BigRational& c);
  static ChartExpr variable(ChartId chart);

  ChartId chart() const { return chart_; }
  const RationalFunction& rf() const { return rf_; }
  int sinh_pow() const { return sinh_pow_; }
  bool is_zero() const { return rf_.is_zero(); }

  /// Exact d/dx through the chart map.
  ChartExpr dx() const;

  ChartExpr operator-() const;
  ChartExpr& operator+=(const ChartExpr& o);
  ChartExpr& operator-=(const ChartExpr& o);
  ChartExpr& operator*=(const ChartExpr& o);
  ChartExpr& operator/=(const ChartExpr& o);

  friend ChartExpr operator+(ChartExpr a, const ChartExpr& b) { return a += b; }
  friend ChartExpr operator-(ChartExpr a, const ChartExpr& b) { return a -= b; }
  friend ChartExpr operator*(ChartExpr a, const ChartExpr& b) { return a *= b; }
  friend ChartExpr operator/(ChartExpr a, const ChartExpr& b) { return a /= b; }

  bool operator==(const ChartExpr& o) const;
  bool operator!=(const ChartExpr& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RationalFunction v_squared_minus_one() const;

  ChartId chart_;
  RationalFunction rf_;
  int sinh_pow_;  // 0 or 1; always 0 outside the Cosh2X chart
};

/// Rational-function evaluation in double precision, stable for |v| >> 1
/// (reversed Horner in 1/v so numerator and denominator cannot overflow
/// separately).
double eval_ratio_double(const Poly& num, const Poly& den, double v);

}  // namespace ratext
