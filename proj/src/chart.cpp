#include "ratext/chart.hpp"

#include <cmath>
#include <stdexcept>

namespace ratext {

char chart_var(ChartId chart) { return chart == ChartId::Cosh2X ? 'z' : 'y'; }

double chart_map(ChartId chart, double x) {
  switch (chart) {
    case ChartId::ExpNegX: return std::exp(-x);
    case ChartId::Cosh2X: return std::cosh(2.0 * x);
    case ChartId::CothX: return 1.0 / std::tanh(x);
    case ChartId::TanhX: return std::tanh(x);
  }
  throw std::logic_error("unknown chart");
}

ChartExpr::ChartExpr(ChartId chart, RationalFunction rf, int sinh_pow)
    : chart_(chart), rf_(std::move(rf)), sinh_pow_(sinh_pow) {
  if (sinh_pow_ != 0 && sinh_pow_ != 1) throw std::logic_error("sinh power must be 0 or 1");
  if (sinh_pow_ != 0 && chart_ != ChartId::Cosh2X)
    throw std::logic_error("sinh(2x) prefactor only valid in the cosh(2x) chart");
  if (rf_.is_zero()) sinh_pow_ = 0;
}

ChartExpr ChartExpr::zero(ChartId chart) {
  return ChartExpr(chart, RationalFunction(BigRational(0), chart_var(chart)));
}

ChartExpr ChartExpr::constant(ChartId chart, const BigRational& c) {
  return ChartExpr(chart, RationalFunction(c, chart_var(chart)));
}

ChartExpr ChartExpr::variable(ChartId chart) {
  return ChartExpr(chart, RationalFunction(Poly::variable(chart_var(chart))));
}

RationalFunction ChartExpr::v_squared_minus_one() const {
  Poly v = Poly::variable(chart_var(chart_));
  return RationalFunction(v * v - Poly(BigRational(1), v.var()));
}

ChartExpr ChartExpr::dx() const {
  char var = chart_var(chart_);
  Poly v = Poly::variable(var);
  switch (chart_) {
    case ChartId::ExpNegX:
      return ChartExpr(chart_, rf_.derivative() * RationalFunction(-v), 0);
    case ChartId::CothX:
    case ChartId::TanhX: {
      RationalFunction jac(Poly(BigRational(1), var) - v * v);
      return ChartExpr(chart_, rf_.derivative() * jac, 0);
    }
    case ChartId::Cosh2X: {
      if (sinh_pow_ == 0) {
        // d/dx r(z) = 2 sinh(2x) r'(z)
        return ChartExpr(chart_, RationalFunction(BigRational(2), var) * rf_.derivative(), 1);
      }
      // d/dx [sinh(2x) r(z)] = 2z r(z) + 2 (z^2-1) r'(z)
      RationalFunction two_v(Poly({BigRational(0), BigRational(2)}, var));
      return ChartExpr(chart_,
                       two_v * rf_ + RationalFunction(BigRational(2), var) *
                                         v_squared_minus_one() * rf_.derivative(),
                       0);
    }
  }
  throw std::logic_error("unknown chart");
}

ChartExpr ChartExpr::operator-() const { return ChartExpr(chart_, -rf_, sinh_pow_); }

ChartExpr& ChartExpr::operator+=(const ChartExpr& o) {
  if (chart_ != o.chart_) throw std::logic_error("chart mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (sinh_pow_ != o.sinh_pow_)
    throw std::logic_error("cannot add chart expressions of different sinh parity");
  rf_ += o.rf_;
  if (rf_.is_zero()) sinh_pow_ = 0;
  return *this;
}

ChartExpr& ChartExpr::operator-=(const ChartExpr& o) { return *this += -o; }

ChartExpr& ChartExpr::operator*=(const ChartExpr& o) {
  if (chart_ != o.chart_) throw std::logic_error("chart mismatch");
  rf_ *= o.rf_;
  sinh_pow_ += o.sinh_pow_;
  if (sinh_pow_ == 2) {
    rf_ *= v_squared_minus_one();
    sinh_pow_ = 0;
  }
  if (rf_.is_zero()) sinh_pow_ = 0;
  return *this;
}

ChartExpr& ChartExpr::operator/=(const ChartExpr& o) {
  if (chart_ != o.chart_) throw std::logic_error("chart mismatch");
  if (o.is_zero()) throw std::domain_error("division by zero chart expression");
  if (o.sinh_pow_ == 0) {
    rf_ /= o.rf_;
  } else {
    // 1 / (sinh(2x) r) = sinh(2x) / ((z^2-1) r)
    rf_ /= o.rf_ * v_squared_minus_one();
    sinh_pow_ += 1;
    if (sinh_pow_ == 2) {
      rf_ *= v_squared_minus_one();
      sinh_pow_ = 0;
    }
  }
  if (rf_.is_zero()) sinh_pow_ = 0;
  return *this;
}

bool ChartExpr::operator==(const ChartExpr& o) const {
  return chart_ == o.chart_ && sinh_pow_ == o.sinh_pow_ && rf_ == o.rf_;
}

std::string ChartExpr::str() const {
  std::string s = rf_.str();
  if (sinh_pow_ == 1) s = "sinh(2x) * [" + s + "]";
  return s;
}

double eval_ratio_double(const Poly& num, const Poly& den, double v) {
  auto horner = [](const Poly& p, double t) {
    long double acc = 0.0L;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
      acc = acc * t + static_cast<long double>(to_double(*it));
    return acc;
  };
  auto horner_reversed = [](const Poly& p, double u) {
    long double acc = 0.0L;
    for (const auto& c : p.coeffs()) acc = acc * u + static_cast<long double>(to_double(c));
    return acc;
  };
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return 0.0;
  if (std::abs(v) <= 1.0) {
    long double d = horner(den, v);
    if (d == 0.0L) throw std::domain_error("pole encountered in tabulation");
    return static_cast<double>(horner(num, v) / d);
  }
  // num/den = v^(dn-dd) * rev(num)(1/v) / rev(den)(1/v)
  double u = 1.0 / v;
  long double dnum = horner_reversed(num, u);
  long double dden = horner_reversed(den, u);
  if (dden == 0.0L) throw std::domain_error("pole encountered in tabulation");
  long double scale = std::pow(static_cast<long double>(v),
                               static_cast<long double>(num.degree() - den.degree()));
  return static_cast<double>(scale * dnum / dden);
}

}  // namespace ratext
