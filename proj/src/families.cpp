#include "ratext/families.hpp"

#include <cmath>
#include <stdexcept>

namespace ratext {

namespace {

// Function-local so that callers running during static initialization of
// other translation units see a constructed value.
const BigRational& half() {
  static const BigRational h(1, 2);
  return h;
}

RationalFunction rf_const(FamilyId f, const BigRational& c) {
  return RationalFunction(c, family_var(f));
}

}  // namespace

std::string family_name(FamilyId f) {
  switch (f) {
    case FamilyId::Morse: return "morse";
    case FamilyId::HDPT: return "hdpt";
    case FamilyId::Eckart: return "eckart";
    case FamilyId::HRM: return "hrm";
  }
  return "?";
}

std::optional<FamilyId> family_from_name(std::string_view s) {
  if (s == "morse") return FamilyId::Morse;
  if (s == "hdpt") return FamilyId::HDPT;
  if (s == "eckart") return FamilyId::Eckart;
  if (s == "hrm") return FamilyId::HRM;
  return std::nullopt;
}

ChartId family_chart(FamilyId f) {
  switch (f) {
    case FamilyId::Morse: return ChartId::ExpNegX;
    case FamilyId::HDPT: return ChartId::Cosh2X;
    case FamilyId::Eckart: return ChartId::CothX;
    case FamilyId::HRM: return ChartId::TanhX;
  }
  throw std::logic_error("unknown family");
}

char family_var(FamilyId f) { return chart_var(family_chart(f)); }

Interval physical_interval(FamilyId f) {
  switch (f) {
    case FamilyId::Morse: return Interval::open_above(BigRational(0));   // y = e^-x
    case FamilyId::HDPT: return Interval::open_above(BigRational(1));    // z = cosh 2x
    case FamilyId::Eckart: return Interval::open_above(BigRational(1));  // y = coth x
    case FamilyId::HRM: return Interval::open(BigRational(-1), BigRational(1));  // y = tanh x
  }
  throw std::logic_error("unknown family");
}

AlgebraicChart algebraic_chart(FamilyId f) {
  ChartId id = family_chart(f);
  char var = chart_var(id);
  Poly v = Poly::variable(var), one(BigRational(1), var);
  AlgebraicChart chart{f, id, var, physical_interval(f), std::nullopt, RationalFunction()};
  switch (id) {
    case ChartId::ExpNegX:
      chart.jacobian = RationalFunction(-v);  // dy/dx = -y
      break;
    case ChartId::CothX:
    case ChartId::TanhX:
      chart.jacobian = RationalFunction(one - v * v);  // dy/dx = 1 - y^2
      break;
    case ChartId::Cosh2X:
      break;  // dz/dx = 2 sinh 2x, not rational in z
  }
  chart.jacobian_squared = chart.jacobian
                               ? *chart.jacobian * *chart.jacobian
                               : RationalFunction(BigRational(4) * (v * v - one));
  return chart;
}

ParameterSet make_params_unchecked(FamilyId f, const BigRational& first,
                                   const BigRational& second) {
  ParameterSet p;
  if (f == FamilyId::HDPT) {
    p.alpha = first;
    p.beta = second;
  } else {
    p.a = first;
    p.b = second;
  }
  return p;
}

void validate_params(FamilyId f, const ParameterSet& p) {
  switch (f) {
    case FamilyId::Morse:
      if (!(p.a > 0 && p.b > 0)) throw std::invalid_argument("morse requires a > 0 and b > 0");
      return;
    case FamilyId::HDPT:
      if (!(p.beta > p.alpha + 1 && p.alpha + 1 > half()))
        throw std::invalid_argument("hdpt requires beta > alpha + 1 > 1/2");
      return;
    case FamilyId::Eckart:
      if (!(p.a > 0 && p.b > 0 && p.a * p.a < p.b))
        throw std::invalid_argument("eckart requires a > 0, b > 0, and a^2 < b");
      return;
    case FamilyId::HRM:
      if (!(p.a > 0 && p.b > 0 && p.a * p.a > p.b))
        throw std::invalid_argument("hrm requires a > 0, b > 0, and a^2 > b");
      return;
  }
  throw std::logic_error("unknown family");
}

ParameterSet make_params(FamilyId f, const BigRational& first, const BigRational& second) {
  ParameterSet p = make_params_unchecked(f, first, second);
  validate_params(f, p);
  return p;
}

BigRational shape_a(FamilyId f, const ParameterSet& p) {
  if (f == FamilyId::HDPT) return (p.beta - p.alpha - 1) / 2;
  return p.a;
}

BigRational level_shift(FamilyId f, const ParameterSet& p, int n) {
  BigRational a = shape_a(f, p);
  if (f == FamilyId::Eckart) return a + n;
  return a - n;
}

std::pair<BigRational, BigRational> jacobi_shift(FamilyId f, const ParameterSet& p, int n) {
  BigRational an = level_shift(f, p, n);
  if (an.is_zero()) throw std::domain_error("parameter map pole: level n equals a");
  BigRational q = p.b / an;
  if (f == FamilyId::Eckart) return {-an + q, -an - q};
  if (f == FamilyId::HRM) return {an + q, an - q};
  throw std::logic_error("jacobi_shift only defined for Eckart and HRM");
}

RationalFunction potential_rf(FamilyId f, const ParameterSet& p) {
  validate_params(f, p);
  return potential_rf_formal(f, p);
}

RationalFunction potential_rf_formal(FamilyId f, const ParameterSet& p) {
  switch (f) {
    case FamilyId::Morse:
      // b^2 y^2 - 2(a + 1/2) b y + a^2
      return RationalFunction(Poly({p.a * p.a, -2 * (p.a + half()) * p.b, p.b * p.b}, 'y'));
    case FamilyId::HDPT: {
      // 2(alpha^2 - 1/4)/(z-1) - 2(beta^2 - 1/4)/(z+1) + (beta - alpha - 1)^2
      BigRational ca = 2 * (p.alpha * p.alpha - BigRational(1, 4));
      BigRational cb = 2 * (p.beta * p.beta - BigRational(1, 4));
      BigRational v0 = (p.beta - p.alpha - 1) * (p.beta - p.alpha - 1);
      RationalFunction r(Poly(ca, 'z'), Poly({BigRational(-1), BigRational(1)}, 'z'));
      r -= RationalFunction(Poly(cb, 'z'), Poly({BigRational(1), BigRational(1)}, 'z'));
      r += rf_const(f, v0);
      return r;
    }
    case FamilyId::Eckart:
      // a(a-1) y^2 - 2 b y + b^2/a^2 + a; the y^2 coefficient pairs with the
      // sinh^a ground-state gauge so that E_0 = 0 holds identically.
      return RationalFunction(
          Poly({p.b * p.b / (p.a * p.a) + p.a, -2 * p.b, p.a * (p.a - 1)}, 'y'));
    case FamilyId::HRM:
      // a(a+1) y^2 + 2 b y + b^2/a^2 - a
      return RationalFunction(
          Poly({p.b * p.b / (p.a * p.a) - p.a, 2 * p.b, p.a * (p.a + 1)}, 'y'));
  }
  throw std::logic_error("unknown family");
}

BigRational dispersion(FamilyId f, const ParameterSet& p, int n) {
  if (n < 0) throw std::invalid_argument("level index must be >= 0");
  BigRational a = shape_a(f, p);
  BigRational an = level_shift(f, p, n);
  switch (f) {
    case FamilyId::Morse: return a * a - an * an;       // n(2a - n)
    case FamilyId::HDPT: return 4 * (a * a - an * an);  // 4n(2a - n)
    case FamilyId::Eckart:
    case FamilyId::HRM: {
      if (an.is_zero()) throw std::domain_error("dispersion pole: level n equals a");
      BigRational b2 = p.b * p.b;
      return a * a + b2 / (a * a) - an * an - b2 / (an * an);
    }
  }
  throw std::logic_error("unknown family");
}

bool is_bound(FamilyId f, const ParameterSet& p, int n) {
  if (n < 0) return false;
  BigRational a = shape_a(f, p);
  BigRational nn(n);
  switch (f) {
    case FamilyId::Morse:
    case FamilyId::HDPT: return nn < a;
    case FamilyId::Eckart: return (a + nn) * (a + nn) < p.b;
    case FamilyId::HRM: return nn < a && (a - nn) * (a - nn) > p.b;
  }
  return false;
}

std::vector<int> bound_indices(FamilyId f, const ParameterSet& p) {
  validate_params(f, p);
  std::vector<int> out;
  for (int n = 0; is_bound(f, p, n); ++n) out.push_back(n);
  return out;
}

EigenstateRep eigenfunction(FamilyId f, const ParameterSet& p, int n) {
  if (n < 0) throw std::invalid_argument("level index must be >= 0");
  using Base = GaugeFactor::Base;
  EigenstateRep st;
  st.family = f;
  st.params = p;
  st.n = n;
  char var = family_var(f);
  st.denominator_part = Poly(BigRational(1), var);
  switch (f) {
    case FamilyId::Morse: {
      BigRational an = p.a - n;
      st.gauge = {{Base::PowY, an}, {Base::ExpY, -p.b}};
      OrthoPoly L = laguerre(static_cast<unsigned>(n), 2 * an, var);
      st.polynomial_part = L.poly.compose_linear(BigRational(0), 2 * p.b);
      st.degree_deficient = L.degree_deficient;
      return st;
    }
    case FamilyId::HDPT: {
      st.gauge = {{Base::SinhX, p.alpha + half()}, {Base::CoshX, -p.beta + half()}};
      OrthoPoly P = jacobi(static_cast<unsigned>(n), p.alpha, -p.beta, var);
      st.polynomial_part = P.poly;
      st.degree_deficient = P.degree_deficient;
      return st;
    }
    case FamilyId::Eckart: {
      auto [alpha_n, beta_n] = jacobi_shift(f, p, n);
      st.gauge = {{Base::YMinus1, alpha_n / 2}, {Base::YPlus1, beta_n / 2}};
      OrthoPoly P = jacobi(static_cast<unsigned>(n), alpha_n, beta_n, var);
      st.polynomial_part = P.poly;
      st.degree_deficient = P.degree_deficient;
      return st;
    }
    case FamilyId::HRM: {
      auto [alpha_n, beta_n] = jacobi_shift(f, p, n);
      st.gauge = {{Base::OneMinusY, alpha_n / 2}, {Base::OnePlusY, beta_n / 2}};
      OrthoPoly P = jacobi(static_cast<unsigned>(n), alpha_n, beta_n, var);
      st.polynomial_part = P.poly;
      st.degree_deficient = P.degree_deficient;
      return st;
    }
  }
  throw std::logic_error("unknown family");
}

double gauge_log(const std::vector<GaugeFactor>& gauge, double x) {
  using Base = GaugeFactor::Base;
  // ln sinh and ln cosh written to stay finite for large |x|.
  auto log_sinh = [](double t) { return t + std::log1p(-std::exp(-2.0 * t)) - std::log(2.0); };
  auto log_cosh = [](double t) {
    double at = std::fabs(t);
    return at + std::log1p(std::exp(-2.0 * at)) - std::log(2.0);
  };
  double acc = 0.0;
  for (const auto& g : gauge) {
    double e = to_double(g.exponent);
    switch (g.base) {
      case Base::PowY: acc += e * (-x); break;                       // ln y = -x
      case Base::ExpY: acc += e * std::exp(-x); break;               // ln exp(e*y) = e*y
      case Base::SinhX: acc += e * log_sinh(x); break;
      case Base::CoshX: acc += e * log_cosh(x); break;
      case Base::YMinus1: acc += e * (-x - log_sinh(x)); break;      // coth x - 1 = e^-x/sinh x
      case Base::YPlus1: acc += e * (x - log_sinh(x)); break;        // coth x + 1 = e^x/sinh x
      case Base::OneMinusY: acc += e * (-x - log_cosh(x)); break;    // 1 - tanh x = e^-x/cosh x
      case Base::OnePlusY: acc += e * (x - log_cosh(x)); break;      // 1 + tanh x = e^x/cosh x
    }
  }
  return acc;
}

namespace {

/// -d/dx ln(base^e) as a chart expression.
ChartExpr gauge_factor_rs(ChartId chart, const GaugeFactor& g) {
  using Base = GaugeFactor::Base;
  char var = chart_var(chart);
  Poly v = Poly::variable(var);
  Poly one(BigRational(1), var);
  switch (g.base) {
    case Base::PowY:  // y^e with y = exp(-x): contributes the constant e
      return ChartExpr(chart, RationalFunction(g.exponent, var));
    case Base::ExpY:  // exp(e*y): contributes e*y
      return ChartExpr(chart, RationalFunction(Poly(g.exponent, var) * v));
    case Base::SinhX:  // -e coth x = -e sinh(2x)/(z-1)
      return ChartExpr(chart, RationalFunction(Poly(-g.exponent, var), v - one), 1);
    case Base::CoshX:  // -e tanh x = -e sinh(2x)/(z+1)
      return ChartExpr(chart, RationalFunction(Poly(-g.exponent, var), v + one), 1);
    case Base::YMinus1:  // e (y+1)
      return ChartExpr(chart, RationalFunction(Poly(g.exponent, var) * (v + one)));
    case Base::YPlus1:  // e (y-1)
      return ChartExpr(chart, RationalFunction(Poly(g.exponent, var) * (v - one)));
    case Base::OneMinusY:  // e (1+y)
      return ChartExpr(chart, RationalFunction(Poly(g.exponent, var) * (one + v)));
    case Base::OnePlusY:  // -e (1-y)
      return ChartExpr(chart, RationalFunction(Poly(-g.exponent, var) * (one - v)));
  }
  throw std::logic_error("unknown gauge base");
}

}  // namespace

ChartExpr rs_of_state(const EigenstateRep& state) {
  ChartId chart = family_chart(state.family);
  ChartExpr w = ChartExpr::zero(chart);
  for (const auto& g : state.gauge) w += gauge_factor_rs(chart, g);
  if (state.polynomial_part.is_zero())
    throw std::domain_error("state with identically zero polynomial part");
  ChartExpr num(chart, RationalFunction(state.polynomial_part));
  w -= num.dx() / num;
  if (state.denominator_part.degree() > 0) {
    ChartExpr den(chart, RationalFunction(state.denominator_part));
    w += den.dx() / den;
  }
  return w;
}

RSFunctionRep rs_function(FamilyId f, const ParameterSet& p, int n) {
  EigenstateRep st = eigenfunction(f, p, n);
  return RSFunctionRep{f, p, n, rs_of_state(st), st.degree_deficient};
}

ChartExpr rs_equation_residual(FamilyId f, const ParameterSet& p, int n) {
  ChartId chart = family_chart(f);
  ChartExpr w = rs_function(f, p, n).w;
  ChartExpr v(chart, potential_rf(f, p));
  ChartExpr en = ChartExpr::constant(chart, dispersion(f, p, n));
  return -w.dx() + w * w - v + en;
}

std::string sector_name(SectorClass c) {
  switch (c) {
    case SectorClass::Bound: return "bound";
    case SectorClass::UnphysicalPositive: return "unphysical-positive";
    case SectorClass::StrictIsospectralSector: return "strict-isospectral-sector";
    case SectorClass::QuasiIsospectralCandidate: return "quasi-isospectral-candidate";
    case SectorClass::NodefulRejected: return "nodeful-rejected";
    case SectorClass::DegenerateRejected: return "degenerate-rejected";
  }
  return "?";
}

std::optional<SectorClass> sector_from_name(std::string_view s) {
  for (SectorClass c :
       {SectorClass::Bound, SectorClass::UnphysicalPositive, SectorClass::StrictIsospectralSector,
        SectorClass::QuasiIsospectralCandidate, SectorClass::NodefulRejected,
        SectorClass::DegenerateRejected})
    if (sector_name(c) == s) return c;
  return std::nullopt;
}

Asymptotics asymptotic_signs(FamilyId f, const ParameterSet& p, int n) {
  if (sgn(dispersion(f, p, n)) >= 0)
    throw std::domain_error("asymptotic signs are defined in the negative-energy regime only");
  int parity = n % 2 == 0 ? 1 : -1;
  switch (f) {
    case FamilyId::Morse: {
      BigRational an = p.a - n;
      // x -> -inf: (-1)^n/n! y^a e^{-by} -> 0;  x -> +inf: y^{a_n} (2a_n+1)_n/n!
      EndSign left{parity, true};
      EndSign right{sgn(pochhammer(2 * an + 1, static_cast<unsigned>(n))), an > 0};
      return {left, right};
    }
    case FamilyId::HDPT: {
      // x -> 0+: x^{alpha+1/2} (alpha+1)_n/n!; x -> +inf: e^{(2n+alpha-beta+1)x} times
      // the leading Jacobi coefficient (n+alpha-beta+1)_n/(2^n n!).
      EndSign left{sgn(pochhammer(p.alpha + 1, static_cast<unsigned>(n))), true};
      BigRational growth = 2 * BigRational(n) + p.alpha - p.beta + 1;
      EndSign right{sgn(pochhammer(BigRational(n) + p.alpha - p.beta + 1, static_cast<unsigned>(n))),
                    growth < 0};
      return {left, right};
    }
    case FamilyId::Eckart: {
      auto [alpha_n, beta_n] = jacobi_shift(f, p, n);
      // x -> 0+ (y -> inf): x^a times the leading coefficient (1-2a-n)_n/(2^n n!);
      // x -> +inf (y -> 1+): (y-1)^{alpha_n/2} (alpha_n+1)_n/n!.
      EndSign left{sgn(pochhammer(1 - 2 * p.a - n, static_cast<unsigned>(n))), true};
      EndSign right{sgn(pochhammer(alpha_n + 1, static_cast<unsigned>(n))), alpha_n > 0};
      return {left, right};
    }
    case FamilyId::HRM: {
      auto [alpha_n, beta_n] = jacobi_shift(f, p, n);
      // x -> -inf (y -> -1): (1+y)^{beta_n/2} (-1)^n (beta_n+1)_n/n!;
      // x -> +inf (y -> +1): (1-y)^{alpha_n/2} (alpha_n+1)_n/n!.
      EndSign left{parity * sgn(pochhammer(beta_n + 1, static_cast<unsigned>(n))), beta_n > 0};
      EndSign right{sgn(pochhammer(alpha_n + 1, static_cast<unsigned>(n))), alpha_n > 0};
      return {left, right};
    }
  }
  throw std::logic_error("unknown family");
}

SectorInfo classify_sector(FamilyId f, const ParameterSet& p, int n) {
  if (n < 0) throw std::invalid_argument("level index must be >= 0");
  SectorInfo info;
  if (is_bound(f, p, n)) {
    info.cls = SectorClass::Bound;
    return info;
  }
  BigRational e = dispersion(f, p, n);  // throws at the HRM pole n = a
  if (sgn(e) >= 0) {
    info.cls = SectorClass::UnphysicalPositive;
    return info;
  }
  Asymptotics as = asymptotic_signs(f, p, n);
  info.left = as.left;
  info.right = as.right;
  if (as.left.sign == 0 || as.right.sign == 0) {
    info.cls = SectorClass::DegenerateRejected;
    return info;
  }
  if (f == FamilyId::HRM) {
    BigRational a = p.a, nn(n), width = p.b / p.a;
    if (a - width < nn && nn < a) {
      info.hrm_case = 1;
      info.cls = SectorClass::StrictIsospectralSector;
    } else if (a < nn && nn < a + width) {
      info.hrm_case = 2;
      info.cls = SectorClass::StrictIsospectralSector;
    } else {
      // remaining negative-energy window: n > 2a
      info.hrm_case = 3;
      info.cls = as.left.sign == as.right.sign ? SectorClass::QuasiIsospectralCandidate
                                               : SectorClass::NodefulRejected;
    }
    return info;
  }
  // Morse/HDPT (n > 2a) and Eckart (n > b/a - a): one disconjugacy sector,
  // same sign at both ends, reciprocal of the seed non-normalizable.
  info.cls = SectorClass::StrictIsospectralSector;
  return info;
}

}  // namespace ratext
