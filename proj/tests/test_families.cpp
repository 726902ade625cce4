#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ratext/families.hpp"
#include "ratext/sturm.hpp"

using namespace ratext;

namespace {

const BigRational kHalf(1, 2);

ParameterSet morse(const BigRational& a, const BigRational& b) {
  return make_params(FamilyId::Morse, a, b);
}
ParameterSet hdpt(const BigRational& al, const BigRational& be) {
  return make_params(FamilyId::HDPT, al, be);
}
ParameterSet eckart(const BigRational& a, const BigRational& b) {
  return make_params(FamilyId::Eckart, a, b);
}
ParameterSet hrm(const BigRational& a, const BigRational& b) {
  return make_params(FamilyId::HRM, a, b);
}

ChartExpr rf_expr(FamilyId f, const RationalFunction& rf, int sinh_pow = 0) {
  return ChartExpr(family_chart(f), rf, sinh_pow);
}

/// w_n rebuilt from the per-family closed forms (shifted-parameter
/// orthogonal-polynomial ratios), as an independent route to rs_function.
ChartExpr rs_closed_form(FamilyId f, const ParameterSet& p, int n) {
  char var = family_var(f);
  Poly v = Poly::variable(var), one(BigRational(1), var);
  switch (f) {
    case FamilyId::Morse: {
      BigRational an = p.a - n;
      RationalFunction w0(Poly({an, -p.b}, var));
      if (n == 0) return rf_expr(f, w0);
      Poly ln = laguerre(n, 2 * an, var).poly.compose_linear(BigRational(0), 2 * p.b);
      Poly lnm1 = laguerre(n - 1, 2 * an + 1, var).poly.compose_linear(BigRational(0), 2 * p.b);
      RationalFunction ratio(Poly(2 * p.b, var) * v * lnm1, ln);
      return rf_expr(f, w0 - ratio);
    }
    case FamilyId::HDPT: {
      RationalFunction w0 = RationalFunction(Poly(-(p.alpha + kHalf), var), v - one) +
                            RationalFunction(Poly(p.beta - kHalf, var), v + one);
      if (n == 0) return rf_expr(f, w0, 1);
      Poly pn = jacobi(n, p.alpha, -p.beta, var).poly;
      Poly pnm1 = jacobi(n - 1, p.alpha + 1, 1 - p.beta, var).poly;
      RationalFunction ratio(Poly(BigRational(n) + p.alpha - p.beta + 1, var) * pnm1, pn);
      return rf_expr(f, w0 - ratio, 1);
    }
    case FamilyId::Eckart: {
      auto [an, bn] = jacobi_shift(f, p, n);
      RationalFunction w0(BigRational(an / 2) * (v + one) + BigRational(bn / 2) * (v - one));
      if (n == 0) return rf_expr(f, w0);
      Poly pn = jacobi(n, an, bn, var).poly;
      Poly pnm1 = jacobi(n - 1, an + 1, bn + 1, var).poly;
      BigRational c = (BigRational(n) + an + bn + 1) / 2;
      RationalFunction ratio(Poly(c, var) * (v * v - one) * pnm1, pn);
      return rf_expr(f, w0 + ratio);
    }
    case FamilyId::HRM: {
      auto [an, bn] = jacobi_shift(f, p, n);
      RationalFunction w0(BigRational(an / 2) * (one + v) - BigRational(bn / 2) * (one - v));
      if (n == 0) return rf_expr(f, w0);
      Poly pn = jacobi(n, an, bn, var).poly;
      Poly pnm1 = jacobi(n - 1, an + 1, bn + 1, var).poly;
      BigRational c = (BigRational(n) + an + bn + 1) / 2;
      RationalFunction ratio(Poly(c, var) * (one - v * v) * pnm1, pn);
      return rf_expr(f, w0 - ratio);
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace

TEST_CASE("parameter validation names the violated constraint") {
  CHECK_THROWS_WITH_AS(make_params(FamilyId::Morse, BigRational(-1), BigRational(1)),
                       "morse requires a > 0 and b > 0", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_params(FamilyId::Eckart, BigRational(2), BigRational(1)),
                       "eckart requires a > 0, b > 0, and a^2 < b", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_params(FamilyId::HRM, BigRational(1), BigRational(4)),
                       "hrm requires a > 0, b > 0, and a^2 > b", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_params(FamilyId::HDPT, BigRational(1, 2), BigRational(3, 2)),
                       "hdpt requires beta > alpha + 1 > 1/2", std::invalid_argument);
  CHECK_NOTHROW(make_params(FamilyId::HDPT, BigRational(1, 2), BigRational(13, 2)));
}

TEST_CASE("potential_rf examples") {
  RationalFunction v = potential_rf(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)));
  CHECK(v == RationalFunction(Poly({BigRational(25, 4), BigRational(-6), BigRational(1)}, 'y')));

  RationalFunction ve = potential_rf(FamilyId::Eckart, eckart(BigRational(1), BigRational(4)));
  CHECK(ve.num().coeff(0) == BigRational(17));  // V_0 = b^2/a^2 + a

  RationalFunction vh = potential_rf(FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2)));
  CHECK(vh.num().coeff(0) == BigRational(-311, 98));  // V_0 = b^2/a^2 - a

  CHECK_THROWS_AS(
      potential_rf(FamilyId::Eckart,
                   make_params_unchecked(FamilyId::Eckart, BigRational(2), BigRational(1))),
      std::invalid_argument);
}

TEST_CASE("dispersion examples and E_0 = 0") {
  CHECK(dispersion(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 6) ==
        BigRational(-6));
  CHECK(dispersion(FamilyId::HDPT, hdpt(BigRational(1, 2), BigRational(11, 2)), 5) ==
        BigRational(-20));
  CHECK(dispersion(FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2)), 3) ==
        BigRational(-180, 49));
  CHECK(dispersion(FamilyId::Eckart, eckart(BigRational(1), BigRational(4)), 4) ==
        BigRational(-216, 25));

  for (auto [f, p] : std::vector<std::pair<FamilyId, ParameterSet>>{
           {FamilyId::Morse, morse(BigRational(7, 2), BigRational(1))},
           {FamilyId::HDPT, hdpt(BigRational(1, 2), BigRational(13, 2))},
           {FamilyId::Eckart, eckart(BigRational(3, 2), BigRational(9))},
           {FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2))}}) {
    CHECK(dispersion(f, p, 0).is_zero());
  }

  CHECK_THROWS_AS(dispersion(FamilyId::HRM, hrm(BigRational(2), BigRational(3)), 2),
                  std::domain_error);  // Laurent pole n = a
}

TEST_CASE("bound_indices examples and monotonicity") {
  CHECK(bound_indices(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1))) ==
        std::vector<int>{0, 1, 2});
  CHECK(bound_indices(FamilyId::Eckart, eckart(BigRational(1), BigRational(4))) ==
        std::vector<int>{0});
  CHECK(bound_indices(FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2))) ==
        std::vector<int>{0, 1, 2});
  CHECK(bound_indices(FamilyId::HDPT, hdpt(BigRational(1, 2), BigRational(13, 2))) ==
        std::vector<int>{0, 1, 2});

  for (auto [f, p] : std::vector<std::pair<FamilyId, ParameterSet>>{
           {FamilyId::Morse, morse(BigRational(9, 2), BigRational(2))},
           {FamilyId::HDPT, hdpt(BigRational(3, 4), BigRational(17, 2))},
           {FamilyId::Eckart, eckart(BigRational(3, 2), BigRational(30))},
           {FamilyId::HRM, hrm(BigRational(13, 3), BigRational(3))}}) {
    std::vector<int> idx = bound_indices(f, p);
    REQUIRE(!idx.empty());
    for (std::size_t i = 1; i < idx.size(); ++i)
      CHECK(dispersion(f, p, idx[i]) > dispersion(f, p, idx[i - 1]));
  }
}

TEST_CASE("ground-state gauge representations") {
  EigenstateRep m0 = eigenfunction(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 0);
  REQUIRE(m0.gauge.size() == 2);
  CHECK(m0.gauge[0] == GaugeFactor{GaugeFactor::Base::PowY, BigRational(5, 2)});
  CHECK(m0.gauge[1] == GaugeFactor{GaugeFactor::Base::ExpY, BigRational(-1)});
  CHECK(m0.polynomial_part == Poly(BigRational(1), 'y'));
  CHECK(m0.denominator_part == Poly(BigRational(1), 'y'));

  EigenstateRep h0 = eigenfunction(FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2)), 0);
  CHECK(h0.gauge[0] == GaugeFactor{GaugeFactor::Base::OneMinusY, BigRational(57, 28)});
  CHECK(h0.gauge[1] == GaugeFactor{GaugeFactor::Base::OnePlusY, BigRational(41, 28)});

  // Eckart a=1, b=4: psi_0 = e^{-4x} sinh x, i.e. alpha_0 = 3, beta_0 = -5.
  EigenstateRep e0 = eigenfunction(FamilyId::Eckart, eckart(BigRational(1), BigRational(4)), 0);
  CHECK(e0.gauge[0] == GaugeFactor{GaugeFactor::Base::YMinus1, BigRational(3, 2)});
  CHECK(e0.gauge[1] == GaugeFactor{GaugeFactor::Base::YPlus1, BigRational(-5, 2)});
}

TEST_CASE("gauge_log matches direct evaluation") {
  EigenstateRep m0 = eigenfunction(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 0);
  for (double x : {-1.5, 0.0, 2.0}) {
    double y = std::exp(-x);
    CHECK(gauge_log(m0.gauge, x) == doctest::Approx(2.5 * std::log(y) - y).epsilon(1e-13));
  }
  EigenstateRep e0 = eigenfunction(FamilyId::Eckart, eckart(BigRational(1), BigRational(4)), 0);
  for (double x : {0.25, 1.0, 3.0}) {
    CHECK(gauge_log(e0.gauge, x) ==
          doctest::Approx(std::log(std::exp(-4.0 * x) * std::sinh(x))).epsilon(1e-12));
  }
  EigenstateRep d0 = eigenfunction(FamilyId::HDPT, hdpt(BigRational(1, 2), BigRational(13, 2)), 0);
  for (double x : {0.3, 1.2}) {
    double expected = std::log(std::sinh(x)) - 6.0 * std::log(std::cosh(x));
    CHECK(gauge_log(d0.gauge, x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("rs_function paper closed forms") {
  // Morse n=0: w_0 = a - by.
  RSFunctionRep m0 = rs_function(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 0);
  CHECK(m0.w == ChartExpr(ChartId::ExpNegX,
                          RationalFunction(Poly({BigRational(5, 2), BigRational(-1)}, 'y'))));

  // HDPT n=0: w_0 = -(alpha+1/2) coth x + (beta-1/2) tanh x.
  ParameterSet d = hdpt(BigRational(1, 2), BigRational(13, 2));
  RSFunctionRep d0 = rs_function(FamilyId::HDPT, d, 0);
  CHECK(d0.w.sinh_pow() == 1);
  CHECK(d0.w == rs_closed_form(FamilyId::HDPT, d, 0));

  // Morse a=5/2, b=1, n=1: w_1 = 3/2 - y - 2y/(4-2y).
  RSFunctionRep m1 = rs_function(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 1);
  RationalFunction expected(Poly({BigRational(-3), BigRational(9, 2), BigRational(-1)}, 'y'),
                            Poly({BigRational(-2), BigRational(1)}, 'y'));
  CHECK(m1.w == ChartExpr(ChartId::ExpNegX, expected));

  // All families, several levels: generic -psi'/psi equals the closed form.
  std::vector<std::pair<FamilyId, ParameterSet>> cases = {
      {FamilyId::Morse, morse(BigRational(5, 2), BigRational(1))},
      {FamilyId::Morse, morse(BigRational(7, 3), BigRational(3, 2))},
      {FamilyId::HDPT, d},
      {FamilyId::HDPT, hdpt(BigRational(3, 4), BigRational(15, 2))},
      {FamilyId::Eckart, eckart(BigRational(1), BigRational(4))},
      {FamilyId::Eckart, eckart(BigRational(3, 2), BigRational(9))},
      {FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2))},
      {FamilyId::HRM, hrm(BigRational(10, 3), BigRational(2))}};
  for (auto& [f, p] : cases)
    for (int n = 0; n <= 6; ++n) {
      if (f == FamilyId::HRM && BigRational(n) == shape_a(f, p)) continue;
      CAPTURE(family_name(f));
      CAPTURE(n);
      CHECK(rs_function(f, p, n).w == rs_closed_form(f, p, n));
    }
}

TEST_CASE("Riccati-Schroedinger equation holds exactly") {
  std::vector<std::pair<FamilyId, ParameterSet>> cases = {
      {FamilyId::Morse, morse(BigRational(5, 2), BigRational(1))},
      {FamilyId::HDPT, hdpt(BigRational(1, 2), BigRational(13, 2))},
      {FamilyId::Eckart, eckart(BigRational(3, 2), BigRational(9))},
      {FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2))}};
  for (auto& [f, p] : cases)
    for (int n = 0; n <= 8; ++n) {
      if (f == FamilyId::HRM && BigRational(n) == shape_a(f, p)) continue;
      CAPTURE(family_name(f));
      CAPTURE(n);
      CHECK(rs_equation_residual(f, p, n).is_zero());
    }
}

TEST_CASE("asymptotic_signs examples") {
  Asymptotics m = asymptotic_signs(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 6);
  CHECK(m.left == EndSign{1, true});    // 0^+ as x -> -inf, (-1)^6 = +
  CHECK(m.right == EndSign{1, false});  // +inf, sign of (2a_6+1)_6 = (-6)_6 > 0

  Asymptotics d = asymptotic_signs(FamilyId::HDPT, hdpt(BigRational(1, 2), BigRational(13, 2)), 6);
  CHECK(d.left == EndSign{1, true});
  CHECK(d.right == EndSign{1, false});

  Asymptotics e = asymptotic_signs(FamilyId::Eckart, eckart(BigRational(1), BigRational(4)), 4);
  CHECK(e.left.sign == 1);  // (-1)^4
  CHECK(e.right.sign == 1);
  CHECK(e.left.zero_limit);    // psi ~ x^a -> 0 at the origin
  CHECK(!e.right.zero_limit);  // diverges at +inf in the sector

  CHECK_THROWS_AS(asymptotic_signs(FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 2),
                  std::domain_error);  // bound level: not a negative-energy regime
}

TEST_CASE("classify_sector examples") {
  ParameterSet pm = morse(BigRational(5, 2), BigRational(1));
  CHECK(classify_sector(FamilyId::Morse, pm, 1).cls == SectorClass::Bound);
  CHECK(classify_sector(FamilyId::Morse, pm, 4).cls == SectorClass::UnphysicalPositive);
  CHECK(classify_sector(FamilyId::Morse, pm, 5).cls == SectorClass::UnphysicalPositive);  // E = 0
  SectorInfo s6 = classify_sector(FamilyId::Morse, pm, 6);
  CHECK(s6.cls == SectorClass::StrictIsospectralSector);
  CHECK(s6.left.sign == 1);
  CHECK(s6.right.sign == 1);

  ParameterSet ph = hrm(BigRational(7, 2), BigRational(2));
  SectorInfo h3 = classify_sector(FamilyId::HRM, ph, 3);
  CHECK(h3.cls == SectorClass::StrictIsospectralSector);
  CHECK(h3.hrm_case == 1);
  CHECK(h3.left == EndSign{1, false});  // -> +inf on the left
  CHECK(h3.right == EndSign{1, true});  // -> 0^+ on the right

  SectorInfo h4 = classify_sector(FamilyId::HRM, ph, 4);
  CHECK(h4.cls == SectorClass::StrictIsospectralSector);
  CHECK(h4.hrm_case == 2);

  CHECK(classify_sector(FamilyId::HRM, ph, 5).cls == SectorClass::UnphysicalPositive);

  // Case (iii): decided by the exact signs of (-1)^n (beta_n+1)_n and
  // (alpha_n+1)_n, recomputed here independently.
  for (int n : {8, 9, 10, 11}) {
    auto [alpha_n, beta_n] = jacobi_shift(FamilyId::HRM, ph, n);
    int left = (n % 2 == 0 ? 1 : -1) * sgn(pochhammer(beta_n + 1, n));
    int right = sgn(pochhammer(alpha_n + 1, n));
    SectorInfo info = classify_sector(FamilyId::HRM, ph, n);
    CHECK(info.hrm_case == 3);
    if (left == right)
      CHECK(info.cls == SectorClass::QuasiIsospectralCandidate);
    else
      CHECK(info.cls == SectorClass::NodefulRejected);
  }
  CHECK(classify_sector(FamilyId::HRM, ph, 8).cls == SectorClass::QuasiIsospectralCandidate);
  CHECK(classify_sector(FamilyId::HRM, ph, 9).cls == SectorClass::NodefulRejected);

  // Exact vanishing of an endpoint coefficient: HRM a=2, b=3, n=5 has
  // alpha_5 = -4, so (alpha_5+1)_5 contains the factor 0.
  ParameterSet pd = hrm(BigRational(2), BigRational(3));
  auto [a5, b5] = jacobi_shift(FamilyId::HRM, pd, 5);
  REQUIRE(a5 == BigRational(-4));
  CHECK(classify_sector(FamilyId::HRM, pd, 5).cls == SectorClass::DegenerateRejected);

  CHECK_THROWS_AS(classify_sector(FamilyId::HRM, pd, 2), std::domain_error);  // pole n = a
}

TEST_CASE("nodeful case-(iii) seed has exactly one node") {
  // Disconjugacy allows at most one zero; opposite end signs force exactly one.
  ParameterSet ph = hrm(BigRational(7, 2), BigRational(2));
  EigenstateRep seed = eigenfunction(FamilyId::HRM, ph, 9);
  CHECK(sturm_count(seed.polynomial_part, physical_interval(FamilyId::HRM)) == 1);
}

TEST_CASE("strict sectors are nodeless (small sweep)") {
  std::vector<std::tuple<FamilyId, ParameterSet, int>> cases = {
      {FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 6},
      {FamilyId::Morse, morse(BigRational(5, 2), BigRational(1)), 7},
      {FamilyId::HDPT, hdpt(BigRational(1, 2), BigRational(13, 2)), 6},
      {FamilyId::Eckart, eckart(BigRational(1), BigRational(4)), 4},
      {FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2)), 3},
      {FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2)), 4}};
  for (auto& [f, p, n] : cases) {
    CAPTURE(family_name(f));
    CAPTURE(n);
    REQUIRE(classify_sector(f, p, n).cls == SectorClass::StrictIsospectralSector);
    EigenstateRep seed = eigenfunction(f, p, n);
    CHECK(sturm_count(seed.polynomial_part, physical_interval(f)) == 0);
  }
}

TEST_CASE("classification partitions levels") {
  std::vector<std::pair<FamilyId, ParameterSet>> cases = {
      {FamilyId::Morse, morse(BigRational(5, 2), BigRational(1))},
      {FamilyId::HDPT, hdpt(BigRational(1, 2), BigRational(13, 2))},
      {FamilyId::Eckart, eckart(BigRational(3, 2), BigRational(9))},
      {FamilyId::HRM, hrm(BigRational(7, 2), BigRational(2))}};
  for (auto& [f, p] : cases)
    for (int n = 0; n <= 12; ++n) {
      if (f == FamilyId::HRM && BigRational(n) == shape_a(f, p)) continue;
      SectorInfo info = classify_sector(f, p, n);
      bool bound = is_bound(f, p, n);
      CHECK(bound == (info.cls == SectorClass::Bound));
      if (bound) CHECK(sgn(dispersion(f, p, n)) >= 0);  // never both bound and negative
      if (info.cls != SectorClass::Bound && info.cls != SectorClass::UnphysicalPositive)
        CHECK(sgn(dispersion(f, p, n)) < 0);
    }
}

TEST_CASE("algebraic chart data") {
  AlgebraicChart m = algebraic_chart(FamilyId::Morse);
  REQUIRE(m.jacobian.has_value());
  CHECK(*m.jacobian == RationalFunction(-Poly::variable('y')));  // dy/dx = -y
  CHECK(m.variable_tag == 'y');

  Poly y = Poly::variable('y'), one(BigRational(1), 'y');
  AlgebraicChart e = algebraic_chart(FamilyId::Eckart);
  CHECK(*e.jacobian == RationalFunction(one - y * y));
  AlgebraicChart h = algebraic_chart(FamilyId::HRM);
  CHECK(*h.jacobian == RationalFunction(one - y * y));

  // z = cosh 2x: only the squared jacobian is rational, (dz/dx)^2 = 4(z^2-1).
  AlgebraicChart d = algebraic_chart(FamilyId::HDPT);
  CHECK(!d.jacobian.has_value());
  Poly z = Poly::variable('z'), onez(BigRational(1), 'z');
  CHECK(d.jacobian_squared == RationalFunction(BigRational(4) * (z * z - onez)));
  CHECK(d.variable_tag == 'z');
}

TEST_CASE("degree deficiency is surfaced on states and RS functions") {
  // HRM a=3/2, b=2, n=4: alpha_4+beta_4 = -5 kills only the leading Jacobi
  // coefficient; the state survives with its true degree flagged.
  ParameterSet p = make_params(FamilyId::HRM, BigRational(3, 2), BigRational(2));
  EigenstateRep st = eigenfunction(FamilyId::HRM, p, 4);
  CHECK(st.degree_deficient);
  CHECK(st.polynomial_part.degree() < 4);
  CHECK(!st.polynomial_part.is_zero());
  CHECK(rs_function(FamilyId::HRM, p, 4).degree_deficient);

  // HRM a=2, b=3, n=5 is fully degenerate: P_5^(-4,-2) is identically zero,
  // so no RS function exists and the sector is rejected outright.
  ParameterSet pz = make_params(FamilyId::HRM, BigRational(2), BigRational(3));
  CHECK(eigenfunction(FamilyId::HRM, pz, 5).polynomial_part.is_zero());
  CHECK_THROWS_AS(rs_function(FamilyId::HRM, pz, 5), std::domain_error);
  CHECK(classify_sector(FamilyId::HRM, pz, 5).cls == SectorClass::DegenerateRejected);
}
