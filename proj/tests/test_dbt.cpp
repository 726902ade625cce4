#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>

#include "ratext/dbt.hpp"
#include "ratext/sturm.hpp"

using namespace ratext;

namespace {

ExtensionSpec spec_of(FamilyId f, const BigRational& p1, const BigRational& p2, int n) {
  return ExtensionSpec{f, make_params(f, p1, p2), n};
}

const ExtensionSpec kMorse6 = spec_of(FamilyId::Morse, BigRational(5, 2), BigRational(1), 6);
const ExtensionSpec kMorse8 = spec_of(FamilyId::Morse, BigRational(7, 2), BigRational(1), 8);
const ExtensionSpec kHdpt6 = spec_of(FamilyId::HDPT, BigRational(1, 2), BigRational(13, 2), 6);
const ExtensionSpec kEckart5 = spec_of(FamilyId::Eckart, BigRational(3, 2), BigRational(9), 5);
const ExtensionSpec kHrm3 = spec_of(FamilyId::HRM, BigRational(7, 2), BigRational(2), 3);
const ExtensionSpec kHrm4 = spec_of(FamilyId::HRM, BigRational(7, 2), BigRational(2), 4);
const ExtensionSpec kHrm8 = spec_of(FamilyId::HRM, BigRational(7, 2), BigRational(2), 8);

Poly seed_poly(const ExtensionSpec& s) {
  return eigenfunction(s.family, s.params, s.n).polynomial_part;
}

/// Multiplicative constant relating (w_n - w_k) psi_k to the stored
/// closed-form representation, fixed per family by the unnormalized
/// conventions.
BigRational operator_form_constant(FamilyId f) {
  switch (f) {
    case FamilyId::Morse:
    case FamilyId::HDPT: return BigRational(1);
    case FamilyId::Eckart:
    case FamilyId::HRM: return BigRational(1, 2);
  }
  return BigRational(1);
}

}  // namespace

TEST_CASE("certify_regularity examples") {
  RegularityCertificate c = certify_regularity(kMorse6);
  CHECK(c.node_count == 0);
  CHECK(c.certified);
  CHECK(!c.quasi);
  CHECK(c.sector.cls == SectorClass::StrictIsospectralSector);

  // E_4 = 4 > 0: not in a disconjugacy regime.
  CHECK_THROWS_AS(
      certify_regularity(spec_of(FamilyId::Morse, BigRational(5, 2), BigRational(1), 4)),
      std::domain_error);

  RegularityCertificate h4 = certify_regularity(kHrm4);
  CHECK(h4.certified);
  CHECK(h4.sector.hrm_case == 2);
  CHECK(!h4.quasi);

  RegularityCertificate h8 = certify_regularity(kHrm8);
  CHECK(h8.certified);
  CHECK(h8.quasi);
  CHECK(h8.reciprocal_is_ground);

  RegularityCertificate h9 =
      certify_regularity(spec_of(FamilyId::HRM, BigRational(7, 2), BigRational(2), 9));
  CHECK(!h9.certified);
  CHECK(h9.node_count == 1);
  CHECK(h9.sector.cls == SectorClass::NodefulRejected);
}

TEST_CASE("extend_potential structure and tails (Morse)") {
  ExtendedPotentialRep ext = extend_potential(kMorse6);
  CHECK(!ext.quasi);

  Poly l6 = seed_poly(kMorse6);  // L_6^(-7)(2by)
  Poly l6m = l6.monic();
  CHECK(ext.rf.den() == l6m * l6m);

  // V^(n) - V equals the classical partner shift 2by plus a rational part
  // that vanishes at both ends of the domain.
  RationalFunction v = potential_rf(kMorse6.family, kMorse6.params);
  RationalFunction shift(Poly({BigRational(0), 2 * kMorse6.params.b}, 'y'));
  RationalFunction d = ext.rf - v - shift;
  CHECK(d.num().degree() < d.den().degree());  // -> 0 as y -> inf
  CHECK(d.eval(BigRational(0)).is_zero());     // -> 0 as y -> 0
}

TEST_CASE("extend_potential tails at finite chart endpoints (HRM)") {
  // The chart jacobian (1 - y^2) kills 2 w_n' at y = +-1, so the extension
  // approaches the base potential at both spatial infinities.
  ExtendedPotentialRep ext = extend_potential(kHrm3);
  RationalFunction v = potential_rf(kHrm3.family, kHrm3.params);
  RationalFunction d = ext.rf - v;
  CHECK(d.eval(BigRational(1)).is_zero());
  CHECK(d.eval(BigRational(-1)).is_zero());
  Poly p3 = seed_poly(kHrm3).monic();
  CHECK(ext.rf.den() == p3 * p3);
}

TEST_CASE("extend_potential n = 0 reproduces the classical SUSY partner") {
  for (auto f : {FamilyId::Morse, FamilyId::HDPT, FamilyId::Eckart, FamilyId::HRM}) {
    ParameterSet p;
    switch (f) {
      case FamilyId::Morse: p = make_params(f, BigRational(5, 2), BigRational(1)); break;
      case FamilyId::HDPT: p = make_params(f, BigRational(1, 2), BigRational(13, 2)); break;
      case FamilyId::Eckart: p = make_params(f, BigRational(3, 2), BigRational(9)); break;
      case FamilyId::HRM: p = make_params(f, BigRational(7, 2), BigRational(2)); break;
    }
    ExtendedPotentialRep part = extend_potential(ExtensionSpec{f, p, 0});
    // Shape invariance of the base family: V + 2 w_0' = V(a_1) + E_1.
    ParameterSet shifted;
    switch (f) {
      case FamilyId::Morse: shifted = make_params_unchecked(f, p.a - 1, p.b); break;
      case FamilyId::HDPT: shifted = make_params_unchecked(f, p.alpha + 1, p.beta - 1); break;
      case FamilyId::Eckart: shifted = make_params_unchecked(f, p.a + 1, p.b); break;
      case FamilyId::HRM: shifted = make_params_unchecked(f, p.a - 1, p.b); break;
    }
    RationalFunction expected = potential_rf_formal(f, shifted) +
                                RationalFunction(dispersion(f, p, 1), family_var(f));
    CAPTURE(family_name(f));
    CHECK(part.rf == expected);
  }
}

TEST_CASE("extend_potential rejects bad seeds with a reason") {
  CHECK_THROWS_WITH_AS(
      extend_potential(spec_of(FamilyId::HRM, BigRational(7, 2), BigRational(2), 9)),
      "extension rejected: seed eigenfunction has 1 node(s) on the physical interval",
      std::domain_error);
}

TEST_CASE("extended_polynomial degree law and k = 0 convention") {
  ExtendedOrthoPoly p62 = extended_polynomial(kMorse6, 2);
  CHECK(p62.expected_degree == 7);
  CHECK(p62.poly.degree() == 7);
  CHECK(!p62.degree_deficient);

  // k = 0 with L_{-1} = 0: single term -(2a - n) L_{n-1}^{2a_n}(2by).
  ExtendedOrthoPoly p60 = extended_polynomial(kMorse6, 0);
  Poly expected =
      laguerre(5, BigRational(-7), 'y').poly.compose_linear(BigRational(0), BigRational(2));
  expected *= -(2 * kMorse6.params.a - 6);
  CHECK(p60.poly == expected);
  CHECK(p60.poly.degree() == 5);

  for (const ExtensionSpec& s : {kMorse6, kMorse8, kHdpt6, kEckart5, kHrm3, kHrm4}) {
    for (int k : bound_indices(s.family, s.params)) {
      ExtendedOrthoPoly ep = extended_polynomial(s, k);
      CAPTURE(family_name(s.family));
      CAPTURE(s.n);
      CAPTURE(k);
      CHECK(ep.poly.degree() == s.n + k - 1);
      CHECK(!ep.degree_deficient);
    }
  }

  CHECK_THROWS_AS(extended_polynomial(kMorse6, 5), std::domain_error);  // k not bound
}

TEST_CASE("Eckart/HRM brackets are antisymmetric under k <-> n") {
  // Both indices must be valid levels; use two bound levels of each family.
  for (FamilyId f : {FamilyId::Eckart, FamilyId::HRM}) {
    ParameterSet p = f == FamilyId::Eckart ? make_params(f, BigRational(3, 2), BigRational(30))
                                           : make_params(f, BigRational(7, 2), BigRational(2));
    ExtensionSpec ab{f, p, 2};
    ExtensionSpec ba{f, p, 1};
    Poly forward = extended_polynomial(ab, 1).poly;
    Poly backward = extended_polynomial(ba, 2).poly;
    CAPTURE(family_name(f));
    CHECK(forward == -backward);
  }
}

TEST_CASE("extended eigenstates match the Darboux operator form") {
  for (const ExtensionSpec& s : {kMorse6, kMorse8, kHdpt6, kEckart5, kHrm3, kHrm4}) {
    ChartExpr wn = rs_function(s.family, s.params, s.n).w;
    Poly pn = seed_poly(s);
    for (int k : bound_indices(s.family, s.params)) {
      ChartExpr wk = rs_function(s.family, s.params, k).w;
      Poly pk = eigenfunction(s.family, s.params, k).polynomial_part;
      ChartExpr q = wn - wk;
      Poly pnk = extended_polynomial(s, k).poly;
      CAPTURE(family_name(s.family));
      CAPTURE(s.n);
      CAPTURE(k);
      CHECK(q.sinh_pow() == (s.family == FamilyId::HDPT ? 1 : 0));
      RationalFunction lhs = q.rf() * RationalFunction(pk * pn);
      BigRational c = operator_form_constant(s.family);
      if (s.family == FamilyId::HDPT) c = BigRational(1);  // sinh(2x) absorbed by gauge shift
      CHECK(lhs == RationalFunction(Poly(c, pnk.var()) * pnk));
    }
  }
}

TEST_CASE("extended eigenstate representations") {
  EigenstateRep st = extended_eigenstate(kMorse6, 1);
  CHECK(st.n == 1);
  CHECK(st.gauge[0] == GaugeFactor{GaugeFactor::Base::PowY, BigRational(3, 2)});  // a_1
  CHECK(st.gauge[1] == GaugeFactor{GaugeFactor::Base::ExpY, BigRational(-1)});
  CHECK(st.denominator_part == seed_poly(kMorse6));

  // HDPT extended states live on the (alpha+1, beta-1) gauge.
  EigenstateRep hd = extended_eigenstate(kHdpt6, 0);
  CHECK(hd.gauge[0] == GaugeFactor{GaugeFactor::Base::SinhX, BigRational(2)});   // alpha + 3/2
  CHECK(hd.gauge[1] == GaugeFactor{GaugeFactor::Base::CoshX, BigRational(-5)});  // -beta + 3/2

  CHECK_THROWS_AS(extended_eigenstate(kMorse6, 7), std::domain_error);
  CHECK_THROWS_AS(extended_eigenstate(kHrm8, 0), std::domain_error);  // quasi seed
  CHECK_THROWS_AS(
      extended_eigenstate(spec_of(FamilyId::Morse, BigRational(5, 2), BigRational(1), 4), 0),
      std::domain_error);
}

TEST_CASE("transformed RS functions satisfy the extended Riccati equation") {
  for (const ExtensionSpec& s : {kMorse6, kHdpt6, kEckart5, kHrm3, kHrm4}) {
    RationalFunction vext = extend_potential(s).rf;
    ChartId chart = family_chart(s.family);
    for (int k : bound_indices(s.family, s.params)) {
      ChartExpr w = dbt_rs(s, k);
      ChartExpr residual = -w.dx() + w * w - ChartExpr(chart, vext) +
                           ChartExpr::constant(chart, dispersion(s.family, s.params, k));
      CAPTURE(family_name(s.family));
      CAPTURE(k);
      CHECK(residual.is_zero());
      // Same function obtained as -psi'/psi of the closed-form state.
      CHECK(w == rs_of_state(extended_eigenstate(s, k)));
    }
  }
}

TEST_CASE("superpartner: both construction routes agree") {
  for (const ExtensionSpec& s : {kMorse6, kMorse8, kHdpt6, kEckart5, kHrm3}) {
    RationalFunction via_ground = superpartner(s).rf;
    ChartId chart = family_chart(s.family);
    ChartExpr wn = rs_function(s.family, s.params, s.n).w;
    ChartExpr w0 = rs_function(s.family, s.params, 0).w;
    ChartExpr ratio = ChartExpr::constant(chart, dispersion(s.family, s.params, s.n)) / (wn - w0);
    ChartExpr corr = ratio.dx();
    corr += corr;
    REQUIRE(corr.sinh_pow() == 0);
    RationalFunction via_difference = potential_rf(s.family, s.params) - corr.rf();
    CAPTURE(family_name(s.family));
    CHECK(via_ground == via_difference);
  }
}

TEST_CASE("additional-term identity W = -w_{n-1} with translated parameters") {
  // Morse: W(x; a) = w_0 + E_n/(w_n - w_0) equals -w_{n-1}(x; a-1, b).
  {
    const ExtensionSpec& s = kMorse6;
    ChartId chart = family_chart(s.family);
    ChartExpr wn = rs_function(s.family, s.params, s.n).w;
    ChartExpr w0 = rs_function(s.family, s.params, 0).w;
    ChartExpr W = w0 + ChartExpr::constant(chart, dispersion(s.family, s.params, s.n)) / (wn - w0);
    ParameterSet shifted = make_params_unchecked(FamilyId::Morse, s.params.a - 1, s.params.b);
    CHECK(W == -rs_function(FamilyId::Morse, shifted, s.n - 1).w);
  }
  // HDPT: the same with (alpha_1, beta_1) = (alpha+1, beta-1).
  {
    const ExtensionSpec& s = kHdpt6;
    ChartId chart = family_chart(s.family);
    ChartExpr wn = rs_function(s.family, s.params, s.n).w;
    ChartExpr w0 = rs_function(s.family, s.params, 0).w;
    ChartExpr W = w0 + ChartExpr::constant(chart, dispersion(s.family, s.params, s.n)) / (wn - w0);
    ParameterSet shifted =
        make_params_unchecked(FamilyId::HDPT, s.params.alpha + 1, s.params.beta - 1);
    CHECK(W == -rs_function(FamilyId::HDPT, shifted, s.n - 1).w);
  }
}

TEST_CASE("enlarged shape invariance: Morse and HDPT") {
  ShapeInvarianceReport m = verify_enlarged_shape_invariance(kMorse8);
  CHECK(m.supported);
  CHECK(m.residual_zero);
  CHECK(m.e1 == BigRational(6));

  ShapeInvarianceReport h = verify_enlarged_shape_invariance(kHdpt6);
  CHECK(h.supported);
  CHECK(h.residual_zero);
  CHECK(h.e1 == BigRational(16));  // 4(2a - 1), a = 5/2

  // n = 1 edge: reduces to the base shape-invariance relation.
  ShapeInvarianceReport edge = verify_enlarged_shape_invariance(
      spec_of(FamilyId::Morse, BigRational(1, 3), BigRational(1), 1));
  CHECK(edge.supported);
  CHECK(edge.residual_zero);

  CHECK_THROWS_AS(verify_enlarged_shape_invariance(
                      spec_of(FamilyId::Morse, BigRational(5, 2), BigRational(1), 0)),
                  std::domain_error);
}

TEST_CASE("enlarged shape invariance is unsupported for Eckart and HRM") {
  ShapeInvarianceReport e = verify_enlarged_shape_invariance(kEckart5);
  CHECK(!e.supported);
  ShapeInvarianceReport h = verify_enlarged_shape_invariance(kHrm3);
  CHECK(!h.supported);
}

TEST_CASE("reciprocal of the seed: divergence decided by exponents") {
  for (const ExtensionSpec& s : {kMorse6, kHdpt6, kEckart5, kHrm3, kHrm4}) {
    ReciprocalMarker m = reciprocal_marker(s);
    CAPTURE(family_name(s.family));
    CHECK(m.diverges);  // strict: the would-be ground state fails the boundary conditions
  }
  // HRM case (i): psi_n -> 0 at +inf, so 1/psi_n blows up on the right.
  CHECK(!reciprocal_marker(kHrm3).at_left);
  // HRM case (ii): zero limit on the left.
  CHECK(reciprocal_marker(kHrm4).at_left);
  // Morse/HDPT/Eckart: zero limit at the left end.
  CHECK(reciprocal_marker(kMorse6).at_left);

  ReciprocalMarker q = reciprocal_marker(kHrm8);
  CHECK(!q.diverges);  // quasi: 1/psi_n is the new ground state
}

TEST_CASE("certified extension denominators are nodeless") {
  for (const ExtensionSpec& s : {kMorse6, kMorse8, kHdpt6, kEckart5, kHrm3, kHrm4, kHrm8}) {
    RationalFunction vext = extend_potential(s).rf;
    CAPTURE(family_name(s.family));
    CHECK(sturm_count(vext.den(), physical_interval(s.family)) == 0);
  }
}

TEST_CASE("superpartner requires a strictly isospectral seed") {
  CHECK_THROWS_AS(superpartner(kHrm8), std::domain_error);  // quasi seed
}

TEST_CASE("concurrent certification matches serial results") {
  // Certification and extension are pure functions on immutable values;
  // many specs certified in parallel must reproduce the serial artifacts.
  std::vector<ExtensionSpec> specs = {kMorse6, kMorse8, kHdpt6, kEckart5, kHrm3, kHrm4, kHrm8};
  std::vector<RegularityCertificate> serial;
  for (const auto& s : specs) serial.push_back(certify_regularity(s));

  std::vector<std::future<std::pair<RegularityCertificate, RationalFunction>>> jobs;
  for (const auto& s : specs)
    jobs.push_back(std::async(std::launch::async, [s] {
      return std::make_pair(certify_regularity(s), extend_potential(s).rf);
    }));
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto [cert, rf] = jobs[i].get();
    CHECK(cert == serial[i]);
    CHECK(rf == extend_potential(specs[i]).rf);
  }
}
