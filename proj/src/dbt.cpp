#include "ratext/dbt.hpp"

#include <stdexcept>

#include "ratext/sturm.hpp"

namespace ratext {

namespace {

ChartExpr chart_of_rf(FamilyId f, const RationalFunction& rf) {
  return ChartExpr(family_chart(f), rf);
}

Poly jacobi_or_zero(int n, const BigRational& alpha, const BigRational& beta, char var,
                    bool* deficient) {
  if (n < 0) return Poly(BigRational(0), var);  // P_{-1} == 0 convention
  OrthoPoly p = jacobi(static_cast<unsigned>(n), alpha, beta, var);
  if (deficient && p.degree_deficient) *deficient = true;
  return p.poly;
}

Poly laguerre_or_zero(int n, const BigRational& alpha, const BigRational& two_b, char var,
                      bool* deficient) {
  if (n < 0) return Poly(BigRational(0), var);  // L_{-1} == 0 convention
  OrthoPoly p = laguerre(static_cast<unsigned>(n), alpha, var);
  if (deficient && p.degree_deficient) *deficient = true;
  return p.poly.compose_linear(BigRational(0), two_b);
}

/// One half of the antisymmetric Eckart bracket; the full polynomial is
/// half(n,k) - half(k,n).
Poly eckart_half(const ParameterSet& p, int i, int j, bool* deficient) {
  char var = 'y';
  auto [ai, bi] = jacobi_shift(FamilyId::Eckart, p, i);
  auto [aj, bj] = jacobi_shift(FamilyId::Eckart, p, j);
  Poly y = Poly::variable(var), one(BigRational(1), var);
  Poly pi = jacobi_or_zero(i, ai, bi, var, deficient);
  Poly pj = jacobi_or_zero(j, aj, bj, var, deficient);
  Poly pim1 = jacobi_or_zero(i - 1, ai + 1, bi + 1, var, deficient);
  Poly lin = ai * (y + one) + bi * (y - one);
  Poly t1 = lin * pi * pj;
  Poly t2 = (y * y - one) * pj * pim1 * (BigRational(i) + ai + bi + 1);
  return t1 + t2;
}

/// One half of the antisymmetric HRM bracket (second index carries the
/// shifted-parameter objects).
Poly hrm_half(const ParameterSet& p, int i, int j, bool* deficient) {
  char var = 'y';
  auto [ai, bi] = jacobi_shift(FamilyId::HRM, p, i);
  auto [aj, bj] = jacobi_shift(FamilyId::HRM, p, j);
  Poly y = Poly::variable(var), one(BigRational(1), var);
  Poly pi = jacobi_or_zero(i, ai, bi, var, deficient);
  Poly pj = jacobi_or_zero(j, aj, bj, var, deficient);
  Poly pjm1 = jacobi_or_zero(j - 1, aj + 1, bj + 1, var, deficient);
  Poly t1 = (one - y * y) * pi * pjm1 * (BigRational(j) + aj + bj + 1);
  Poly t2 = (aj * (one + y) - bj * (one - y)) * pi * pj;
  return t1 - t2;
}

std::string rejection_reason(const RegularityCertificate& cert) {
  if (cert.node_count > 0)
    return "seed eigenfunction has " + std::to_string(cert.node_count) +
           " node(s) on the physical interval";
  if (cert.left_sign.sign == 0 || cert.right_sign.sign == 0)
    return "degenerate endpoint coefficient (vanishing Pochhammer product)";
  if (cert.left_sign.sign != cert.right_sign.sign)
    return "opposite limit signs at the interval ends";
  return "sector " + sector_name(cert.sector.cls) + " does not admit an extension";
}

}  // namespace

RegularityCertificate certify_regularity(const ExtensionSpec& spec) {
  BigRational e = dispersion(spec.family, spec.params, spec.n);
  if (sgn(e) >= 0)
    throw std::domain_error("regularity certification requires a negative-energy seed (E_" +
                            std::to_string(spec.n) + " = " + rat_str(e) + " >= 0)");
  RegularityCertificate cert;
  cert.spec = spec;
  cert.sector = classify_sector(spec.family, spec.params, spec.n);
  cert.left_sign = cert.sector.left;
  cert.right_sign = cert.sector.right;
  EigenstateRep seed = eigenfunction(spec.family, spec.params, spec.n);
  cert.node_count = seed.polynomial_part.is_constant()
                        ? 0
                        : sturm_count(seed.polynomial_part, physical_interval(spec.family));
  bool sector_ok = cert.sector.cls == SectorClass::StrictIsospectralSector ||
                   cert.sector.cls == SectorClass::QuasiIsospectralCandidate;
  cert.certified = cert.node_count == 0 && cert.left_sign.sign != 0 &&
                   cert.left_sign.sign == cert.right_sign.sign && sector_ok;
  cert.quasi = cert.sector.cls == SectorClass::QuasiIsospectralCandidate;
  cert.reciprocal_is_ground = cert.certified && cert.quasi;
  return cert;
}

RationalFunction extension_rf_formal(FamilyId f, const ParameterSet& p, int n) {
  ChartExpr w = rs_function(f, p, n).w;
  ChartExpr two_wp = w.dx();
  two_wp += two_wp;
  if (two_wp.sinh_pow() != 0) throw std::logic_error("extension not rational");
  return potential_rf_formal(f, p) + two_wp.rf();
}

ExtendedPotentialRep extend_potential(const ExtensionSpec& spec) {
  validate_params(spec.family, spec.params);
  bool quasi = false;
  if (spec.n != 0) {  // n = 0 reproduces the classical SUSY partner; no certificate needed
    RegularityCertificate cert = certify_regularity(spec);
    if (!cert.certified)
      throw std::domain_error("extension rejected: " + rejection_reason(cert));
    quasi = cert.quasi;
  }
  return ExtendedPotentialRep{spec, extension_rf_formal(spec.family, spec.params, spec.n), quasi};
}

ExtendedOrthoPoly extended_polynomial(const ExtensionSpec& spec, int k) {
  if (!is_bound(spec.family, spec.params, k))
    throw std::domain_error("level k = " + std::to_string(k) + " is not a bound state");
  ExtendedOrthoPoly out;
  out.spec = spec;
  out.k = k;
  out.expected_degree = spec.n + k - 1;
  bool deficient = false;
  const ParameterSet& p = spec.params;
  const int n = spec.n;
  switch (spec.family) {
    case FamilyId::Morse: {
      BigRational an = p.a - n, ak = p.a - k;
      BigRational two_b = 2 * p.b;
      Poly ln = laguerre_or_zero(n, 2 * an, two_b, 'y', &deficient);
      Poly lk = laguerre_or_zero(k, 2 * ak, two_b, 'y', &deficient);
      Poly lnm1 = laguerre_or_zero(n - 1, 2 * an, two_b, 'y', &deficient);
      Poly lkm1 = laguerre_or_zero(k - 1, 2 * ak, two_b, 'y', &deficient);
      out.poly = (2 * p.a - k) * ln * lkm1 - (2 * p.a - n) * lk * lnm1;
      break;
    }
    case FamilyId::HDPT: {
      BigRational c = p.alpha - p.beta + 1;
      Poly pn = jacobi_or_zero(n, p.alpha, -p.beta, 'z', &deficient);
      Poly pk = jacobi_or_zero(k, p.alpha, -p.beta, 'z', &deficient);
      Poly pnm1 = jacobi_or_zero(n - 1, p.alpha + 1, -p.beta + 1, 'z', &deficient);
      Poly pkm1 = jacobi_or_zero(k - 1, p.alpha + 1, -p.beta + 1, 'z', &deficient);
      out.poly = (BigRational(k) + c) * pn * pkm1 - (BigRational(n) + c) * pnm1 * pk;
      break;
    }
    case FamilyId::Eckart:
      out.poly = eckart_half(p, n, k, &deficient) - eckart_half(p, k, n, &deficient);
      break;
    case FamilyId::HRM:
      out.poly = hrm_half(p, n, k, &deficient) - hrm_half(p, k, n, &deficient);
      break;
  }
  out.degree_deficient = deficient || out.poly.degree() != out.expected_degree;
  return out;
}

EigenstateRep extended_eigenstate(const ExtensionSpec& spec, int k) {
  RegularityCertificate cert = certify_regularity(spec);
  if (!cert.certified) throw std::domain_error("extension rejected: " + rejection_reason(cert));
  if (cert.quasi)
    throw std::domain_error(
        "closed-form extended eigenstates are constructed for strictly isospectral seeds only");
  if (!is_bound(spec.family, spec.params, k))
    throw std::domain_error("level k = " + std::to_string(k) + " is not a bound state");

  EigenstateRep st;
  st.family = spec.family;
  st.params = spec.params;
  st.n = k;
  if (spec.family == FamilyId::HDPT) {
    ParameterSet shifted = make_params_unchecked(FamilyId::HDPT, spec.params.alpha + 1,
                                                 spec.params.beta - 1);
    st.gauge = eigenfunction(FamilyId::HDPT, shifted, 0).gauge;
  } else {
    st.gauge = eigenfunction(spec.family, spec.params, k).gauge;
  }
  ExtendedOrthoPoly ep = extended_polynomial(spec, k);
  st.polynomial_part = ep.poly;
  st.denominator_part = eigenfunction(spec.family, spec.params, spec.n).polynomial_part;
  st.degree_deficient = ep.degree_deficient;
  return st;
}

ChartExpr dbt_rs(const ExtensionSpec& spec, int k) {
  ChartId chart = family_chart(spec.family);
  ChartExpr wn = rs_function(spec.family, spec.params, spec.n).w;
  ChartExpr wk = rs_function(spec.family, spec.params, k).w;
  BigRational ek = dispersion(spec.family, spec.params, k);
  BigRational en = dispersion(spec.family, spec.params, spec.n);
  ChartExpr gap = ChartExpr::constant(chart, ek - en);
  return -wn + gap / (wn - wk);
}

ExtendedPotentialRep superpartner(const ExtensionSpec& spec) {
  ExtendedPotentialRep ext = extend_potential(spec);
  if (ext.quasi)
    throw std::domain_error(
        "superpartner via w_0^(n) needs a strictly isospectral seed (the quasi ground state is "
        "1/psi_n, not the image of psi_0)");
  ChartExpr w0n = dbt_rs(spec, 0);
  ChartExpr two_wp = w0n.dx();
  two_wp += two_wp;
  if (two_wp.sinh_pow() != 0) throw std::logic_error("superpartner not rational");
  return ExtendedPotentialRep{spec, ext.rf + two_wp.rf(), ext.quasi};
}

namespace {

ReciprocalMarker reciprocal_marker_impl(const ExtensionSpec& spec, const Asymptotics& as) {
  ReciprocalMarker m;
  const ParameterSet& p = spec.params;
  if (!as.left.zero_limit && !as.right.zero_limit) {
    // Quasi candidate: psi_n diverges at both ends, so 1/psi_n decays at both.
    m.at_left = false;
    m.diverges = false;
    m.reason = "1/psi_n decays at both ends and becomes the new ground state";
    return m;
  }
  m.at_left = as.left.zero_limit;
  m.diverges = true;
  switch (spec.family) {
    case FamilyId::Morse:
      m.reason = "1/psi_n ~ exp(+" + rat_str(p.b) + " y) as y -> inf";
      break;
    case FamilyId::HDPT:
      m.reason = "1/psi_n ~ x^(-" + rat_str(p.alpha + BigRational(1, 2)) + ") as x -> 0+";
      break;
    case FamilyId::Eckart:
      m.reason = "1/psi_n ~ x^(-" + rat_str(p.a) + ") as x -> 0+";
      break;
    case FamilyId::HRM: {
      auto [alpha_n, beta_n] = jacobi_shift(FamilyId::HRM, p, spec.n);
      if (m.at_left)
        m.reason = "1/psi_n ~ (1+y)^(-" + rat_str(beta_n / 2) + ") as y -> -1";
      else
        m.reason = "1/psi_n ~ (1-y)^(-" + rat_str(alpha_n / 2) + ") as y -> +1";
      break;
    }
  }
  return m;
}

}  // namespace

ReciprocalMarker reciprocal_marker(const ExtensionSpec& spec) {
  Asymptotics as = asymptotic_signs(spec.family, spec.params, spec.n);
  return reciprocal_marker_impl(spec, as);
}

ShapeInvarianceReport verify_enlarged_shape_invariance(const ExtensionSpec& spec) {
  if (spec.n < 1)
    throw std::domain_error("enlarged shape invariance needs a seed level n >= 1");
  ShapeInvarianceReport rep;
  rep.supported = spec.family == FamilyId::Morse || spec.family == FamilyId::HDPT;
  rep.e1 = dispersion(spec.family, spec.params, 1);

  ParameterSet shifted;
  switch (spec.family) {
    case FamilyId::Morse:
      shifted = make_params_unchecked(FamilyId::Morse, spec.params.a - 1, spec.params.b);
      break;
    case FamilyId::HDPT:
      shifted = make_params_unchecked(FamilyId::HDPT, spec.params.alpha + 1, spec.params.beta - 1);
      break;
    case FamilyId::Eckart:  // a_1 = a + 1
      shifted = make_params_unchecked(FamilyId::Eckart, spec.params.a + 1, spec.params.b);
      break;
    case FamilyId::HRM:  // a_1 = a - 1
      shifted = make_params_unchecked(FamilyId::HRM, spec.params.a - 1, spec.params.b);
      break;
  }
  RationalFunction vtilde = superpartner(spec).rf;
  RationalFunction vprev = extension_rf_formal(spec.family, shifted, spec.n - 1);
  rep.residual = vtilde - vprev - RationalFunction(rep.e1, family_var(spec.family));
  rep.residual_zero = rep.residual.is_zero();
  return rep;
}

}  // namespace ratext
