#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratext/chart.hpp"
#include "ratext/interval.hpp"
#include "ratext/ortho.hpp"

namespace ratext {

/// The four finite-bound-state families handled here.
enum class FamilyId { Morse, HDPT, Eckart, HRM };

std::string family_name(FamilyId f);
std::optional<FamilyId> family_from_name(std::string_view s);

ChartId family_chart(FamilyId f);
char family_var(FamilyId f);

/// Range of the chart variable over the physical domain (open at every end).
Interval physical_interval(FamilyId f);

/// Chart data bundle. dy/dx is rational in the chart variable for three of
/// the charts; for z = cosh 2x only its square is rational, (dz/dx)^2 =
/// 4(z^2-1), and jacobian is absent.
struct AlgebraicChart {
  FamilyId family;
  ChartId id;
  char variable_tag;
  Interval physical;
  std::optional<RationalFunction> jacobian;
  RationalFunction jacobian_squared;
};

AlgebraicChart algebraic_chart(FamilyId f);

/// Morse/Eckart/HRM carry (a, b); HDPT carries (alpha, beta).
struct ParameterSet {
  BigRational a, b;
  BigRational alpha, beta;
  bool operator==(const ParameterSet&) const = default;
};

/// Validating constructor; first/second mean (a, b) or (alpha, beta)
/// depending on the family. Throws std::invalid_argument naming the violated
/// constraint.
ParameterSet make_params(FamilyId f, const BigRational& first, const BigRational& second);

/// Same packing without range validation, for formal parameter shifts that
/// may leave the physical domain.
ParameterSet make_params_unchecked(FamilyId f, const BigRational& first, const BigRational& second);

void validate_params(FamilyId f, const ParameterSet& p);

/// The parameter a entering every dispersion relation; for HDPT it is
/// (beta - alpha - 1)/2.
BigRational shape_a(FamilyId f, const ParameterSet& p);

/// Level-shifted parameter a_n: a - n (Morse, HDPT, HRM) or a + n (Eckart).
BigRational level_shift(FamilyId f, const ParameterSet& p, int n);

/// Jacobi parameter map (alpha_n, beta_n) for Eckart and HRM.
std::pair<BigRational, BigRational> jacobi_shift(FamilyId f, const ParameterSet& p, int n);

/// Potential as a rational function of the chart variable, additive constant
/// included so that E_0 = 0 exactly. Validates the parameters.
RationalFunction potential_rf(FamilyId f, const ParameterSet& p);

/// Same formula without parameter validation, for formal parameter shifts.
RationalFunction potential_rf_formal(FamilyId f, const ParameterSet& p);

/// Energy at (possibly prolonged) level n >= 0. Throws at the HRM Laurent
/// pole n = a.
BigRational dispersion(FamilyId f, const ParameterSet& p, int n);

/// All n with the family's strict normalizability condition, as exact
/// rational inequalities (squared forms; no floating square roots).
std::vector<int> bound_indices(FamilyId f, const ParameterSet& p);

bool is_bound(FamilyId f, const ParameterSet& p, int n);

/// One non-polynomial prefactor of an eigenfunction: base^exponent with the
/// bases below, or exp(exponent * y) for ExpY.
struct GaugeFactor {
  enum class Base { PowY, ExpY, SinhX, CoshX, YMinus1, YPlus1, OneMinusY, OnePlusY };
  Base base;
  BigRational exponent;
  bool operator==(const GaugeFactor&) const = default;
};

/// Eigenfunction in factored form: product of gauge factors times
/// polynomial_part(chart)/denominator_part(chart). Base-potential states have
/// denominator_part = 1; Darboux-extended states carry the seed polynomial
/// there. n is the level index of the state (its energy is dispersion(n)).
struct EigenstateRep {
  FamilyId family;
  ParameterSet params;
  int n = 0;
  std::vector<GaugeFactor> gauge;
  Poly polynomial_part;
  Poly denominator_part;
  bool degree_deficient = false;
};

EigenstateRep eigenfunction(FamilyId f, const ParameterSet& p, int n);

/// ln |gauge product| at physical coordinate x (all bases are positive on the
/// physical domain, so the gauge carries no sign).
double gauge_log(const std::vector<GaugeFactor>& gauge, double x);

/// Riccati-Schroedinger function w = -psi'/psi of any factored state, as an
/// exact chart expression.
ChartExpr rs_of_state(const EigenstateRep& state);

struct RSFunctionRep {
  FamilyId family;
  ParameterSet params;
  int n = 0;
  ChartExpr w;
  bool degree_deficient = false;
};

/// w_n = -psi_n'/psi_n for the (possibly prolonged) level n.
RSFunctionRep rs_function(FamilyId f, const ParameterSet& p, int n);

/// -w' + w^2 - (V - E_n), identically zero exactly when w_n solves the
/// Riccati form of the eigenvalue problem at level n.
ChartExpr rs_equation_residual(FamilyId f, const ParameterSet& p, int n);

enum class SectorClass {
  Bound,
  UnphysicalPositive,
  StrictIsospectralSector,
  QuasiIsospectralCandidate,
  NodefulRejected,
  DegenerateRejected
};

std::string sector_name(SectorClass c);
std::optional<SectorClass> sector_from_name(std::string_view s);

/// Sign of an eigenfunction limit at one end of the physical domain.
/// zero_limit distinguishes 0^sign from sign * infinity; sign 0 means the
/// exact limit coefficient (a Pochhammer product) vanishes.
struct EndSign {
  int sign = 0;
  bool zero_limit = false;
  bool operator==(const EndSign&) const = default;
};

struct Asymptotics {
  EndSign left, right;
};

/// Exact limit signs of psi_n at the two ends of the physical domain.
/// Defined in the negative-energy regime only.
Asymptotics asymptotic_signs(FamilyId f, const ParameterSet& p, int n);

struct SectorInfo {
  SectorClass cls = SectorClass::Bound;
  EndSign left, right;  // populated when E_n < 0
  int hrm_case = 0;     // 1..3 for the HRM negative-energy windows
  bool operator==(const SectorInfo&) const = default;
};

/// Total on { n >= 0 : a_n != 0 }; throws at the HRM pole n = a.
SectorInfo classify_sector(FamilyId f, const ParameterSet& p, int n);

}  // namespace ratext
