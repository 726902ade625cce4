#pragma once

#include <string>

#include "ratext/families.hpp"

namespace ratext {

/// A candidate Darboux seed: the prolonged level n of a family member.
struct ExtensionSpec {
  FamilyId family = FamilyId::Morse;
  ParameterSet params;
  int n = 0;
  bool operator==(const ExtensionSpec&) const = default;
};

/// Proof artifacts for the regularity of the seed eigenfunction: exact node
/// count of its polynomial part over the physical interval plus the exact
/// limit signs at the two ends. certified iff node_count = 0, the end signs
/// agree, and the sector admits an extension.
struct RegularityCertificate {
  ExtensionSpec spec;
  int node_count = -1;
  EndSign left_sign, right_sign;
  SectorInfo sector;
  bool certified = false;
  bool quasi = false;
  /// Quasi case: 1/psi_n satisfies the boundary conditions and becomes the
  /// ground state of the extension at energy E_n.
  bool reciprocal_is_ground = false;
  bool operator==(const RegularityCertificate&) const = default;
};

/// Requires a negative-energy seed (throws std::domain_error otherwise).
RegularityCertificate certify_regularity(const ExtensionSpec& spec);

/// Extended potential V + 2 w_n' as an exact rational function of the chart
/// variable.
struct ExtendedPotentialRep {
  ExtensionSpec spec;
  RationalFunction rf;
  bool quasi = false;
};

/// Builds V^(n), certifying the seed first; throws std::domain_error with
/// the rejection reason when the certificate fails. n = 0 is accepted as the
/// classical SUSY-partner sanity path (the ground state needs no
/// certificate).
ExtendedPotentialRep extend_potential(const ExtensionSpec& spec);

/// Formal V + 2 w_n' without any certification or parameter validation; used
/// for parameter-shifted members in identity checks.
RationalFunction extension_rf_formal(FamilyId f, const ParameterSet& p, int n);

/// The new polynomial attached to bound level k of a certified extension;
/// generically of degree n + k - 1 (the flag records parameter degeneracies).
struct ExtendedOrthoPoly {
  ExtensionSpec spec;
  int k = 0;
  Poly poly;
  int expected_degree = 0;
  bool degree_deficient = false;
};

ExtendedOrthoPoly extended_polynomial(const ExtensionSpec& spec, int k);

/// Closed-form bound state psi_k^(n) of the extension: shifted gauge factors
/// times extended_polynomial / seed polynomial. Unnormalized.
EigenstateRep extended_eigenstate(const ExtensionSpec& spec, int k);

/// Darboux-transformed Riccati-Schroedinger function
///   w_k^(n) = -w_n + (E_k - E_n) / (w_n - w_k).
ChartExpr dbt_rs(const ExtensionSpec& spec, int k);

/// Superpartner of the extension: V^(n) + 2 (w_0^(n))'.
ExtendedPotentialRep superpartner(const ExtensionSpec& spec);

/// Where and why 1/psi_n fails the boundary conditions for strict-sector
/// seeds, decided from exact gauge exponents (no numerics). diverges = false
/// happens exactly in the quasi case, where 1/psi_n is the new ground state.
struct ReciprocalMarker {
  bool at_left = false;  // end where psi_n -> 0, i.e. where 1/psi_n blows up
  bool diverges = false;
  std::string reason;
};

ReciprocalMarker reciprocal_marker(const ExtensionSpec& spec);

/// Residual of the enlarged shape-invariance identity
///   Vtilde^(n)(a) - V^(n-1)(a_1) - E_1(a),
/// which the construction satisfies identically for Morse and HDPT.
/// supported = false for Eckart/HRM, where no such identity is asserted; the
/// residual is still computed for exploratory runs but carries no
/// pass/fail meaning.
struct ShapeInvarianceReport {
  bool supported = false;
  RationalFunction residual;
  BigRational e1;
  bool residual_zero = false;
};

ShapeInvarianceReport verify_enlarged_shape_invariance(const ExtensionSpec& spec);

}  // namespace ratext
