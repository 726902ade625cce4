#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ratext/dbt.hpp"

namespace ratext {

/// Uniform grid including both Dirichlet endpoints.
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int points = 3;

  double h() const { return (x_max - x_min) / (points - 1); }
  double x(int i) const { return x_min + h() * i; }
  /// Same endpoints, halved spacing.
  Grid refined() const { return Grid{x_min, x_max, 2 * points - 1}; }
  bool operator==(const Grid&) const = default;
};

/// Pointwise samples of a potential given as a rational function of the
/// family chart variable. Throws on a pole inside the grid (an uncertified
/// or invalid representation).
std::vector<double> tabulate_potential(const RationalFunction& rf, FamilyId f, const Grid& grid);

std::vector<double> tabulate_state(const EigenstateRep& state, const Grid& grid);

std::vector<double> tabulate_chart_expr(const ChartExpr& e, const Grid& grid);

/// Callable form of a tabulated potential (used by the refining solver).
std::function<double(double)> potential_fn(const RationalFunction& rf, FamilyId f);

/// Lowest `count` Dirichlet eigenvalues of -d^2/dx^2 + V discretized with the
/// three-point second difference, found by bisection on the negative-pivot
/// count of the shifted tridiagonal matrix. Deterministic. v_samples covers
/// the whole grid including the two boundary nodes.
std::vector<double> eigen_solve(const std::vector<double>& v_samples, double h, int count);

/// Solves on grid, grid.refined(), ... (levels grids) and Richardson-
/// extrapolates away the h^2, h^4, ... error terms.
std::vector<double> eigen_solve_extrapolated(const std::function<double(double)>& v,
                                             const Grid& grid, int count, int levels = 3);

struct SpectrumReport {
  FamilyId family = FamilyId::Morse;
  ParameterSet params;
  std::optional<ExtensionSpec> spec;  // set for extended potentials
  std::vector<double> eigenvalues;
  Grid grid;
  int levels = 3;
  /// |oracle - exact dispersion| for the bound levels (base reports only).
  std::vector<double> residual_vs_exact;
};

SpectrumReport oracle_spectrum(FamilyId f, const ParameterSet& p, const Grid& grid, int count,
                               int levels = 3);
SpectrumReport oracle_spectrum_extended(const ExtensionSpec& spec, const Grid& grid, int count,
                                        int levels = 3);

enum class IsospectralVerdict { Strict, Quasi, Mismatch };

struct CompareReport {
  IsospectralVerdict verdict = IsospectralVerdict::Mismatch;
  std::vector<double> residuals;           // per matched bound level
  std::optional<double> extra_level;       // quasi: the new ground level
  double rel_tol = 1e-6;
  double abs_floor = 1e-8;
};

/// Matches the two spectra level by level. Strict: every bound level agrees
/// within tolerance and no extra level appears below the top bound energy.
/// Quasi: exactly one extra level, equal to the seed energy, below the
/// base ground state. Requires identical grids and counts.
CompareReport compare_spectra(const SpectrumReport& base, const SpectrumReport& ext,
                              double rel_tol = 1e-6, double abs_floor = 1e-8);

/// Trapezoidal Gram matrix of tabulated states.
std::vector<std::vector<double>> gram_matrix(const std::vector<std::vector<double>>& states,
                                             const Grid& grid);

/// Largest |G_jk| / sqrt(G_jj G_kk) over j != k.
double max_offdiagonal_normalized(const std::vector<std::vector<double>>& gram);

/// Uniform-norm deviation between the closed-form extended state psi_k^(n)
/// and the first-order Darboux image (d/dx + w_n) psi_k built with central
/// differences, after matching one normalization point. O(h^2).
double darboux_deviation(const ExtensionSpec& spec, int k, const Grid& grid);

/// Simulation box for a family member: each infinite end is cut where the
/// gauge magnitude of the highest bound state drops below 1e-14 of its
/// maximum; a singular left endpoint (HDPT, Eckart) is moved inward by
/// halving until the extrapolated bound eigenvalues shift by less than
/// tol/10.
Grid default_grid(FamilyId f, const ParameterSet& p, int points, double tol = 1e-6);

}  // namespace ratext
