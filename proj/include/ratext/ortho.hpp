#pragma once

#include "ratext/poly.hpp"

namespace ratext {

/// Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
BigRational pochhammer(const BigRational& x, unsigned n);

/// Exact orthogonal-polynomial construction result. For special rational
/// parameter/degree coincidences (Jacobi with alpha+beta a negative integer
/// in [-2n, -n-1]) the leading coefficient vanishes and the true degree drops
/// below the nominal one; degree_deficient flags that, since downstream
/// regularity logic keys off the true degree.
struct OrthoPoly {
  Poly poly;
  int nominal_degree = 0;
  bool degree_deficient = false;
};

/// Generalized Laguerre L_n^(alpha), exact coefficients from the explicit
/// series; valid for any rational alpha (including negative integers, where
/// low-order coefficients vanish). Leading coefficient is (-1)^n / n!.
OrthoPoly laguerre(unsigned n, const BigRational& alpha, char var = 'z');

/// Jacobi P_n^(alpha,beta), exact coefficients from the binomial sum
///   2^-n sum_s C(n+alpha, n-s) C(n+beta, s) (x-1)^s (x+1)^(n-s),
/// which stays well-defined for the non-classical rational parameters used
/// here (the hypergeometric form would divide by (alpha+1)_s).
OrthoPoly jacobi(unsigned n, const BigRational& alpha, const BigRational& beta, char var = 'z');

}  // namespace ratext
