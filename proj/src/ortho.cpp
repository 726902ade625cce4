#include "ratext/ortho.hpp"

namespace ratext {

BigRational pochhammer(const BigRational& x, unsigned n) {
  BigRational acc(1);
  for (unsigned i = 0; i < n; ++i) acc *= x + BigRational(i);
  return acc;
}

OrthoPoly laguerre(unsigned n, const BigRational& alpha, char var) {
  // Coefficient of z^k: (-1)^k (alpha+k+1)_(n-k) / ((n-k)! k!).
  std::vector<BigRational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    BigRational t = pochhammer(alpha + BigRational(k) + 1, n - k);
    t /= BigRational(factorial(n - k) * factorial(k));
    if (k % 2 == 1) t = -t;
    c[k] = t;
  }
  Poly p(std::move(c), var);
  return OrthoPoly{p, static_cast<int>(n), p.degree() < static_cast<int>(n)};
}

OrthoPoly jacobi(unsigned n, const BigRational& alpha, const BigRational& beta, char var) {
  Poly zm1({BigRational(-1), BigRational(1)}, var);
  Poly zp1({BigRational(1), BigRational(1)}, var);
  // Powers of (z-1) and (z+1) up to n.
  std::vector<Poly> pm(n + 1), pp(n + 1);
  pm[0] = Poly(BigRational(1), var);
  pp[0] = Poly(BigRational(1), var);
  for (unsigned k = 1; k <= n; ++k) {
    pm[k] = pm[k - 1] * zm1;
    pp[k] = pp[k - 1] * zp1;
  }
  Poly sum(BigRational(0), var);
  for (unsigned s = 0; s <= n; ++s) {
    // C(n+alpha, n-s) = (alpha+s+1)_(n-s) / (n-s)!,
    // C(n+beta, s)    = (beta+n-s+1)_s / s!.
    BigRational w = pochhammer(alpha + BigRational(s) + 1, n - s);
    w *= pochhammer(beta + BigRational(n - s) + 1, s);
    w /= BigRational(factorial(n - s) * factorial(s));
    sum += w * (pm[s] * pp[n - s]);
  }
  sum *= rat_pow(BigRational(1, 2), static_cast<long>(n));
  return OrthoPoly{sum, static_cast<int>(n), sum.degree() < static_cast<int>(n)};
}

}  // namespace ratext
