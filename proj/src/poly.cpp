#include "ratext/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ratext {

Poly::Poly(const BigRational& c, char var) : var_(var) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<BigRational> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) {
  trim();
}

Poly Poly::variable(char var) {
  return Poly({BigRational(0), BigRational(1)}, var);
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

char Poly::join_var(const Poly& a, const Poly& b) {
  if (a.is_constant()) return b.is_constant() ? a.var_ : b.var_;
  if (b.is_constant()) return a.var_;
  if (a.var_ != b.var_)
    throw std::invalid_argument(std::string("polynomial variable mismatch: ") + a.var_ +
                                " vs " + b.var_);
  return a.var_;
}

BigRational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigRational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigRational Poly::eval(const BigRational& v) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + static_cast<long double>(to_double(*it));
  return static_cast<double>(acc);
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(BigRational(0), var_);
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * BigRational(k);
  return Poly(std::move(d), var_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  BigRational inv = BigRational(1) / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Poly Poly::square_free() const {
  if (is_zero()) throw std::domain_error("square_free of zero polynomial");
  if (degree() == 0) return Poly(BigRational(1), var_);
  Poly g = poly_gcd(*this, derivative());
  return divmod(*this, g).first;
}

Poly Poly::compose_linear(const BigRational& c0, const BigRational& c1) const {
  Poly arg({c0, c1}, var_);
  Poly acc(BigRational(0), var_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= arg;
    acc += Poly(*it, var_);
  }
  return acc;
}

Poly Poly::with_var(char var) const {
  Poly r = *this;
  r.var_ = var;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  var_ = join_var(*this, o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  var_ = join_var(*this, o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  var_ = join_var(*this, o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> prod(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

bool Poly::operator==(const Poly& o) const {
  if (coeffs_ != o.coeffs_) return false;
  return is_constant() || o.is_constant() || var_ == o.var_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  char var = join_var(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(BigRational(0), var), a};
  std::vector<BigRational> rem = a.coeffs_;
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                               BigRational(0));
  const BigRational inv_lead = BigRational(1) / b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigRational q = rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
  return {Poly(std::move(quo), var), Poly(std::move(rem), var)};
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Monic normalization at every step keeps coefficient growth in check.
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    BigRational ac = abs(c);
    bool unit = (ac == 1);
    if (k == 0 || !unit) os << rat_str(ac);
    if (k > 0) {
      if (!unit) os << "*";
      os << var_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace ratext
