#include "ratext/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ratext {

BigRational rat_pow(const BigRational& q, long e) {
  if (e == 0) return BigRational(1);
  if (q.is_zero()) {
    if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return BigRational(0);
  }
  bool invert = e < 0;
  unsigned long m = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigRational acc(1), base = q;
  while (m != 0) {
    if (m & 1u) acc *= base;
    base *= base;
    m >>= 1u;
  }
  if (invert) acc = BigRational(1) / acc;
  return acc;
}

BigInt factorial(unsigned n) {
  BigInt f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt floor_rat(const BigRational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt quo = num / den;  // truncates toward zero
  if (num < 0 && quo * den != num) --quo;
  return quo;
}

BigInt ceil_rat(const BigRational& q) { return -floor_rat(-q); }

std::string rat_str(const BigRational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

std::optional<BigRational> parse_rational(std::string_view s) {
  auto parse_int = [](std::string_view t, bool allow_sign) -> std::optional<BigInt> {
    if (t.empty()) return std::nullopt;
    bool negative = false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) {
      negative = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) return std::nullopt;
    for (std::size_t j = i; j < t.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(t[j]))) return std::nullopt;
    BigInt v(std::string(t.substr(i)));
    return negative ? BigInt(-v) : v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(s, true);
    if (!n) return std::nullopt;
    return BigRational(*n);
  }
  auto n = parse_int(s.substr(0, slash), true);
  auto d = parse_int(s.substr(slash + 1), false);
  if (!n || !d || *d == 0) return std::nullopt;
  return BigRational(*n, *d);
}

}  // namespace ratext
