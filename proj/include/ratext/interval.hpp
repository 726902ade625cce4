#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ratext/rational.hpp"

namespace ratext {

/// Real interval with optional finite rational endpoints; a missing endpoint
/// means the interval extends to infinity on that side (necessarily open).
struct Interval {
  std::optional<BigRational> lo, hi;
  bool lo_open = true;
  bool hi_open = true;

  static Interval open(const BigRational& a, const BigRational& b) {
    check(a, b);
    return Interval{a, b, true, true};
  }
  static Interval closed(const BigRational& a, const BigRational& b) {
    check(a, b);
    return Interval{a, b, false, false};
  }
  static Interval open_above(const BigRational& a, bool lo_open = true) {
    return Interval{a, std::nullopt, lo_open, true};
  }
  static Interval open_below(const BigRational& b, bool hi_open = true) {
    return Interval{std::nullopt, b, true, hi_open};
  }
  static Interval whole_line() { return Interval{std::nullopt, std::nullopt, true, true}; }

  std::string str() const {
    std::string s = lo ? (lo_open ? "(" : "[") + rat_str(*lo) : std::string("(-inf");
    s += ", ";
    s += hi ? rat_str(*hi) + (hi_open ? ")" : "]") : std::string("+inf)");
    return s;
  }

 private:
  static void check(const BigRational& a, const BigRational& b) {
    if (!(a < b)) throw std::invalid_argument("interval requires lo < hi");
  }
};

}  // namespace ratext
