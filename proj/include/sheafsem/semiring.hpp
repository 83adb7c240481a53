#ifndef SHEAFSEM_SEMIRING_HPP
#define SHEAFSEM_SEMIRING_HPP

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "sheafsem/error.hpp"
#include "sheafsem/report.hpp"

namespace sheafsem {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

// Commutative semiring instances. Each exposes the two monoids, equality up
// to the instance's tolerance, and division by a nonzero total (used to
// normalize distributions; in the boolean instance division by one is the
// identity).
struct BoolSemiring {
  using Value = bool;
  static constexpr const char* name = "boolean";
  static Value zero() { return false; }
  static Value one() { return true; }
  static Value add(Value a, Value b) { return a || b; }
  static Value mul(Value a, Value b) { return a && b; }
  static bool eq(Value a, Value b) { return a == b; }
  static Value div(Value a, Value) { return a; }
};

struct RationalSemiring {
  using Value = Rational;
  static constexpr const char* name = "rational";
  static Value zero() { return Rational(0); }
  static Value one() { return Rational(1); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static bool eq(const Value& a, const Value& b) { return a == b; }
  static Value div(const Value& a, const Value& total) { return a / total; }
  static bool less(const Value& a, const Value& b) { return a < b; }
  static bool nonnegative(const Value& a) { return a >= Rational(0); }
  static double to_real(const Value& a) { return boost::rational_cast<double>(a); }
};

struct RealSemiring {
  using Value = double;
  static constexpr const char* name = "real";
  static constexpr double tolerance = 1e-9;
  static Value zero() { return 0.0; }
  static Value one() { return 1.0; }
  static Value add(Value a, Value b) { return a + b; }
  static Value mul(Value a, Value b) { return a * b; }
  static bool eq(Value a, Value b) { return std::abs(a - b) <= tolerance; }
  static Value div(Value a, Value total) { return a / total; }
  static bool less(Value a, Value b) { return a < b; }
  static bool nonnegative(Value a) { return a >= 0.0; }
  static double to_real(Value a) { return a; }
};

template <class S>
concept OrderedSemiring = requires(typename S::Value v) {
  { S::less(v, v) } -> std::convertible_to<bool>;
  { S::to_real(v) } -> std::convertible_to<double>;
};

// Checks the commutative-monoid laws for (add, zero) and (mul, one) and
// distributivity of mul over add, on every triple drawn from the samples.
template <class S>
LawReport check_semiring_axioms(const std::vector<typename S::Value>& samples) {
  using V = typename S::Value;
  LawReport report;
  auto complain = [&report](const std::string& what) { report.violations.push_back(what); };
  auto show = [](const V& v) {
    std::ostringstream os;
    if constexpr (std::is_same_v<V, bool>) {
      os << (v ? "1" : "0");
    } else {
      using sheafsem::to_string;
      using std::to_string;
      os << to_string(v);
    }
    return os.str();
  };

  for (const auto& x : samples) {
    ++report.checked;
    if (!S::eq(S::add(x, S::zero()), x)) complain(std::string(S::name) + ": x + 0 != x at " + show(x));
    if (!S::eq(S::mul(x, S::one()), x)) complain(std::string(S::name) + ": x * 1 != x at " + show(x));
  }
  for (const auto& x : samples) {
    for (const auto& y : samples) {
      ++report.checked;
      if (!S::eq(S::add(x, y), S::add(y, x))) {
        complain(std::string(S::name) + ": addition not commutative at " + show(x) + ", " + show(y));
      }
      if (!S::eq(S::mul(x, y), S::mul(y, x))) {
        complain(std::string(S::name) + ": multiplication not commutative at " + show(x) + ", " +
                 show(y));
      }
    }
  }
  for (const auto& x : samples) {
    for (const auto& y : samples) {
      for (const auto& z : samples) {
        ++report.checked;
        if (!S::eq(S::add(S::add(x, y), z), S::add(x, S::add(y, z)))) {
          complain(std::string(S::name) + ": addition not associative at " + show(x) + ", " +
                   show(y) + ", " + show(z));
        }
        if (!S::eq(S::mul(S::mul(x, y), z), S::mul(x, S::mul(y, z)))) {
          complain(std::string(S::name) + ": multiplication not associative at " + show(x) + ", " +
                   show(y) + ", " + show(z));
        }
        if (!S::eq(S::mul(x, S::add(y, z)), S::add(S::mul(x, y), S::mul(x, z)))) {
          complain(std::string(S::name) + ": distributivity fails at " + show(x) + ", " + show(y) +
                   ", " + show(z));
        }
      }
    }
  }
  return report;
}

}  // namespace sheafsem

#endif
