#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace posres {

using Rational = boost::multiprecision::cpp_rational;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "12", "-0.75", "3/8". Throws Error on malformed input.
Rational parse_rational(std::string_view text);

// Shortest exact decimal ("0.6", "11", "-2.125"); falls back to "p/q" when
// the denominator has prime factors other than 2 and 5.
std::string format_rational(const Rational& r);

// An exact certainty degree in [0,1].
class Degree {
 public:
  Degree() = default;
  explicit Degree(const Rational& value);

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(Rational(1)); }
  static Degree parse(std::string_view text) {
    return Degree(parse_rational(text));
  }

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  // 1 - d: converts between N(p) and Pi(~p).
  Degree dual() const { return Degree(Rational(1) - value_); }

  std::string to_string() const { return format_rational(value_); }

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

inline const Degree& min(const Degree& a, const Degree& b) {
  return b < a ? b : a;
}
inline const Degree& max(const Degree& a, const Degree& b) {
  return a < b ? b : a;
}

// N⊗N combination: N(q|r) >= min(a, b).
Degree combine_nn(const Degree& a, const Degree& b);

// N⊗Π combination: a is the necessity-side degree, b the possibility-side degree.
// Returns b when a + b > 1, else 0.
Degree combine_npi(const Degree& a, const Degree& b);

}  // namespace posres
