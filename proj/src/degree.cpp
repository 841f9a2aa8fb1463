#include "posres/degree.hpp"

#include <cctype>

namespace posres {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error("malformed number '" + std::string(whole) + "'");
  cpp_int v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("malformed number '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_integer(s.substr(0, slash), text);
    cpp_int den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    r = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw Error("malformed number '" + std::string(text) + "'");
    cpp_int num = ip.empty() ? cpp_int(0) : parse_integer(ip, text);
    cpp_int den = 1;
    for (char c : fp) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error("malformed number '" + std::string(text) + "'");
      num = num * 10 + (c - '0');
      den *= 10;
    }
    r = Rational(num, den);
  } else {
    r = Rational(parse_integer(s, text));
  }
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  cpp_int num = boost::multiprecision::numerator(r);
  cpp_int den = boost::multiprecision::denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  cpp_int rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return sign + num.str() + "/" + den.str();

  int digits = std::max(twos, fives);
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  cpp_int scaled = num * (scale / den);
  std::string s = scaled.str();
  if (digits == 0) return sign + s;
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return sign + s;
}

Degree::Degree(const Rational& value) : value_(value) {
  if (value_ < 0 || value_ > 1)
    throw Error("degree " + format_rational(value_) + " outside [0,1]");
}

Degree combine_nn(const Degree& a, const Degree& b) { return min(a, b); }

Degree combine_npi(const Degree& a, const Degree& b) {
  return a.value() + b.value() > 1 ? b : Degree::zero();
}

}  // namespace posres
