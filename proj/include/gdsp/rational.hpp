#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gdsp {

// Exact rational used for every storage size, LP value and flow capacity.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline Rational positive_part(const Rational& x) { return x > 0 ? x : Rational(0); }

inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }
inline BigInt numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }

// "p/q" or "p".
inline std::string to_string(const Rational& x) { return x.str(); }

inline std::string to_decimal(const Rational& x, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << x.convert_to<double>();
  return os.str();
}

// Accepts "p", "p/q", "-p/q" and plain integers.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error("malformed rational '" + std::string(text) + "'");
  std::string n(num), d(den);
  if (n.front() == '+') n.erase(0, 1);
  if (d.front() == '+') d.erase(0, 1);
  BigInt dn(d);
  if (dn == 0) throw Error("rational with zero denominator '" + std::string(text) + "'");
  return Rational(BigInt(n), dn);
}

inline Rational sum(const std::vector<Rational>& xs) {
  Rational total = 0;
  for (const auto& x : xs) total += x;
  return total;
}

inline BigInt lcm_of_denominators(const std::vector<Rational>& xs) {
  BigInt l = 1;
  for (const auto& x : xs) l = boost::multiprecision::lcm(l, denominator_of(x));
  return l;
}

}  // namespace gdsp
