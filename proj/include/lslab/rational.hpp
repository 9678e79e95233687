#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "lslab/errors.hpp"

namespace lslab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const BigInt& b) { return b.sign(); }

// Floor of a/b for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

// Nearest integer; exact halves round up.
inline BigInt rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

inline BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

// gcd over Q: gcd(p1/q1, p2/q2) = gcd(p1*q2, p2*q1) / (q1*q2).
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return b < 0 ? Rat(-b) : b;
  if (b == 0) return a < 0 ? Rat(-a) : a;
  BigInt p = gcd_big(rat_num(a) * rat_den(b), rat_num(b) * rat_den(a));
  return Rat(p, rat_den(a) * rat_den(b));
}

inline std::string format_big(const BigInt& b) { return b.str(); }

// "p" or "p/q", q > 0, lowest terms.
inline std::string format_rat(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline BigInt parse_big(const std::string& s) {
  if (s.empty()) throw InputContractError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw InputContractError("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw InputContractError("bad integer literal: " + s);
  return BigInt(s);
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_big(s));
  BigInt p = parse_big(s.substr(0, slash));
  BigInt q = parse_big(s.substr(slash + 1));
  if (q <= 0) throw InputContractError("rational with non-positive denominator: " + s);
  return Rat(p, q);
}

// Exact conversion to int64; throws when out of range.
inline std::int64_t to_i64(const BigInt& b) {
  if (b < std::numeric_limits<std::int64_t>::min() ||
      b > std::numeric_limits<std::int64_t>::max())
    throw ResourceError("integer out of 64-bit range: " + b.str());
  return static_cast<std::int64_t>(b);
}

}  // namespace lslab
