#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace e36 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string int_str(const Int& n) { return n.str(); }

// canonical "num/den", denominator always present and positive
inline std::string rat_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// "num" when integral, "num/den" otherwise, for expression-level printing
inline std::string rat_pretty(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  Int num, den;
  try {
    num = Int(ns);
    den = Int(ds);
  } catch (const std::exception&) {
    throw error("bad rational literal: " + s);
  }
  if (den <= 0) throw error("rational denominator must be positive: " + s);
  return Rational(num, den);
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact, r is always a binomial prefix
  }
  return r;
}

// falling factorial a(a-1)...(a-n+1)
inline Rational falling(const Rational& a, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= a - i;
  return r;
}

}  // namespace e36
