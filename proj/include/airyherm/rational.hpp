#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace airyherm {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar.  cpp_rational keeps every value in lowest terms
// with a positive denominator; that canonical form is assumed throughout
// the exact engine and re-checked by the test suites.
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return BigRational(BigInt(num), BigInt(den));
}

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

inline bool is_canonical(const BigRational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  return den > 0 && gcd(num, den) == 1;
}

inline std::string to_string(const BigRational& r) { return r.str(); }

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// n! / (n-k)!, the falling factorial n(n-1)...(n-k+1).
inline BigInt falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt f = 1;
  for (unsigned i = 0; i < k; ++i) f *= (n - i);
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);  // exact at every step
  }
  return b;
}

// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
inline BigRational pochhammer(const BigRational& a, unsigned k) {
  BigRational p = 1;
  BigRational term = a;
  for (unsigned i = 0; i < k; ++i) {
    p *= term;
    term += 1;
  }
  return p;
}

inline BigRational pow_rational(const BigRational& base, unsigned e) {
  BigRational p = 1;
  for (unsigned i = 0; i < e; ++i) p *= base;
  return p;
}

}  // namespace airyherm
