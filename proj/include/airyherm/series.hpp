#pragma once

#include "airyherm/rational.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace airyherm {

// Formal power series in one indeterminate truncated at an explicit order N:
// coefficients c_0..c_{N-1} stand for sum c_k z^k + O(z^N).  All values are
// immutable after construction; binary operations truncate to the smaller
// operand order, so truncation state is carried by the data, never by an
// ambient context.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<BigRational> coeffs)
      : coeffs_(std::move(coeffs)) {}

  static TruncatedSeries constant(const BigRational& c, std::size_t order) {
    std::vector<BigRational> v(order, BigRational(0));
    if (order > 0) v[0] = c;
    return TruncatedSeries(std::move(v));
  }

  static TruncatedSeries one(std::size_t order) { return constant(1, order); }
  static TruncatedSeries zero(std::size_t order) { return constant(0, order); }

  // The series z.
  static TruncatedSeries variable(std::size_t order) {
    std::vector<BigRational> v(order, BigRational(0));
    if (order > 1) v[1] = 1;
    return TruncatedSeries(std::move(v));
  }

  std::size_t order() const { return coeffs_.size(); }
  const BigRational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  // Index of the lowest nonzero coefficient; order() when all stored
  // coefficients vanish.
  std::size_t valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) return k;
    return coeffs_.size();
  }

  bool operator==(const TruncatedSeries& other) const = default;

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) os << ", ";
      os << coeffs_[k].str();
    }
    os << "] + O(z^" << coeffs_.size() << ")";
    return os.str();
  }

 private:
  std::vector<BigRational> coeffs_;
};

inline TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order) {
  std::vector<BigRational> v(a.coeffs().begin(),
                             a.coeffs().begin() +
                                 static_cast<std::ptrdiff_t>(
                                     order < a.order() ? order : a.order()));
  return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  const std::size_t n = a.order() < b.order() ? a.order() : b.order();
  std::vector<BigRational> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a[k] + b[k];
  return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  const std::size_t n = a.order() < b.order() ? a.order() : b.order();
  std::vector<BigRational> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a[k] - b[k];
  return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator-(const TruncatedSeries& a) {
  std::vector<BigRational> v(a.order());
  for (std::size_t k = 0; k < a.order(); ++k) v[k] = -a[k];
  return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator*(const BigRational& c,
                                 const TruncatedSeries& a) {
  std::vector<BigRational> v(a.order());
  for (std::size_t k = 0; k < a.order(); ++k) v[k] = c * a[k];
  return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const BigRational& c) {
  return c * a;
}

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const BigRational& c) {
  std::vector<BigRational> v = a.coeffs();
  if (!v.empty()) v[0] += c;
  return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const BigRational& c) {
  return a + BigRational(-c);
}

// Cauchy product truncated to min(order(a), order(b)).
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  const std::size_t n = a.order() < b.order() ? a.order() : b.order();
  std::vector<BigRational> v(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] == 0) continue;
      v[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(v));
}

// Quotient q with q*b == a up to truncation.  Requires b to be a unit
// (nonzero constant term).
inline TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = a.order() < b.order() ? a.order() : b.order();
  if (n == 0 || b[0] == 0)
    throw std::domain_error("series div: non-unit divisor");
  std::vector<BigRational> q(n);
  for (std::size_t k = 0; k < n; ++k) {
    BigRational acc = a[k];
    for (std::size_t i = 0; i < k; ++i) acc -= q[i] * b[k - i];
    q[k] = acc / b[0];
  }
  return TruncatedSeries(std::move(q));
}

// Divide by z^k.  The low-order coefficients must vanish; the result order
// drops by k (a documented exception to the min-order rule).
inline TruncatedSeries shift_div(const TruncatedSeries& a, std::size_t k) {
  if (k > a.order())
    throw std::domain_error("series shift_div: shift exceeds order");
  for (std::size_t i = 0; i < k; ++i)
    if (a[i] != 0)
      throw std::domain_error("series shift_div: valuation too small");
  std::vector<BigRational> v(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                             a.coeffs().end());
  return TruncatedSeries(std::move(v));
}

// Square root with unit constant term: s_0 = 1 and
// s_n = (a_n - sum_{i=1}^{n-1} s_i s_{n-i}) / 2.
inline TruncatedSeries sqrt(const TruncatedSeries& a) {
  if (a.order() == 0 || a[0] != 1)
    throw std::domain_error("series sqrt: constant term must be 1");
  std::vector<BigRational> s(a.order());
  s[0] = 1;
  for (std::size_t n = 1; n < a.order(); ++n) {
    BigRational acc = a[n];
    for (std::size_t i = 1; i < n; ++i) acc -= s[i] * s[n - i];
    s[n] = acc / 2;
  }
  return TruncatedSeries(std::move(s));
}

// exp of a series with zero constant term, via E' = a'E:
// n e_n = sum_{k=1}^{n} k a_k e_{n-k}.
inline TruncatedSeries exp(const TruncatedSeries& a) {
  if (a.order() == 0 || a[0] != 0)
    throw std::domain_error("series exp: constant term must be 0");
  std::vector<BigRational> e(a.order());
  e[0] = 1;
  for (std::size_t n = 1; n < a.order(); ++n) {
    BigRational acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += BigRational(static_cast<std::int64_t>(k)) * a[k] * e[n - k];
    e[n] = acc / BigRational(static_cast<std::int64_t>(n));
  }
  return TruncatedSeries(std::move(e));
}

// outer(inner(z)) by Horner; inner must have zero constant term.  Result
// order is min of the operand orders: coefficients of the composition past
// the inner order are not determined by the data.
inline TruncatedSeries compose(const TruncatedSeries& outer,
                               const TruncatedSeries& inner) {
  if (inner.order() == 0 || inner[0] != 0)
    throw std::domain_error("series compose: inner constant term must be 0");
  const std::size_t n =
      outer.order() < inner.order() ? outer.order() : inner.order();
  if (n == 0) return TruncatedSeries();
  const TruncatedSeries in = truncate(inner, n);
  TruncatedSeries r = TruncatedSeries::constant(outer[outer.order() - 1], n);
  for (std::size_t k = outer.order() - 1; k-- > 0;)
    r = r * in + outer[k];
  return r;
}

inline TruncatedSeries pow(const TruncatedSeries& a, unsigned e) {
  TruncatedSeries r = TruncatedSeries::one(a.order());
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace airyherm
