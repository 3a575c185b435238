#pragma once

#include "airyherm/rational.hpp"

#include <cstddef>
#include <sstream>
#include <utility>
#include <vector>

namespace airyherm {

// Dense univariate polynomial over BigRational, lowest degree first.
// Canonical form: no trailing zero coefficient; the zero polynomial has an
// empty coefficient list and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs)
      : coeffs_(std::move(coeffs)) {
    trim();
  }

  static RationalPolynomial constant(const BigRational& c) {
    return RationalPolynomial(std::vector<BigRational>{c});
  }

  // c * u^k
  static RationalPolynomial monomial(const BigRational& c, std::size_t k) {
    std::vector<BigRational> v(k + 1, BigRational(0));
    v[k] = c;
    return RationalPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  BigRational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
  }

  BigRational eval(const BigRational& u) const {
    BigRational r = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) r = r * u + coeffs_[k];
    return r;
  }

  double eval(double u) const {
    double r = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;)
      r = r * u + to_double(coeffs_[k]);
    return r;
  }

  RationalPolynomial derivative() const {
    if (coeffs_.size() <= 1) return RationalPolynomial();
    std::vector<BigRational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      v[k - 1] = coeffs_[k] * BigRational(static_cast<std::int64_t>(k));
    return RationalPolynomial(std::move(v));
  }

  bool operator==(const RationalPolynomial& other) const = default;

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k] == 0) continue;
      if (!first) os << " + ";
      os << coeffs_[k].str();
      if (k > 0) os << "*u^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigRational> coeffs_;
};

inline RationalPolynomial operator+(const RationalPolynomial& a,
                                    const RationalPolynomial& b) {
  std::vector<BigRational> v(std::max(a.coeffs().size(), b.coeffs().size()),
                             BigRational(0));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return RationalPolynomial(std::move(v));
}

inline RationalPolynomial operator-(const RationalPolynomial& a,
                                    const RationalPolynomial& b) {
  std::vector<BigRational> v(std::max(a.coeffs().size(), b.coeffs().size()),
                             BigRational(0));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return RationalPolynomial(std::move(v));
}

inline RationalPolynomial operator*(const BigRational& c,
                                    const RationalPolynomial& a) {
  std::vector<BigRational> v = a.coeffs();
  for (auto& x : v) x *= c;
  return RationalPolynomial(std::move(v));
}

inline RationalPolynomial operator*(const RationalPolynomial& a,
                                    const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial();
  std::vector<BigRational> v(a.coeffs().size() + b.coeffs().size() - 1,
                             BigRational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return RationalPolynomial(std::move(v));
}

// Polynomial in two variables, stored as x-coefficients that are themselves
// polynomials in t.  Canonical form trims trailing zero x-coefficients.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::vector<RationalPolynomial> x_coeffs)
      : x_coeffs_(std::move(x_coeffs)) {
    trim();
  }

  bool is_zero() const { return x_coeffs_.empty(); }
  int degree_x() const { return static_cast<int>(x_coeffs_.size()) - 1; }
  const std::vector<RationalPolynomial>& x_coeffs() const { return x_coeffs_; }

  RationalPolynomial coeff_x(std::size_t k) const {
    return k < x_coeffs_.size() ? x_coeffs_[k] : RationalPolynomial();
  }

  BivariatePoly derivative_t() const {
    std::vector<RationalPolynomial> v(x_coeffs_.size());
    for (std::size_t k = 0; k < x_coeffs_.size(); ++k)
      v[k] = x_coeffs_[k].derivative();
    return BivariatePoly(std::move(v));
  }

  BivariatePoly derivative_x(unsigned times = 1) const {
    std::vector<RationalPolynomial> v = x_coeffs_;
    for (unsigned i = 0; i < times; ++i) {
      if (v.empty()) break;
      std::vector<RationalPolynomial> d(v.size() > 1 ? v.size() - 1 : 0);
      for (std::size_t k = 1; k < v.size(); ++k)
        d[k - 1] = BigRational(static_cast<std::int64_t>(k)) * v[k];
      v = std::move(d);
    }
    return BivariatePoly(std::move(v));
  }

  // Substitute a rational value for t, leaving a polynomial in x.
  RationalPolynomial eval_t(const BigRational& t) const {
    std::vector<BigRational> v(x_coeffs_.size());
    for (std::size_t k = 0; k < x_coeffs_.size(); ++k)
      v[k] = x_coeffs_[k].eval(t);
    return RationalPolynomial(std::move(v));
  }

  double eval(double t, double x) const {
    double r = 0;
    for (std::size_t k = x_coeffs_.size(); k-- > 0;)
      r = r * x + x_coeffs_[k].eval(t);
    return r;
  }

  bool operator==(const BivariatePoly& other) const = default;

  std::string str() const {
    if (x_coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = x_coeffs_.size(); k-- > 0;) {
      if (x_coeffs_[k].is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << x_coeffs_[k].str() << ")";
      if (k > 0) os << "*x^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!x_coeffs_.empty() && x_coeffs_.back().is_zero())
      x_coeffs_.pop_back();
  }
  std::vector<RationalPolynomial> x_coeffs_;
};

inline BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
  std::vector<RationalPolynomial> v(
      std::max(a.x_coeffs().size(), b.x_coeffs().size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = a.coeff_x(k) - b.coeff_x(k);
  return BivariatePoly(std::move(v));
}

inline BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  std::vector<RationalPolynomial> v(
      std::max(a.x_coeffs().size(), b.x_coeffs().size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = a.coeff_x(k) + b.coeff_x(k);
  return BivariatePoly(std::move(v));
}

}  // namespace airyherm
