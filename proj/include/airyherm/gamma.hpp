#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace airyherm {

// Gamma function by the Lanczos approximation (g = 7, 9 coefficients),
// ~15 correct digits on the positive axis; negative non-integer arguments
// go through the reflection formula.
inline double gamma_fn(double z) {
  static constexpr std::array<double, 9> coeffs = {
      0.99999999999980993,      676.5203681218851,    -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,  12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;

  if (z == std::floor(z) && z <= 0.0)
    throw std::domain_error("gamma_fn: non-positive integer argument");
  if (z < 0.5)
    return M_PI / (std::sin(M_PI * z) * gamma_fn(1.0 - z));

  z -= 1.0;
  double acc = coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    acc += coeffs[i] / (z + static_cast<double>(i));
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace airyherm
