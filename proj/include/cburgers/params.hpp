#pragma once

#include <stdexcept>

#include "cburgers/rational.hpp"

namespace cburgers {

// Equation parameters: u_t - 6 u u_x + nu (-Laplace)^gamma u + alpha u_xxx = 0
// on the 2*pi torus, one-sided spectrum. gamma = 1 recovers KdV-Burgers, and
// alpha = 0, gamma = 1 the complex Burgers equation.
struct ModelParams {
  Rational nu{0};
  Rational alpha{0};
  Rational gamma{1};

  double nu_d() const { return nu.get_d(); }
  double alpha_d() const { return alpha.get_d(); }
  double gamma_d() const { return gamma.get_d(); }

  void validate() const {
    if (nu < 0 || alpha < 0) throw std::invalid_argument("ModelParams: nu and alpha must be >= 0");
    if (gamma <= 0) throw std::invalid_argument("ModelParams: gamma must be > 0");
  }

  // The exponomial recursions need a nonzero linear symbol and gamma = 1.
  void validate_for_exponomial() const {
    validate();
    if (nu == 0 && alpha == 0)
      throw std::invalid_argument("ModelParams: exponomial construction needs nu > 0 or alpha > 0");
    if (gamma != 1)
      throw std::invalid_argument("ModelParams: exponomial construction requires gamma = 1");
  }
};

}  // namespace cburgers
