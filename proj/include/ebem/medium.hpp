#pragma once

#include <cmath>
#include <stdexcept>

#include "ebem/types.hpp"

namespace ebem {

// Homogeneous isotropic elastic medium together with the analysis frequency.
// Everything downstream works with the Lame constants and the two
// wavenumbers, so they are stored directly; the wave-speed constructor
// derives them once.
class Medium {
 public:
  Medium(double cL, double cT, double density, double ang_freq)
      : c_L_(cL), c_T_(cT), rho_(density), omega_(ang_freq) {
    if (!(c_L_ > 0.0) || !(c_T_ > 0.0) || !(rho_ > 0.0) || !(omega_ > 0.0)) {
      throw std::invalid_argument("Medium: all parameters must be positive");
    }
    if (!(c_L_ > c_T_)) {
      throw std::invalid_argument("Medium: requires c_L > c_T");
    }
    mu_ = rho_ * c_T_ * c_T_;
    lambda_ = rho_ * (c_L_ * c_L_ - 2.0 * c_T_ * c_T_);
  }

  // Same medium specified by Lame constants.  Keeps lambda and mu exact
  // when they are round numbers that the wave speeds cannot represent.
  static Medium from_lame(double lambda, double mu, double density,
                          double ang_freq) {
    if (!(mu > 0.0) || !(lambda + mu > 0.0))
      throw std::invalid_argument("Medium: Lame constants out of range");
    Medium m(std::sqrt((lambda + 2.0 * mu) / density),
             std::sqrt(mu / density), density, ang_freq);
    m.lambda_ = lambda;
    m.mu_ = mu;
    return m;
  }

  double c_L() const { return c_L_; }
  double c_T() const { return c_T_; }
  double rho() const { return rho_; }
  double omega() const { return omega_; }
  double mu() const { return mu_; }
  double lambda() const { return lambda_; }
  double k_L() const { return omega_ / c_L_; }
  double k_T() const { return omega_ / c_T_; }

  // Default coupling parameter of the combined boundary integral equation.
  cd default_coupling() const { return kImag / k_T(); }

 private:
  double c_L_;    // longitudinal wave speed
  double c_T_;    // transversal wave speed
  double rho_;    // mass density
  double omega_;  // angular frequency
  double mu_;     // shear modulus
  double lambda_; // first Lame constant
};

}  // namespace ebem
