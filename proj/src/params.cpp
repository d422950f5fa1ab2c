#include "hahn/params.hpp"

#include <cmath>
#include <string>

#include "hahn/errors.hpp"

namespace hahn {

HahnParams::HahnParams(double alpha, double beta, int N)
    : alpha_(alpha), beta_(beta), N_(N) {
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw DomainError("alpha must be a finite value > -1, got " + std::to_string(alpha));
  if (!(beta > -1.0) || !std::isfinite(beta))
    throw DomainError("beta must be a finite value > -1, got " + std::to_string(beta));
  if (N < 1) throw DomainError("N must be >= 1, got " + std::to_string(N));
}

bool HahnParams::integer_parameters() const {
  return alpha_ >= 0 && beta_ >= 0 && alpha_ == std::floor(alpha_) &&
         beta_ == std::floor(beta_);
}

}  // namespace hahn
