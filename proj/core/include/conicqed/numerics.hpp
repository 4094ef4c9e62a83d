#pragma once

#include "conicqed/quad.hpp"
#include "conicqed/specfun.hpp"

#include <cstddef>

namespace conicqed {

/// Knobs for every series and integral evaluated by the rate formulas.
struct NumericsConfig {
  std::size_t nodes = 128;
  TruncationPolicy truncation{};
  BesselConfig bessel{};

  void validate() const {
    if (nodes < 2) {
      throw DomainError("NumericsConfig: need at least 2 quadrature nodes");
    }
    truncation.validate();
    bessel.validate();
  }
};

} // namespace conicqed
