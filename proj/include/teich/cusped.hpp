#pragma once

#include "teich/developing.hpp"
#include "teich/triangulation.hpp"

#include <vector>

namespace teich {

// Balance residuals up to this size are removed by orthogonal projection;
// larger ones are rejected.
inline constexpr double kBalanceProjectionLimit = 1e-8;

/// Complete hyperbolic surface with cusps at every marked point, given by
/// vertex-balanced shears on a triangulation.
class CuspedSurface {
public:
  // Throws FormatError, BalanceError.
  CuspedSurface(Triangulation tri, std::vector<double> shears);

  const Triangulation& triangulation() const { return tri_; }
  const std::vector<double>& shears() const { return shears_; }

private:
  Triangulation tri_;
  std::vector<double> shears_;
};

// Orthogonal projection onto the shear vectors with zero star sums.
std::vector<double> projectBalanced(const Triangulation& tri, const std::vector<double>& shears);

Developer cuspedDeveloper(const CuspedSurface& y);
Isometry cuspedHolonomy(const CuspedSurface& y, const CurveClass& curve);
// Throws ParabolicClassError for peripheral classes.
double cuspedLength(const CuspedSurface& y, const CurveClass& curve);

} // namespace teich
