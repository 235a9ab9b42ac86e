#pragma once

#include "teich/cone_metric.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace teich {

enum class StretchMode { Peripheral, Interior };

StretchMode parseStretchMode(const std::string& s); // "per" | "int"

// Peripheral mode scales the radii by e^t and keeps the interior weights;
// interior mode scales the interior weights and keeps the radii.
ConeSurface stretch(const ConeSurface& x, StretchMode mode, double t);

// Same deformation computed through shear-radius coordinates and
// reconstruct; kept as an independent route for cross-checks.
ConeSurface stretchViaShearRadius(const ConeSurface& x, StretchMode mode, double t);

// Edge lengths r(tail) + r(head): the circle-packed surface with zero shears.
ConeSurface circlePackedLimit(const ConeSurface& x);

// Shear coordinates of the cusped surface that the peripheral ray tends to.
std::vector<double> cuspedTarget(const ConeSurface& x);

struct NamedCurve {
  std::string name;
  CurveClass curve;
};

struct RayRow {
  double t = 0.0;
  std::vector<double> lengths;
  std::vector<double> angles;
  std::vector<double> shears;
  std::vector<double> radii;
  std::vector<std::optional<double>> curveLengths; // nullopt: elliptic holonomy
  std::vector<std::string> flags;
};

struct RayTable {
  std::vector<std::string> curveNames;
  std::vector<RayRow> rows;
};

// Uniform grid of `steps` samples over [t0, t1]. Throws DomainError.
RayTable sampleRay(const ConeSurface& x, StretchMode mode, double t0, double t1, int steps,
                   const std::vector<NamedCurve>& curves);

// Header `t,L_1..L_E,theta_1..theta_n,s_1..s_E,r_1..r_n,len_<name>...,flags`,
// numbers with 12 significant digits.
void writeCsv(std::ostream& out, const RayTable& table);

std::string formatNumber(double v);

} // namespace teich
