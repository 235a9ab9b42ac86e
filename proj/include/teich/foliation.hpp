#pragma once

#include "teich/hyperbolic.hpp"
#include "teich/triangulation.hpp"

#include <array>
#include <vector>

namespace teich {

// Positive weight per edge. Read as measured-foliation edge intersection
// numbers or, identically, as hyperbolic edge lengths.
struct EdgeWeights {
  std::vector<double> w;

  double operator[](int e) const { return w[e]; }
  int size() const { return static_cast<int>(w.size()); }
};

// Shear per edge plus positive radius per vertex.
struct ShearRadius {
  std::vector<double> shears;
  std::vector<double> radii;
};

// Weight per corner, indexed by the half-edge starting at that corner.
struct CornerWeights {
  std::vector<double> a;

  double operator[](HalfEdge c) const { return a[c]; }
};

// Side weights of face f in counterclockwise order, as triangle lengths with
// l[k] on side k (side k runs from vertex k+1 to vertex k+2).
TriangleLengths faceWeights(const Triangulation& tri, const EdgeWeights& w, int f);

// Throws AdmissibilityError with the first violating face and its slack.
void validateAdmissible(const Triangulation& tri, const EdgeWeights& w);

CornerWeights cornerWeights(const Triangulation& tri, const EdgeWeights& w);

// Per-face primitives on weights (w1, w2, w3) with side j running from
// vertex j+1 to vertex j+2. Throw AdmissibilityError on invalid faces.
std::array<double, 3> feetCoordinates(const TriangleLengths& face);
double signedIntersection(const TriangleLengths& face, int side, double t);
double arcIntersection(const TriangleLengths& face, BoundaryPoint p, BoundaryPoint q);

std::vector<double> shearMap(const Triangulation& tri, const EdgeWeights& w);
std::vector<double> radiusMap(const Triangulation& tri, const EdgeWeights& w);
ShearRadius shearRadius(const Triangulation& tri, const EdgeWeights& w);

// Sum of shears over the half-edge star of each vertex.
std::vector<double> starSums(const Triangulation& tri, const std::vector<double>& shears);

// Inverse of shearRadius on the vertex-balanced cone.
// Throws BalanceError, PositivityError, FormatError.
EdgeWeights reconstruct(const Triangulation& tri, const ShearRadius& sr);

struct Decomposition {
  std::vector<double> interior; // per edge, >= 0
  std::vector<double> radii;    // per vertex, > 0
};

Decomposition decompose(const Triangulation& tri, const EdgeWeights& w);
// interior(e) + r(tail) + r(head), the inverse of decompose.
EdgeWeights recompose(const Triangulation& tri, const std::vector<double>& interior,
                      const std::vector<double>& radii, double radiusScale = 1.0,
                      double interiorScale = 1.0);

inline constexpr double kBalanceTolerance = 1e-10;

} // namespace teich
