#pragma once

#include "teich/developing.hpp"
#include "teich/foliation.hpp"
#include "teich/hyperbolic.hpp"
#include "teich/triangulation.hpp"

#include <vector>

namespace teich {

/// Hyperbolic cone-surface given by edge lengths in the admissible cone of a
/// triangulation. Throws AdmissibilityError on construction otherwise.
class ConeSurface {
public:
  ConeSurface(Triangulation tri, EdgeWeights lengths);

  const Triangulation& triangulation() const { return tri_; }
  const EdgeWeights& lengths() const { return lengths_; }
  double length(int e) const { return lengths_[e]; }
  TriangleLengths face(int f) const { return faceWeights(tri_, lengths_, f); }

private:
  Triangulation tri_;
  EdgeWeights lengths_;
};

// Angle of the face at corner c (the corner where side c starts).
double cornerAngle(const ConeSurface& x, HalfEdge c);
std::vector<double> coneAngles(const ConeSurface& x);
double area(const ConeSurface& x);
// Largest cone angle strictly below pi: the regime where simple closed
// geodesics stay away from cone points.
bool inCollarRegime(const ConeSurface& x);

struct CircularFoliationData {
  EdgeWeights weights;
  // Tangency offsets per corner: distance from the corner's vertex to the
  // incircle tangency points on its two sides.
  CornerWeights offsets;
  std::vector<double> inradii; // per face
};

CircularFoliationData circularFoliation(const ConeSurface& x);

ShearRadius shearRadiusCoords(const ConeSurface& x);
ConeSurface fromShearRadius(const Triangulation& tri, const ShearRadius& sr);

struct GeodesicFlipResult {
  ConeSurface surface;
  FlipResult combinatorics;
};

// Throws UnflippableError, GeodesicFlipError.
GeodesicFlipResult geodesicFlip(const ConeSurface& x, int e);

Developer coneDeveloper(const ConeSurface& x);

Isometry curveHolonomy(const ConeSurface& x, const CurveClass& curve);
// Throws EllipticHolonomyError unless the holonomy is hyperbolic.
double curveLength(const ConeSurface& x, const CurveClass& curve);

// Distance along each crossed edge between the closed geodesic and the
// incircle tangency point of the entered face. Entries are +inf where the
// developed axis misses the edge. Throws EllipticHolonomyError.
std::vector<double> tangencyDeviation(const ConeSurface& x, const CurveClass& curve);

// Surface X_n whose cone angle at p approaches pi * facesAt(p). Throws IndexError.
ConeSurface maxAngleSequence(const Triangulation& tri, int p, int n);

} // namespace teich
