#include "teich/foliation.hpp"

#include "teich/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace teich {

namespace {

void requireSize(const Triangulation& tri, const EdgeWeights& w) {
  if (w.size() != tri.numEdges())
    throw FormatError("expected " + std::to_string(tri.numEdges()) + " edge weights, got " +
                      std::to_string(w.size()));
}

void requireFace(const TriangleLengths& face) {
  for (int k = 0; k < 3; ++k) {
    if (!(face[k] > 0.0) || !std::isfinite(face[k]))
      throw AdmissibilityError(-1, face[k], "face weight " + std::to_string(face[k]) +
                                                " is not positive");
  }
  for (int k = 0; k < 3; ++k) {
    if (!(face.tangent(k) > 0.0))
      throw AdmissibilityError(-1, 2.0 * face.tangent(k),
                               "face weights violate the strict triangle inequalities");
  }
}

} // namespace

TriangleLengths faceWeights(const Triangulation& tri, const EdgeWeights& w, int f) {
  TriangleLengths out;
  for (int k = 0; k < 3; ++k) out.l[k] = w[tri.edge(Triangulation::side(f, k))];
  return out;
}

void validateAdmissible(const Triangulation& tri, const EdgeWeights& w) {
  requireSize(tri, w);
  for (int e = 0; e < tri.numEdges(); ++e) {
    if (!(w[e] > 0.0) || !std::isfinite(w[e])) {
      const int f = Triangulation::face(tri.edgeSides(e)[0]);
      throw AdmissibilityError(f, w[e],
                               "weight of edge " + std::to_string(e + 1) + " is not positive");
    }
  }
  for (int f = 0; f < tri.numFaces(); ++f) {
    const auto L = faceWeights(tri, w, f);
    double slack = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) slack = std::min(slack, 2.0 * L.tangent(k));
    if (!(slack > 0.0))
      throw AdmissibilityError(f, slack,
                               "face " + std::to_string(f + 1) +
                                   " violates the strict triangle inequalities (slack " +
                                   std::to_string(slack) + ")");
  }
}

CornerWeights cornerWeights(const Triangulation& tri, const EdgeWeights& w) {
  validateAdmissible(tri, w);
  CornerWeights out;
  out.a.resize(tri.numHalfEdges());
  for (int f = 0; f < tri.numFaces(); ++f) {
    const auto L = faceWeights(tri, w, f);
    // Corner k is the start of side k, i.e. triangle vertex k+1.
    for (int k = 0; k < 3; ++k) out.a[Triangulation::side(f, k)] = L.tangent((k + 1) % 3);
  }
  return out;
}

std::array<double, 3> feetCoordinates(const TriangleLengths& face) {
  requireFace(face);
  std::array<double, 3> t{};
  for (int j = 0; j < 3; ++j) {
    const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    t[j] = (face[j2] + face[j] - face[j1]) / (2.0 * face[j]);
  }
  return t;
}

double signedIntersection(const TriangleLengths& face, int side, double t) {
  if (side < 0 || side > 2) throw IndexError("side index out of range");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("boundary coordinate outside [0, 1]");
  const auto feet = feetCoordinates(face);
  return (t - feet[side]) * face[side];
}

double arcIntersection(const TriangleLengths& face, BoundaryPoint p, BoundaryPoint q) {
  const auto feet = feetCoordinates(face);
  const double ip = signedIntersection(face, p.side, p.t);
  const double iq = signedIntersection(face, q.side, q.t);
  // The singular tripod splits the face into one region per vertex; a point
  // before its foot lies in the region of the side's tail vertex.
  auto region = [&](const BoundaryPoint& b) {
    return b.t < feet[b.side] ? (b.side + 1) % 3 : (b.side + 2) % 3;
  };
  if (ip == 0.0 || iq == 0.0 || region(p) == region(q)) return std::abs(std::abs(ip) - std::abs(iq));
  return std::abs(ip) + std::abs(iq);
}

std::vector<double> shearMap(const Triangulation& tri, const EdgeWeights& w) {
  const auto a = cornerWeights(tri, w);
  std::vector<double> s(tri.numEdges());
  for (int e = 0; e < tri.numEdges(); ++e) {
    // Left face corner at the tail minus right face corner at the tail.
    const auto [hp, hn] = tri.edgeSides(e);
    s[e] = a[hp] - a[Triangulation::next(hn)];
  }
  return s;
}

std::vector<double> radiusMap(const Triangulation& tri, const EdgeWeights& w) {
  const auto a = cornerWeights(tri, w);
  std::vector<double> r(tri.numVertices(), std::numeric_limits<double>::infinity());
  for (HalfEdge c = 0; c < tri.numHalfEdges(); ++c) {
    double& rv = r[tri.cornerVertex(c)];
    rv = std::min(rv, a[c]);
  }
  return r;
}

ShearRadius shearRadius(const Triangulation& tri, const EdgeWeights& w) {
  return {shearMap(tri, w), radiusMap(tri, w)};
}

std::vector<double> starSums(const Triangulation& tri, const std::vector<double>& shears) {
  std::vector<double> sums(tri.numVertices(), 0.0);
  for (int v = 0; v < tri.numVertices(); ++v)
    for (HalfEdge h : tri.star(v)) sums[v] += shears[tri.edge(h)];
  return sums;
}

EdgeWeights reconstruct(const Triangulation& tri, const ShearRadius& sr) {
  if (static_cast<int>(sr.shears.size()) != tri.numEdges() ||
      static_cast<int>(sr.radii.size()) != tri.numVertices())
    throw FormatError("shear-radius data has wrong dimensions");
  for (int v = 0; v < tri.numVertices(); ++v)
    if (!(sr.radii[v] > 0.0) || !std::isfinite(sr.radii[v]))
      throw PositivityError("radius at vertex " + std::to_string(v + 1) + " is not positive");
  const auto sums = starSums(tri, sr.shears);
  for (int v = 0; v < tri.numVertices(); ++v)
    if (!(std::abs(sums[v]) <= kBalanceTolerance))
      throw BalanceError("shears around vertex " + std::to_string(v + 1) + " sum to " +
                         std::to_string(sums[v]));

  // Corner weights: partial sums around each star, shifted so the smallest
  // equals the radius. The full cycle closes at exactly zero.
  CornerWeights a;
  a.a.resize(tri.numHalfEdges());
  for (int v = 0; v < tri.numVertices(); ++v) {
    const auto& star = tri.star(v);
    const size_t m = star.size();
    std::vector<double> partial(m);
    double acc = 0.0;
    for (size_t k = 0; k < m; ++k) {
      acc += sr.shears[tri.edge(star[k])];
      partial[k] = acc;
    }
    partial[m - 1] = 0.0;
    const double lo = *std::min_element(partial.begin(), partial.end());
    for (size_t k = 0; k < m; ++k) a.a[star[k]] = sr.radii[v] + partial[k] - lo;
  }

  EdgeWeights w;
  w.w.resize(tri.numEdges());
  for (int e = 0; e < tri.numEdges(); ++e) {
    const HalfEdge hp = tri.edgeSides(e)[0];
    w.w[e] = a[hp] + a[Triangulation::next(hp)];
  }
  validateAdmissible(tri, w);
  return w;
}

Decomposition decompose(const Triangulation& tri, const EdgeWeights& w) {
  Decomposition d;
  d.radii = radiusMap(tri, w);
  d.interior.resize(tri.numEdges());
  for (int e = 0; e < tri.numEdges(); ++e)
    d.interior[e] = w[e] - d.radii[tri.edgeTail(e)] - d.radii[tri.edgeHead(e)];
  return d;
}

EdgeWeights recompose(const Triangulation& tri, const std::vector<double>& interior,
                      const std::vector<double>& radii, double radiusScale, double interiorScale) {
  EdgeWeights w;
  w.w.resize(tri.numEdges());
  for (int e = 0; e < tri.numEdges(); ++e)
    w.w[e] = interiorScale * interior[e] +
             radiusScale * (radii[tri.edgeTail(e)] + radii[tri.edgeHead(e)]);
  return w;
}

} // namespace teich
