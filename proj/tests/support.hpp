#pragma once

#include "teich/cone_metric.hpp"
#include "teich/cusped.hpp"
#include "teich/errors.hpp"
#include "teich/foliation.hpp"
#include "teich/triangulation.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace teich;

inline Triangulation torus() { return Triangulation::build({{1, 2, 3}, {-1, -2, -3}}); }
inline Triangulation sphere3() { return Triangulation::build({{1, 2, 3}, {-1, -3, -2}}); }
// Two self-folded triangles: edges 1 and 3 are folded, edge 2 joins them.
inline Triangulation sphere3Folded() { return Triangulation::build({{1, -1, 2}, {-2, 3, -3}}); }
inline Triangulation genus2() {
  return Triangulation::build(
      {{1, 2, -5}, {5, -1, -6}, {6, -2, -7}, {7, 3, -8}, {8, 4, -9}, {9, -3, -4}});
}

struct Named {
  std::string name;
  Triangulation tri;
};

inline std::vector<Named> standardTriangulations() {
  return {{"torus", torus()}, {"sphere3", sphere3()}, {"genus2", genus2()}};
}

inline std::string dataPath(const std::string& file) { return std::string(TEICH_TEST_DATA) + "/" + file; }

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::vector<double> balancedShears(const Triangulation& tri, Rng& rng, double scale) {
  std::vector<double> s(tri.numEdges());
  for (double& v : s) v = uniform(rng, -scale, scale);
  return projectBalanced(tri, s);
}

inline ShearRadius randomShearRadius(const Triangulation& tri, Rng& rng, double shearScale = 2.0,
                                     double rLo = 0.1, double rHi = 3.0) {
  ShearRadius sr{balancedShears(tri, rng, shearScale), std::vector<double>(tri.numVertices())};
  for (double& r : sr.radii) r = uniform(rng, rLo, rHi);
  return sr;
}

inline bool admissible(const Triangulation& tri, const EdgeWeights& w) {
  for (int f = 0; f < tri.numFaces(); ++f)
    if (!faceWeights(tri, w, f).valid()) return false;
  return true;
}

// Uniform sample of the admissible cone intersected with a box, by rejection.
inline EdgeWeights randomAdmissible(const Triangulation& tri, Rng& rng, double lo = 0.1, double hi = 5.0) {
  EdgeWeights w{std::vector<double>(tri.numEdges())};
  do {
    for (double& v : w.w) v = uniform(rng, lo, hi);
  } while (!admissible(tri, w));
  return w;
}

// Old vertex index -> vertex index on the flipped triangulation.
inline std::vector<int> flippedVertices(const Triangulation& tri, const FlipResult& r) {
  std::vector<int> map(tri.numVertices(), -1);
  for (HalfEdge h = 0; h < tri.numHalfEdges(); ++h)
    if (r.sideMap[h] >= 0) map[tri.tail(h)] = r.triangulation.tail(r.sideMap[h]);
  return map;
}

// Closed non-backtracking walk in the dual graph, normalized.
inline CurveClass randomCurve(const Triangulation& tri, Rng& rng, int minSteps, int maxSteps) {
  for (;;) {
    const int steps = std::uniform_int_distribution<int>(minSteps, maxSteps)(rng);
    std::vector<HalfEdge> entries;
    HalfEdge h = std::uniform_int_distribution<int>(0, tri.numHalfEdges() - 1)(rng);
    entries.push_back(h);
    for (int k = 1; k < steps; ++k) {
      // Leave face(h) through one of the two sides other than h.
      const int turn = std::uniform_int_distribution<int>(1, 2)(rng);
      const HalfEdge exit = Triangulation::side(Triangulation::face(h), (Triangulation::position(h) + turn) % 3);
      h = tri.partner(exit);
      entries.push_back(h);
    }
    // Close up only when the last face connects back to the first entry.
    if (Triangulation::face(tri.partner(entries.front())) != Triangulation::face(entries.back())) continue;
    if (tri.partner(entries.front()) == entries.back()) continue;
    try {
      return validateCurve(tri, CurveClass{entries});
    } catch (const Error&) {
      continue; // collapsed entirely
    }
  }
}

} // namespace testing_support
