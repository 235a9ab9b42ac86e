#include "teich/cusped.hpp"

#include "teich/errors.hpp"
#include "teich/foliation.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace teich {

std::vector<double> projectBalanced(const Triangulation& tri, const std::vector<double>& shears) {
  const int n = tri.numVertices(), m = tri.numEdges();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, m);
  for (int v = 0; v < n; ++v)
    for (HalfEdge h : tri.star(v)) A(v, tri.edge(h)) += 1.0;
  const Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(shears.data(), m);
  // Minimum-norm y with A A^T y = A s; s - A^T y is the projection.
  const Eigen::MatrixXd gram = A * A.transpose();
  const Eigen::VectorXd y = gram.completeOrthogonalDecomposition().solve(A * s);
  const Eigen::VectorXd p = s - A.transpose() * y;
  return {p.data(), p.data() + m};
}

CuspedSurface::CuspedSurface(Triangulation tri, std::vector<double> shears)
    : tri_(std::move(tri)), shears_(std::move(shears)) {
  if (static_cast<int>(shears_.size()) != tri_.numEdges())
    throw FormatError("expected " + std::to_string(tri_.numEdges()) + " shears, got " +
                      std::to_string(shears_.size()));
  for (double s : shears_)
    if (!std::isfinite(s)) throw FormatError("non-finite shear");

  double worst = 0.0;
  int worstVertex = 0;
  const auto sums = starSums(tri_, shears_);
  for (int v = 0; v < tri_.numVertices(); ++v) {
    if (std::abs(sums[v]) > worst) {
      worst = std::abs(sums[v]);
      worstVertex = v;
    }
  }
  if (worst > kBalanceProjectionLimit)
    throw BalanceError("shears around vertex " + std::to_string(worstVertex + 1) + " sum to " +
                       std::to_string(sums[worstVertex]));
  if (worst > 0.0) shears_ = projectBalanced(tri_, shears_);
}

Developer cuspedDeveloper(const CuspedSurface& y) {
  // Every ideal triangle is the same: inscribed radius ln sqrt 3 and
  // tangency points spaced 2 pi / 3 apart. Neighbouring tangency points on
  // an edge are offset by minus its shear, as for cone surfaces.
  const auto& tri = y.triangulation();
  const Real r = 0.5L * std::log(3.0L);
  const FaceFrames ideal = incircleFrames(r, {kPiL / 3, kPiL / 3, kPiL / 3});
  std::vector<FaceFrames> frames(tri.numFaces(), ideal);
  std::vector<double> offsets(tri.numHalfEdges());
  for (HalfEdge h = 0; h < tri.numHalfEdges(); ++h) offsets[h] = -y.shears()[tri.edge(h)];
  return Developer(tri, std::move(frames), std::move(offsets));
}

Isometry cuspedHolonomy(const CuspedSurface& y, const CurveClass& curve) {
  const auto c = validateCurve(y.triangulation(), curve);
  return cuspedDeveloper(y).holonomy(c);
}

double cuspedLength(const CuspedSurface& y, const CurveClass& curve) {
  const auto cls = translationLength(cuspedHolonomy(y, curve));
  if (cls.type != IsometryType::Hyperbolic)
    throw ParabolicClassError("holonomy has |trace| = 2: peripheral class without closed geodesic");
  return cls.length;
}

} // namespace teich
