#include "teich/developing.hpp"

#include <cmath>

namespace teich {

FaceFrames incircleFrames(Real inradius, const std::array<Real, 3>& phi) {
  // Same angular walk as canonicalPlacement: vertex k sits at the running
  // angle, then the tangency point of the side opposite vertex k+2.
  FaceFrames out;
  const Isometry lift = Isometry::axialTranslation(inradius) * Isometry::rotationAtBase(kPiL / 2);
  Real psi = 0.0L;
  for (int k = 0; k < 3; ++k) {
    psi += phi[k];
    out.side[(k + 2) % 3] = Isometry::rotationAtBase(psi) * lift;
    psi += phi[(k + 1) % 3];
  }
  return out;
}

Developer::Developer(const Triangulation& tri, std::vector<FaceFrames> frames,
                     std::vector<double> offsets)
    : tri_(&tri), frames_(std::move(frames)), offsets_(std::move(offsets)) {}

Isometry Developer::gluing(HalfEdge h) const {
  const HalfEdge p = tri_->partner(h);
  return sideFrame(p) * Isometry::axialTranslation(offsets_[h]) * Isometry::rotationAtBase(kPiL) *
         sideFrame(h).inverse();
}

std::vector<Isometry> Developer::develop(const CurveClass& curve) const {
  std::vector<Isometry> out;
  out.reserve(curve.entries.size());
  Isometry acc;
  for (HalfEdge h : curve.entries) {
    acc = acc * gluing(h);
    out.push_back(acc);
  }
  return out;
}

std::optional<double> axisCrossing(const Isometry& m) {
  // Fixed points solve c z^2 + (d - a) z - b = 0; the axis meets the
  // imaginary axis at height y with y^2 = -(product of roots) = b / c.
  if (m.c() == 0.0 || m.b() == 0.0) return std::nullopt;
  const double ratio = m.b() / m.c();
  if (!(ratio > 0.0)) return std::nullopt;
  return 0.5 * std::log(ratio);
}

} // namespace teich
