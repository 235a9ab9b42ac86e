#pragma once

#include "teich/hyperbolic.hpp"
#include "teich/triangulation.hpp"

#include <array>
#include <vector>

namespace teich {

// Each face is placed with its incenter at i. The frame of a side maps the
// base point i with upward direction to the side's incircle tangency point
// with the side's counterclockwise boundary direction.
struct FaceFrames {
  std::array<Isometry, 3> side;
};

FaceFrames incircleFrames(Real inradius, const std::array<Real, 3>& centralHalfAngles);

/// Developing data for a triangulated surface: per-face side frames plus, per
/// half-edge, the signed offset along the edge from the tangency point of the
/// face being left to the tangency point of the face being entered.
class Developer {
public:
  Developer(const Triangulation& tri, std::vector<FaceFrames> frames, std::vector<double> offsets);

  // Isometry taking the coordinates of face(h) to those of face(partner(h))
  // when the path crosses into face(h) through side h.
  Isometry gluing(HalfEdge h) const;

  // Partial developing products: element k maps the coordinates of the face
  // entered at step k into the coordinates of the starting face
  // face(partner(entries[0])). The last element is the holonomy.
  std::vector<Isometry> develop(const CurveClass& curve) const;
  Isometry holonomy(const CurveClass& curve) const { return develop(curve).back(); }

  const Isometry& sideFrame(HalfEdge h) const {
    return frames_[Triangulation::face(h)].side[Triangulation::position(h)];
  }

private:
  const Triangulation* tri_;
  std::vector<FaceFrames> frames_;
  std::vector<double> offsets_;
};

// Signed position (log scale along the side) where the axis of a hyperbolic
// isometry, expressed in the side frame, crosses the side line; nullopt when
// the axis misses it.
std::optional<double> axisCrossing(const Isometry& inSideFrame);

} // namespace teich
