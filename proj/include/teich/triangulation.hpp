#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace teich {

// A face side, oriented along the counterclockwise boundary of its face.
// Side h belongs to face h / 3 at position h % 3 and runs from corner h to
// corner next(h). Corner h is the corner of face h / 3 where side h starts.
using HalfEdge = int;

// One entry of the face-gluing input: edge index (1-based) with a sign,
// positive when the side traverses the edge in its intrinsic orientation.
using SignedEdge = int;
using FaceGluing = std::array<SignedEdge, 3>;

/// Oriented face-gluing description of a triangulated closed surface with
/// one marked point per vertex. Immutable after construction.
class Triangulation {
public:
  // Throws OrientabilityError, EulerError, DegenerateError, FormatError.
  static Triangulation build(std::span<const FaceGluing> faces);
  static Triangulation build(std::initializer_list<FaceGluing> faces);

  int numFaces() const { return static_cast<int>(faces_.size()); }
  int numEdges() const { return numEdges_; }
  int numVertices() const { return static_cast<int>(stars_.size()); }
  int numHalfEdges() const { return 3 * numFaces(); }
  int genus() const { return genus_; }
  int numMarked() const { return numVertices(); }

  static int face(HalfEdge h) { return h / 3; }
  static int position(HalfEdge h) { return h % 3; }
  static HalfEdge next(HalfEdge h) { return 3 * (h / 3) + (h % 3 + 1) % 3; }
  static HalfEdge prev(HalfEdge h) { return 3 * (h / 3) + (h % 3 + 2) % 3; }
  static HalfEdge side(int face, int pos) { return 3 * face + pos; }

  int edge(HalfEdge h) const { return sideEdge_[h]; }
  bool positive(HalfEdge h) const { return sidePositive_[h]; }
  HalfEdge partner(HalfEdge h) const { return partner_[h]; }

  // Vertex at the start of side h (equivalently the vertex of corner h).
  int tail(HalfEdge h) const { return cornerVertex_[h]; }
  int head(HalfEdge h) const { return cornerVertex_[next(h)]; }
  int cornerVertex(HalfEdge c) const { return cornerVertex_[c]; }

  // {positive side, negative side} of an edge.
  std::array<HalfEdge, 2> edgeSides(int e) const { return edgeSides_[e]; }
  int edgeTail(int e) const { return tail(edgeSides_[e][0]); }
  int edgeHead(int e) const { return head(edgeSides_[e][0]); }
  bool isLoop(int e) const { return edgeTail(e) == edgeHead(e); }

  // Counterclockwise cyclic list of outgoing half-edges at v. Loop edges
  // appear twice. Throws IndexError.
  const std::vector<HalfEdge>& star(int v) const;
  // Index of h within star(tail(h)).
  int starIndex(HalfEdge h) const { return starIndex_[h]; }
  HalfEdge nextCcw(HalfEdge h) const { return partner(prev(h)); }

  // Number of distinct faces incident to v.
  int facesAt(int v) const;

  const std::vector<FaceGluing>& gluing() const { return faces_; }

  // Isomorphism invariant: equal codes iff the triangulations are
  // orientation-preservingly isomorphic.
  std::vector<int> canonicalCode() const;

private:
  Triangulation() = default;

  std::vector<FaceGluing> faces_;
  int numEdges_ = 0;
  int genus_ = 0;
  std::vector<int> sideEdge_;
  std::vector<bool> sidePositive_;
  std::vector<HalfEdge> partner_;
  std::vector<int> cornerVertex_;
  std::vector<std::array<HalfEdge, 2>> edgeSides_;
  std::vector<std::vector<HalfEdge>> stars_;
  std::vector<int> starIndex_;
};

inline bool isomorphic(const Triangulation& a, const Triangulation& b) {
  return a.canonicalCode() == b.canonicalCode();
}

struct FlipResult {
  Triangulation triangulation;
  // Old edge index -> new edge index. The flipped edge keeps its index.
  std::vector<int> edgeMap;
  // Old half-edge -> new half-edge for every side that survives the flip;
  // the two sides of the flipped edge map to -1.
  std::vector<HalfEdge> sideMap;
};

// Replace edge e by the other diagonal of its quadrilateral.
// Throws IndexError, UnflippableError.
FlipResult flip(const Triangulation& tri, int e);

/// Closed curve recorded as the cyclic sequence of sides through which it
/// enters faces. Step k crosses edge(entry[k]) into face(entry[k]).
struct CurveClass {
  std::vector<HalfEdge> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool operator==(const CurveClass&) const = default;
};

// One step of a user-supplied crossing sequence, 0-based. `side` selects the
// entry side when the entered face carries the crossed edge twice.
struct CurveStep {
  int edge;
  int face;
  std::optional<int> side;
};

// Resolve steps, check adjacency, strip backtracks and rotate to canonical
// form. Throws EmptyCurveError, AdjacencyError, IndexError.
CurveClass validateCurve(const Triangulation& tri, std::span<const CurveStep> steps);
CurveClass validateCurve(const Triangulation& tri, const CurveClass& curve);

CurveClass reversed(const Triangulation& tri, const CurveClass& curve);

// Loop around vertex v crossing every outgoing half-edge once, turning
// counterclockwise.
CurveClass vertexLink(const Triangulation& tri, int v);

// Re-express a curve on the triangulation obtained by flipping edge e.
CurveClass transportCurve(const Triangulation& tri, const FlipResult& flipped, int e,
                          const CurveClass& curve);

} // namespace teich
