#include "teich/triangulation.hpp"

#include "teich/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace teich {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Triangulation Triangulation::build(std::initializer_list<FaceGluing> faces) {
  std::vector<FaceGluing> v(faces);
  return build(std::span<const FaceGluing>(v));
}

Triangulation Triangulation::build(std::span<const FaceGluing> faces) {
  if (faces.empty()) throw FormatError("triangulation has no faces");

  Triangulation t;
  t.faces_.assign(faces.begin(), faces.end());
  const int numSides = 3 * static_cast<int>(faces.size());

  int maxEdge = 0;
  for (const auto& f : faces)
    for (int s : f) {
      if (s == 0) throw FormatError("edge index 0 is not allowed (indices are 1-based)");
      maxEdge = std::max(maxEdge, std::abs(s));
    }

  t.numEdges_ = maxEdge;
  t.sideEdge_.resize(numSides);
  t.sidePositive_.resize(numSides);
  t.edgeSides_.assign(maxEdge, {-1, -1});
  for (int h = 0; h < numSides; ++h) {
    int s = faces[face(h)][position(h)];
    int e = std::abs(s) - 1;
    bool pos = s > 0;
    t.sideEdge_[h] = e;
    t.sidePositive_[h] = pos;
    auto& slot = t.edgeSides_[e][pos ? 0 : 1];
    if (slot != -1)
      throw OrientabilityError("edge " + std::to_string(e + 1) + " appears twice with sign " +
                               (pos ? "+" : "-"));
    slot = h;
  }
  for (int e = 0; e < maxEdge; ++e) {
    if (t.edgeSides_[e][0] == -1 || t.edgeSides_[e][1] == -1)
      throw FormatError("edge " + std::to_string(e + 1) +
                        " must appear exactly twice, once with each sign");
  }

  t.partner_.resize(numSides);
  for (const auto& [a, b] : t.edgeSides_) {
    t.partner_[a] = b;
    t.partner_[b] = a;
  }

  // Side h and its partner traverse the edge in opposite directions, so the
  // start of h is the end of partner(h).
  UnionFind corners(numSides);
  for (int h = 0; h < numSides; ++h) corners.unite(h, next(t.partner_[h]));

  UnionFind faceGraph(t.numFaces());
  for (int h = 0; h < numSides; ++h) faceGraph.unite(face(h), face(t.partner_[h]));
  for (int f = 1; f < t.numFaces(); ++f)
    if (faceGraph.find(f) != faceGraph.find(0)) throw EulerError("face gluing is disconnected");

  std::vector<int> label(numSides, -1);
  t.cornerVertex_.resize(numSides);
  int numVertices = 0;
  for (int h = 0; h < numSides; ++h) {
    int root = corners.find(h);
    if (label[root] == -1) label[root] = numVertices++;
    t.cornerVertex_[h] = label[root];
  }

  const int V = numVertices, E = maxEdge, F = t.numFaces();
  const int chi = V - E + F;
  if (2 * E != 3 * F) throw EulerError("3F = 2E fails");
  if (chi > 2 || chi % 2 != 0)
    throw EulerError("V - E + F = " + std::to_string(chi) + " is not 2 - 2g");
  t.genus_ = (2 - chi) / 2;
  const int g = t.genus_, n = V;
  if (2 * g - 2 + n <= 0)
    throw DegenerateError("2g - 2 + n = " + std::to_string(2 * g - 2 + n) + " <= 0");
  if (E != 6 * g - 6 + 3 * n || F != 4 * g - 4 + 2 * n)
    throw EulerError("edge/face counts violate E = 6g-6+3n, F = 4g-4+2n");

  // Stars: walk counterclockwise from any outgoing half-edge.
  t.stars_.assign(V, {});
  t.starIndex_.assign(numSides, -1);
  for (int h = 0; h < numSides; ++h) {
    int v = t.cornerVertex_[h];
    if (!t.stars_[v].empty()) continue;
    HalfEdge cur = h;
    do {
      if (t.cornerVertex_[cur] != v) throw EulerError("inconsistent vertex star");
      t.starIndex_[cur] = static_cast<int>(t.stars_[v].size());
      t.stars_[v].push_back(cur);
      cur = t.nextCcw(cur);
    } while (cur != h);
  }
  for (int h = 0; h < numSides; ++h)
    if (t.starIndex_[h] == -1) throw EulerError("vertex star does not close up");

  return t;
}

const std::vector<HalfEdge>& Triangulation::star(int v) const {
  if (v < 0 || v >= numVertices())
    throw IndexError("vertex " + std::to_string(v) + " out of range");
  return stars_[v];
}

int Triangulation::facesAt(int v) const {
  std::vector<int> fs;
  for (HalfEdge h : star(v)) fs.push_back(face(h));
  std::sort(fs.begin(), fs.end());
  return static_cast<int>(std::unique(fs.begin(), fs.end()) - fs.begin());
}

std::vector<int> Triangulation::canonicalCode() const {
  // Breadth-first relabeling from every starting side; keep the smallest.
  std::vector<int> best;
  const int F = numFaces();
  for (HalfEdge start = 0; start < numHalfEdges(); ++start) {
    std::vector<int> faceLabel(F, -1), faceRot(F, 0), order;
    std::vector<int> edgeLabel(numEdges_, -1);
    std::vector<bool> edgeSign(numEdges_, true);
    int nextEdge = 0;
    faceLabel[face(start)] = 0;
    faceRot[face(start)] = position(start);
    order.push_back(face(start));
    std::vector<int> code;
    code.reserve(3 * F);
    for (size_t q = 0; q < order.size(); ++q) {
      int f = order[q];
      for (int k = 0; k < 3; ++k) {
        HalfEdge h = side(f, (faceRot[f] + k) % 3);
        int e = edge(h);
        if (edgeLabel[e] == -1) {
          edgeLabel[e] = nextEdge++;
          edgeSign[e] = positive(h);
        }
        bool sameDir = positive(h) == edgeSign[e];
        code.push_back(2 * edgeLabel[e] + (sameDir ? 0 : 1));
        HalfEdge p = partner(h);
        if (faceLabel[face(p)] == -1) {
          faceLabel[face(p)] = static_cast<int>(order.size());
          faceRot[face(p)] = position(p);
          order.push_back(face(p));
        }
      }
      if (!best.empty() && code.size() >= 3 &&
          std::lexicographical_compare(best.begin(), best.begin() + code.size(), code.begin(),
                                       code.end()))
        break;
    }
    if (code.size() != static_cast<size_t>(3 * F)) continue;
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

FlipResult flip(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.numEdges()) throw IndexError("edge " + std::to_string(e) + " out of range");
  auto [hf, hg] = tri.edgeSides(e);
  const int f = Triangulation::face(hf), g = Triangulation::face(hg);
  if (f == g)
    throw UnflippableError("edge " + std::to_string(e + 1) +
                           " has both sides on one face (self-folded)");

  // Face f: A->B (e), B->C (x1), C->A (x2); face g: B->A (e), A->D (y1), D->B (y2).
  const HalfEdge x1 = Triangulation::next(hf), x2 = Triangulation::prev(hf);
  const HalfEdge y1 = Triangulation::next(hg), y2 = Triangulation::prev(hg);

  auto gluing = tri.gluing();
  const auto& old = tri.gluing();
  auto signedOf = [&](HalfEdge h) { return old[Triangulation::face(h)][Triangulation::position(h)]; };
  gluing[f] = {signedOf(y2), signedOf(x1), e + 1};
  gluing[g] = {signedOf(x2), signedOf(y1), -(e + 1)};

  FlipResult result{Triangulation::build(gluing), {}, {}};
  result.edgeMap.resize(tri.numEdges());
  std::iota(result.edgeMap.begin(), result.edgeMap.end(), 0);
  result.sideMap.resize(tri.numHalfEdges());
  std::iota(result.sideMap.begin(), result.sideMap.end(), 0);
  result.sideMap[hf] = -1;
  result.sideMap[hg] = -1;
  result.sideMap[y2] = Triangulation::side(f, 0);
  result.sideMap[x1] = Triangulation::side(f, 1);
  result.sideMap[x2] = Triangulation::side(g, 0);
  result.sideMap[y1] = Triangulation::side(g, 1);
  return result;
}

namespace {

CurveClass normalize(const Triangulation& tri, std::vector<HalfEdge> entries) {
  // Entering through the partner of the previous entry side undoes it.
  bool changed = true;
  while (changed && entries.size() >= 2) {
    changed = false;
    const size_t m = entries.size();
    for (size_t k = 0; k < m; ++k) {
      size_t k1 = (k + 1) % m;
      if (tri.partner(entries[k1]) == entries[k]) {
        if (k1 > k) {
          entries.erase(entries.begin() + k1);
          entries.erase(entries.begin() + k);
        } else {
          entries.erase(entries.begin() + k);
          entries.erase(entries.begin() + k1);
        }
        changed = true;
        break;
      }
    }
  }
  if (entries.empty()) throw EmptyCurveError("curve reduces to the empty sequence");

  auto best = entries;
  for (size_t r = 1; r < entries.size(); ++r) {
    std::rotate(entries.begin(), entries.begin() + 1, entries.end());
    if (entries < best) best = entries;
  }
  return CurveClass{std::move(best)};
}

void checkAdjacency(const Triangulation& tri, const std::vector<HalfEdge>& entries) {
  const size_t m = entries.size();
  for (size_t k = 0; k < m; ++k) {
    HalfEdge cur = entries[k], nxt = entries[(k + 1) % m];
    if (Triangulation::face(tri.partner(nxt)) != Triangulation::face(cur))
      throw AdjacencyError("step " + std::to_string((k + 1) % m + 1) + " crosses edge " +
                           std::to_string(tri.edge(nxt) + 1) + " which does not bound face " +
                           std::to_string(Triangulation::face(cur) + 1));
  }
}

} // namespace

CurveClass validateCurve(const Triangulation& tri, std::span<const CurveStep> steps) {
  if (steps.empty()) throw EmptyCurveError("curve has no steps");
  std::vector<HalfEdge> entries;
  entries.reserve(steps.size());
  for (const auto& s : steps) {
    if (s.edge < 0 || s.edge >= tri.numEdges())
      throw IndexError("curve edge " + std::to_string(s.edge + 1) + " out of range");
    if (s.face < 0 || s.face >= tri.numFaces())
      throw IndexError("curve face " + std::to_string(s.face + 1) + " out of range");
    std::vector<HalfEdge> candidates;
    for (int p = 0; p < 3; ++p) {
      HalfEdge h = Triangulation::side(s.face, p);
      if (tri.edge(h) == s.edge) candidates.push_back(h);
    }
    if (candidates.empty())
      throw AdjacencyError("edge " + std::to_string(s.edge + 1) + " is not a side of face " +
                           std::to_string(s.face + 1));
    if (s.side) {
      HalfEdge h = Triangulation::side(s.face, *s.side);
      if (*s.side < 0 || *s.side > 2 || tri.edge(h) != s.edge)
        throw AdjacencyError("side " + std::to_string(*s.side + 1) + " of face " +
                             std::to_string(s.face + 1) + " is not edge " +
                             std::to_string(s.edge + 1));
      entries.push_back(h);
    } else if (candidates.size() > 1) {
      throw AdjacencyError("face " + std::to_string(s.face + 1) + " carries edge " +
                           std::to_string(s.edge + 1) + " twice; specify the entry side");
    } else {
      entries.push_back(candidates.front());
    }
  }
  checkAdjacency(tri, entries);
  return normalize(tri, std::move(entries));
}

CurveClass validateCurve(const Triangulation& tri, const CurveClass& curve) {
  if (curve.entries.empty()) throw EmptyCurveError("curve has no steps");
  for (HalfEdge h : curve.entries)
    if (h < 0 || h >= tri.numHalfEdges()) throw IndexError("curve side out of range");
  checkAdjacency(tri, curve.entries);
  return normalize(tri, curve.entries);
}

CurveClass reversed(const Triangulation& tri, const CurveClass& curve) {
  // Visit k leaves its face through partner(entry[k + 1]); reversed, that side
  // becomes the entry side and visits run backwards.
  const int m = curve.size();
  std::vector<HalfEdge> out(m);
  for (int k = 0; k < m; ++k) out[m - 1 - k] = tri.partner(curve.entries[(k + 1) % m]);
  return validateCurve(tri, CurveClass{std::move(out)});
}

CurveClass vertexLink(const Triangulation& tri, int v) {
  return CurveClass{tri.star(v)};
}

CurveClass transportCurve(const Triangulation& tri, const FlipResult& flipped, int e,
                          const CurveClass& curve) {
  const auto [hf, hg] = tri.edgeSides(e);
  const int f = Triangulation::face(hf), g = Triangulation::face(hg);
  const Triangulation& nt = flipped.triangulation;
  auto isDiagonal = [&](HalfEdge h) { return h == hf || h == hg; };

  // Every entry through a side other than the old diagonal starts a new
  // passage; begin at one so that passages are never split.
  const int m = curve.size();
  int start = -1;
  for (int k = 0; k < m && start == -1; ++k)
    if (!isDiagonal(curve.entries[k])) start = k;
  if (start == -1) throw AdjacencyError("curve only crosses the flipped edge");

  auto diagIn = [&](int face) {
    for (int p = 0; p < 3; ++p) {
      HalfEdge h = Triangulation::side(face, p);
      if (nt.edge(h) == e) return h;
    }
    return -1;
  };

  std::vector<HalfEdge> out;
  for (int step = 0; step < m; ++step) {
    const int k = (start + step) % m;
    HalfEdge h = curve.entries[k];
    const int fc = Triangulation::face(h);
    if (fc != f && fc != g) {
      out.push_back(h);
      continue;
    }
    if (isDiagonal(h)) continue; // crossing the old diagonal disappears
    // h enters the quad through a boundary side; find where the passage exits.
    int j = k;
    while (true) {
      int jn = (j + 1) % m;
      HalfEdge exitSide = tri.partner(curve.entries[jn]);
      if (isDiagonal(curve.entries[jn])) {
        j = jn;
        continue;
      }
      const HalfEdge a = flipped.sideMap[h], b = flipped.sideMap[exitSide];
      out.push_back(a);
      if (Triangulation::face(a) != Triangulation::face(b))
        out.push_back(diagIn(Triangulation::face(b)));
      break;
    }
  }
  return validateCurve(nt, CurveClass{std::move(out)});
}

} // namespace teich
