#include "teich/cone_metric.hpp"

#include "teich/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace teich {

ConeSurface::ConeSurface(Triangulation tri, EdgeWeights lengths)
    : tri_(std::move(tri)), lengths_(std::move(lengths)) {
  validateAdmissible(tri_, lengths_);
}

double cornerAngle(const ConeSurface& x, HalfEdge c) {
  const auto angles = triangleAngles(x.face(Triangulation::face(c)));
  return angles[(Triangulation::position(c) + 1) % 3];
}

std::vector<double> coneAngles(const ConeSurface& x) {
  const auto& tri = x.triangulation();
  std::vector<double> theta(tri.numVertices(), 0.0);
  for (int f = 0; f < tri.numFaces(); ++f) {
    const auto angles = triangleAngles(x.face(f));
    for (int k = 0; k < 3; ++k)
      theta[tri.cornerVertex(Triangulation::side(f, k))] += angles[(k + 1) % 3];
  }
  return theta;
}

double area(const ConeSurface& x) {
  double total = 0.0;
  for (int f = 0; f < x.triangulation().numFaces(); ++f) total += triangleArea(x.face(f));
  return total;
}

bool inCollarRegime(const ConeSurface& x) {
  const auto theta = coneAngles(x);
  return *std::max_element(theta.begin(), theta.end()) < kPi;
}

CircularFoliationData circularFoliation(const ConeSurface& x) {
  const auto& tri = x.triangulation();
  CircularFoliationData out{x.lengths(), cornerWeights(tri, x.lengths()), {}};
  out.inradii.resize(tri.numFaces());
  for (int f = 0; f < tri.numFaces(); ++f) out.inradii[f] = inradius(x.face(f));
  return out;
}

ShearRadius shearRadiusCoords(const ConeSurface& x) {
  return shearRadius(x.triangulation(), x.lengths());
}

ConeSurface fromShearRadius(const Triangulation& tri, const ShearRadius& sr) {
  return ConeSurface(tri, reconstruct(tri, sr));
}

GeodesicFlipResult geodesicFlip(const ConeSurface& x, int e) {
  const auto& tri = x.triangulation();
  auto flipped = flip(tri, e);

  // Face f: A->B (e), B->C (x1), C->A (x2); face g: B->A (e), A->D (y1), D->B (y2).
  const auto [hf, hg] = tri.edgeSides(e);
  const HalfEdge x1 = Triangulation::next(hf), x2 = Triangulation::prev(hf);
  const HalfEdge y1 = Triangulation::next(hg);
  const double atA = cornerAngle(x, hf) + cornerAngle(x, y1);
  const double atB = cornerAngle(x, x1) + cornerAngle(x, hg);
  for (double sum : {atA, atB}) {
    if (!(sum < kPi))
      throw GeodesicFlipError("angle sum " + std::to_string(sum) +
                              " >= pi at an endpoint of edge " + std::to_string(e + 1));
  }

  // Law of cosines at A across the two triangles:
  // sinh^2(d/2) = sinh^2((a - b)/2) + sinh a sinh b sin^2(alpha/2).
  const double a = x.length(tri.edge(x2)), b = x.length(tri.edge(y1));
  const double h = std::sinh(0.5 * (a - b));
  const double sHalf = std::sin(0.5 * atA);
  const double d = 2.0 * std::asinh(std::sqrt(h * h + std::sinh(a) * std::sinh(b) * sHalf * sHalf));

  EdgeWeights lengths = x.lengths();
  lengths.w[e] = d;
  // An angle sum just below pi can still round the new faces onto the
  // boundary of the admissible cone.
  for (int f = 0; f < flipped.triangulation.numFaces(); ++f)
    if (!faceWeights(flipped.triangulation, lengths, f).valid())
      throw GeodesicFlipError("flipped faces of edge " + std::to_string(e + 1) +
                              " are degenerate (angle sum " + std::to_string(std::max(atA, atB)) + ")");
  const Triangulation newTri = flipped.triangulation;
  return {ConeSurface(newTri, std::move(lengths)), std::move(flipped)};
}

Developer coneDeveloper(const ConeSurface& x) {
  const auto& tri = x.triangulation();
  std::vector<FaceFrames> frames(tri.numFaces());
  for (int f = 0; f < tri.numFaces(); ++f) {
    const auto L = x.face(f);
    const auto phi = centralHalfAngles(L);
    frames[f] = incircleFrames(inradius(L), {phi[0], phi[1], phi[2]});
  }
  const auto a = cornerWeights(tri, x.lengths());
  std::vector<double> offsets(tri.numHalfEdges());
  for (HalfEdge h = 0; h < tri.numHalfEdges(); ++h)
    offsets[h] = a[Triangulation::next(h)] - a[tri.partner(h)];
  return Developer(tri, std::move(frames), std::move(offsets));
}

Isometry curveHolonomy(const ConeSurface& x, const CurveClass& curve) {
  const auto c = validateCurve(x.triangulation(), curve);
  return coneDeveloper(x).holonomy(c);
}

namespace {

void requireHyperbolic(const IsometryClass& cls) {
  if (cls.type == IsometryType::Elliptic)
    throw EllipticHolonomyError("holonomy is elliptic (rotation " + std::to_string(cls.rotation) +
                                "); no smooth closed geodesic");
  if (cls.type == IsometryType::Parabolic)
    throw EllipticHolonomyError("holonomy is parabolic; no closed geodesic");
}

} // namespace

double curveLength(const ConeSurface& x, const CurveClass& curve) {
  const auto cls = translationLength(curveHolonomy(x, curve));
  requireHyperbolic(cls);
  return cls.length;
}

std::vector<double> tangencyDeviation(const ConeSurface& x, const CurveClass& curve) {
  const auto c = validateCurve(x.triangulation(), curve);
  const auto dev = coneDeveloper(x);
  const auto partial = dev.develop(c);
  const Isometry& hol = partial.back();
  requireHyperbolic(translationLength(hol));

  std::vector<double> out;
  out.reserve(partial.size());
  for (size_t k = 0; k < partial.size(); ++k) {
    const Isometry& frame = dev.sideFrame(c.entries[k]);
    const Isometry local = frame.inverse() * partial[k].inverse() * hol * partial[k] * frame;
    const auto y = axisCrossing(local);
    out.push_back(y ? std::abs(*y) : std::numeric_limits<double>::infinity());
  }
  return out;
}

ConeSurface maxAngleSequence(const Triangulation& tri, int p, int n) {
  if (p < 0 || p >= tri.numVertices()) throw IndexError("vertex " + std::to_string(p + 1) + " out of range");
  if (n < 1) throw DomainError("sequence index n must be >= 1");
  const double inv = 1.0 / n;
  std::vector<double> interior(tri.numEdges()), radii(tri.numVertices(), static_cast<double>(n));
  radii[p] = inv;
  for (int e = 0; e < tri.numEdges(); ++e) {
    const int atP = (tri.edgeTail(e) == p) + (tri.edgeHead(e) == p);
    interior[e] = atP == 2 ? inv : atP == 1 ? 1.0 + inv : 2.0;
  }
  return ConeSurface(tri, recompose(tri, interior, radii));
}

} // namespace teich
