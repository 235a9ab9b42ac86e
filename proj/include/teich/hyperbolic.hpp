#pragma once

#include <array>
#include <complex>
#include <optional>

namespace teich {

inline constexpr double kPi = 3.14159265358979323846;

// Isometries are composed in extended precision: long products of gluing
// matrices (curve holonomies) have entries far larger than their trace, so
// rounding in the factors is strongly amplified.
using Real = long double;
inline constexpr Real kPiL = 3.141592653589793238462643383279502884L;

// Point of the upper half-plane, stored as a complex number with Im > 0.
struct PointH2 {
  double x = 0.0;
  double y = 1.0;

  std::complex<double> z() const { return {x, y}; }
  static PointH2 from(std::complex<double> z) { return {z.real(), z.imag()}; }
};

double distance(const PointH2& p, const PointH2& q);

/// Orientation-preserving isometry of the upper half-plane, stored as a
/// unit-determinant real 2x2 matrix. M and -M act identically.
class Isometry {
public:
  Isometry() = default;
  // Normalizes to unit determinant; requires det > 0.
  Isometry(Real a, Real b, Real c, Real d);

  static Isometry identity() { return {}; }
  // Translation along the imaginary axis by signed distance t (upwards for t > 0).
  static Isometry axialTranslation(Real t);
  // Counterclockwise rotation by angle phi about the base point i.
  static Isometry rotationAtBase(Real phi);

  double a() const { return static_cast<double>(m_[0]); }
  double b() const { return static_cast<double>(m_[1]); }
  double c() const { return static_cast<double>(m_[2]); }
  double d() const { return static_cast<double>(m_[3]); }
  double trace() const { return static_cast<double>(m_[0] + m_[3]); }
  double det() const { return static_cast<double>(m_[0] * m_[3] - m_[1] * m_[2]); }

  Isometry operator*(const Isometry& rhs) const;
  Isometry inverse() const { return Isometry(m_[3], -m_[1], -m_[2], m_[0]); }

  std::complex<double> apply(std::complex<double> z) const;
  PointH2 apply(const PointH2& p) const { return PointH2::from(apply(p.z())); }

  // Entry-wise comparison modulo the global sign.
  bool approxEqual(const Isometry& o, double tol) const;

private:
  void renormalize();
  std::array<Real, 4> m_{1.0L, 0.0L, 0.0L, 1.0L};
};

enum class IsometryType { Hyperbolic, Parabolic, Elliptic };

struct IsometryClass {
  IsometryType type;
  double length = 0.0;   // translation length (hyperbolic), else 0
  double rotation = 0.0; // counterclockwise rotation in [0, 2pi) (elliptic), else 0
};

// Classification with |tr| = 2 decided within 1e-9.
IsometryClass translationLength(const Isometry& m);

// Side lengths of a hyperbolic triangle with vertices v1, v2, v3 in
// counterclockwise order; l[i] is the side opposite v[i], so side i runs from
// v[i+1] to v[i+2].
struct TriangleLengths {
  std::array<double, 3> l{};

  double operator[](int i) const { return l[i]; }
  // Tangent length at vertex i: distance from v[i] to the incircle tangency
  // points on its two sides, (l[i+1] + l[i+2] - l[i]) / 2.
  double tangent(int i) const;
  bool valid() const;
};

// Throws DomainError when the strict triangle inequalities fail.
void requireValid(const TriangleLengths& lengths);

// Interior angle at each vertex.
std::array<double, 3> triangleAngles(const TriangleLengths& lengths);
double inradius(const TriangleLengths& lengths);
// Half of the central angle subtended at the incenter by the two tangency
// points adjacent to vertex i.
std::array<double, 3> centralHalfAngles(const TriangleLengths& lengths);
double triangleArea(const TriangleLengths& lengths);

struct CanonicalTriangle {
  std::array<PointH2, 3> vertices;
  PointH2 incenter;
  double inradius = 0.0;
  // Angle at the incenter between the rays to v[k] and v[k+1].
  std::array<double, 3> centralAngles{};
  // Incircle tangency point on side i (opposite v[i]).
  std::array<PointH2, 3> tangency;
};

// Incenter at i, v1 on the upward vertical ray, vertices counterclockwise.
CanonicalTriangle canonicalPlacement(const TriangleLengths& lengths);

// Boundary point on side i at fraction t of its length, measured from v[i+1].
struct BoundaryPoint {
  int side;
  double t;
};

// Length of the geodesic arc between two boundary points of the triangle.
double arcLengthInTriangle(const TriangleLengths& lengths, BoundaryPoint p, BoundaryPoint q);

double angleOfParallelism(double d);

// Distance between p(r, x) and q(theta, r, y): points offset by signed
// distances x, y along the geodesics orthogonal to two radii of length r that
// meet at angle theta. Positive offsets lie to the left of their radius.
double footOffsetDistance(double r, double x, double theta, double y);

// Clamp into [-1, 1] before arccos / arcsin.
double clampUnit(double x);

// log(sinh(x)) for x > 0, stable for large x.
double logSinh(double x);

} // namespace teich
