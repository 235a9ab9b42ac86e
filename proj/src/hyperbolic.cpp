#include "teich/hyperbolic.hpp"

#include "teich/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace teich {

namespace {

constexpr double kClampGuard = 1e-12;
constexpr double kParabolicTol = 1e-9;

// Hyperboloid-model point helpers for footOffsetDistance.
struct Minkowski {
  double t, x, y;
};

double minkowskiNorm2(const Minkowski& u) { return -u.t * u.t + u.x * u.x + u.y * u.y; }

} // namespace

double clampUnit(double x) {
  if (x > 1.0 + kClampGuard || x < -1.0 - kClampGuard)
    throw DomainError("cosine " + std::to_string(x) + " outside [-1, 1]");
  return std::clamp(x, -1.0, 1.0);
}

double logSinh(double x) {
  if (x > 20.0) return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

double distance(const PointH2& p, const PointH2& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  return 2.0 * std::asinh(std::sqrt(dx * dx + dy * dy) / (2.0 * std::sqrt(p.y * q.y)));
}

Isometry::Isometry(Real a, Real b, Real c, Real d) : m_{a, b, c, d} { renormalize(); }

void Isometry::renormalize() {
  const Real det = m_[0] * m_[3] - m_[1] * m_[2];
  if (!(det > 0.0L) || !std::isfinite(det))
    throw DomainError("isometry matrix has non-positive determinant");
  const Real s = 1.0L / std::sqrt(det);
  for (Real& v : m_) v *= s;
}

Isometry Isometry::axialTranslation(Real t) {
  return Isometry(std::exp(t / 2.0L), 0.0L, 0.0L, std::exp(-t / 2.0L));
}

Isometry Isometry::rotationAtBase(Real phi) {
  const Real c = std::cos(phi / 2.0L), s = std::sin(phi / 2.0L);
  return Isometry(c, s, -s, c);
}

Isometry Isometry::operator*(const Isometry& r) const {
  return Isometry(m_[0] * r.m_[0] + m_[1] * r.m_[2], m_[0] * r.m_[1] + m_[1] * r.m_[3],
                  m_[2] * r.m_[0] + m_[3] * r.m_[2], m_[2] * r.m_[1] + m_[3] * r.m_[3]);
}

std::complex<double> Isometry::apply(std::complex<double> z) const {
  return (a() * z + b()) / (c() * z + d());
}

bool Isometry::approxEqual(const Isometry& o, double tol) const {
  auto close = [&](double sign) {
    for (int i = 0; i < 4; ++i)
      if (std::abs(m_[i] - sign * o.m_[i]) > tol) return false;
    return true;
  };
  return close(1.0) || close(-1.0);
}

IsometryClass translationLength(const Isometry& m) {
  const double tr = std::abs(m.trace());
  if (tr > 2.0 + kParabolicTol) return {IsometryType::Hyperbolic, 2.0 * std::acosh(tr / 2.0), 0.0};
  if (tr >= 2.0 - kParabolicTol) return {IsometryType::Parabolic, 0.0, 0.0};

  // Fixed point in H^2 and the derivative there, which is e^{i*rotation}.
  const double a = m.a(), c = m.c(), d = m.d();
  const double disc = std::sqrt(std::max(0.0, 4.0 - m.trace() * m.trace()));
  std::complex<double> z0((a - d) / (2.0 * c), disc / (2.0 * std::abs(c)));
  const std::complex<double> w = c * z0 + d;
  double rot = -2.0 * std::arg(w);
  rot = std::fmod(rot, 2.0 * kPi);
  if (rot < 0.0) rot += 2.0 * kPi;
  return {IsometryType::Elliptic, 0.0, rot};
}

double TriangleLengths::tangent(int i) const {
  return 0.5 * (l[(i + 1) % 3] + l[(i + 2) % 3] - l[i]);
}

bool TriangleLengths::valid() const {
  for (int i = 0; i < 3; ++i)
    if (!(l[i] > 0.0) || !std::isfinite(l[i]) || !(tangent(i) > 0.0)) return false;
  return true;
}

void requireValid(const TriangleLengths& L) {
  if (!L.valid())
    throw DomainError("lengths (" + std::to_string(L[0]) + ", " + std::to_string(L[1]) + ", " +
                      std::to_string(L[2]) + ") violate the strict triangle inequalities");
}

std::array<double, 3> triangleAngles(const TriangleLengths& L) {
  requireValid(L);
  // Half-angle form of the law of cosines in terms of tangent lengths:
  // tan^2(alpha_i / 2) = sinh(t_{i+1}) sinh(t_{i+2}) / (sinh(s) sinh(t_i)).
  const double s = 0.5 * (L[0] + L[1] + L[2]);
  std::array<double, 3> lt{logSinh(L.tangent(0)), logSinh(L.tangent(1)), logSinh(L.tangent(2))};
  const double ls = logSinh(s);
  std::array<double, 3> angles{};
  for (int i = 0; i < 3; ++i) {
    const double logTan = 0.5 * (lt[(i + 1) % 3] + lt[(i + 2) % 3] - ls - lt[i]);
    angles[i] = 2.0 * std::atan(std::exp(logTan));
  }
  return angles;
}

double inradius(const TriangleLengths& L) {
  requireValid(L);
  // tanh^2 r = sinh(t_1) sinh(t_2) sinh(t_3) / sinh(s).
  const double s = 0.5 * (L[0] + L[1] + L[2]);
  const double logTanh2 =
      logSinh(L.tangent(0)) + logSinh(L.tangent(1)) + logSinh(L.tangent(2)) - logSinh(s);
  return std::atanh(std::exp(0.5 * logTanh2));
}

std::array<double, 3> centralHalfAngles(const TriangleLengths& L) {
  const double r = inradius(L);
  const double sr = std::sinh(r);
  std::array<double, 3> phi{};
  for (int i = 0; i < 3; ++i) phi[i] = std::atan(std::tanh(L.tangent(i)) / sr);
  return phi;
}

double triangleArea(const TriangleLengths& L) {
  const auto a = triangleAngles(L);
  return kPi - (a[0] + a[1] + a[2]);
}

CanonicalTriangle canonicalPlacement(const TriangleLengths& L) {
  requireValid(L);
  CanonicalTriangle out;
  out.inradius = inradius(L);
  out.incenter = PointH2{0.0, 1.0};
  const auto phi = centralHalfAngles(L);
  const double coshR = std::cosh(out.inradius);

  auto pointAt = [](double psi, double dist) {
    return Isometry::rotationAtBase(psi).apply(PointH2{0.0, std::exp(dist)});
  };

  // Walking counterclockwise from the ray to v1: each vertex ray is flanked
  // by two tangency radii at its half-angle.
  double psi = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double dist = std::acosh(coshR * std::cosh(L.tangent(k)));
    out.vertices[k] = pointAt(psi, dist);
    psi += phi[k];
    // Tangency point between v[k] and v[k+1] lies on the side opposite v[k+2].
    out.tangency[(k + 2) % 3] = pointAt(psi, out.inradius);
    psi += phi[(k + 1) % 3];
    out.centralAngles[k] = phi[k] + phi[(k + 1) % 3];
  }
  return out;
}

double arcLengthInTriangle(const TriangleLengths& L, BoundaryPoint p, BoundaryPoint q) {
  requireValid(L);
  auto checkPoint = [](const BoundaryPoint& b) {
    if (b.side < 0 || b.side > 2 || !(b.t >= 0.0 && b.t <= 1.0))
      throw DomainError("boundary point outside the triangle boundary");
  };
  checkPoint(p);
  checkPoint(q);

  if (p.side == q.side) return std::abs(p.t - q.t) * L[p.side];
  if (q.side == (p.side + 2) % 3) std::swap(p, q);

  // Now q lies on the side following p's; they share vertex v[p.side + 2].
  // Law of cosines at that vertex, rearranged as
  // sinh^2(d/2) = sinh^2((A - B)/2) + sinh A sinh B sin^2(gamma/2).
  const int i = p.side, j = q.side;
  const double A = (1.0 - p.t) * L[i];
  const double B = q.t * L[j];
  const double logSin2 = logSinh(L.tangent(i)) + logSinh(L.tangent(j)) - logSinh(L[i]) -
                         logSinh(L[j]); // sin^2 of half the angle between the sides
  const double h = std::sinh(0.5 * (A - B));
  double cross = 0.0;
  if (A > 0.0 && B > 0.0) cross = std::exp(logSinh(A) + logSinh(B) + logSin2);
  return 2.0 * std::asinh(std::sqrt(h * h + cross));
}

double angleOfParallelism(double d) {
  if (!(d >= 0.0)) throw DomainError("angle of parallelism needs d >= 0");
  if (d > 20.0) {
    const double e = std::exp(-d);
    return std::asin(2.0 * e / (1.0 + e * e));
  }
  return std::asin(clampUnit(1.0 / std::cosh(d)));
}

double footOffsetDistance(double r, double x, double theta, double y) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  if (!(theta > -kPi && theta < kPi)) throw DomainError("angle must lie in (-pi, pi)");
  const double cr = std::cosh(r), sr = std::sinh(r);
  // A on the positive x-axis; its left normal is +y.
  const Minkowski p{std::cosh(x) * cr, std::cosh(x) * sr, std::sinh(x)};
  const double ct = std::cos(theta), st = std::sin(theta);
  const Minkowski q{std::cosh(y) * cr, std::cosh(y) * sr * ct - std::sinh(y) * st,
                    std::cosh(y) * sr * st + std::sinh(y) * ct};
  const Minkowski diff{p.t - q.t, p.x - q.x, p.y - q.y};
  const double n2 = std::max(0.0, minkowskiNorm2(diff));
  return 2.0 * std::asinh(0.5 * std::sqrt(n2));
}

} // namespace teich
