#include "teich/deformations.hpp"

#include "teich/errors.hpp"

#include <cmath>
#include <cstdio>

namespace teich {

StretchMode parseStretchMode(const std::string& s) {
  if (s == "per" || s == "peripheral") return StretchMode::Peripheral;
  if (s == "int" || s == "interior") return StretchMode::Interior;
  throw DomainError("unknown stretch mode '" + s + "' (expected per or int)");
}

ConeSurface stretch(const ConeSurface& x, StretchMode mode, double t) {
  const auto& tri = x.triangulation();
  const auto d = decompose(tri, x.lengths());
  const double scale = std::exp(t);
  auto w = mode == StretchMode::Peripheral ? recompose(tri, d.interior, d.radii, scale, 1.0)
                                           : recompose(tri, d.interior, d.radii, 1.0, scale);
  return ConeSurface(tri, std::move(w));
}

ConeSurface stretchViaShearRadius(const ConeSurface& x, StretchMode mode, double t) {
  auto sr = shearRadiusCoords(x);
  const double scale = std::exp(t);
  auto& scaled = mode == StretchMode::Peripheral ? sr.radii : sr.shears;
  for (double& v : scaled) v *= scale;
  return fromShearRadius(x.triangulation(), sr);
}

ConeSurface circlePackedLimit(const ConeSurface& x) {
  const auto& tri = x.triangulation();
  const auto d = decompose(tri, x.lengths());
  return ConeSurface(tri, recompose(tri, d.interior, d.radii, 1.0, 0.0));
}

std::vector<double> cuspedTarget(const ConeSurface& x) { return shearMap(x.triangulation(), x.lengths()); }

RayTable sampleRay(const ConeSurface& x, StretchMode mode, double t0, double t1, int steps,
                   const std::vector<NamedCurve>& curves) {
  if (!(t0 < t1)) throw DomainError("ray needs t0 < t1");
  if (steps < 2) throw DomainError("ray needs at least 2 steps");

  RayTable table;
  for (const auto& c : curves) table.curveNames.push_back(c.name);
  std::vector<CurveClass> normalized;
  for (const auto& c : curves) normalized.push_back(validateCurve(x.triangulation(), c.curve));

  table.rows.resize(steps);
  for (int k = 0; k < steps; ++k) {
    RayRow& row = table.rows[k];
    row.t = k == steps - 1 ? t1 : t0 + (t1 - t0) * k / (steps - 1);
    const ConeSurface xt = stretch(x, mode, row.t);
    row.lengths = xt.lengths().w;
    row.angles = coneAngles(xt);
    const auto sr = shearRadiusCoords(xt);
    row.shears = sr.shears;
    row.radii = sr.radii;
    if (!inCollarRegime(xt)) row.flags.push_back("angle_ge_pi");
    if (normalized.empty()) continue;
    const auto dev = coneDeveloper(xt);
    for (size_t i = 0; i < normalized.size(); ++i) {
      const auto cls = translationLength(dev.holonomy(normalized[i]));
      if (cls.type == IsometryType::Hyperbolic) {
        row.curveLengths.emplace_back(cls.length);
      } else {
        row.curveLengths.emplace_back(std::nullopt);
        row.flags.push_back("elliptic:" + table.curveNames[i]);
      }
    }
  }
  return table;
}

std::string formatNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void writeCsv(std::ostream& out, const RayTable& table) {
  if (table.rows.empty()) return;
  const auto& first = table.rows.front();
  out << "t";
  for (size_t i = 0; i < first.lengths.size(); ++i) out << ",L_" << i + 1;
  for (size_t i = 0; i < first.angles.size(); ++i) out << ",theta_" << i + 1;
  for (size_t i = 0; i < first.shears.size(); ++i) out << ",s_" << i + 1;
  for (size_t i = 0; i < first.radii.size(); ++i) out << ",r_" << i + 1;
  for (const auto& name : table.curveNames) out << ",len_" << name;
  out << ",flags\n";

  for (const auto& row : table.rows) {
    out << formatNumber(row.t);
    for (const auto* column : {&row.lengths, &row.angles, &row.shears, &row.radii})
      for (double v : *column) out << ',' << formatNumber(v);
    for (const auto& len : row.curveLengths) out << ',' << (len ? formatNumber(*len) : "nan");
    out << ',';
    for (size_t i = 0; i < row.flags.size(); ++i) out << (i ? ";" : "") << row.flags[i];
    out << '\n';
  }
}

} // namespace teich
