#include "teich/cli.hpp"

#include "teich/cone_metric.hpp"
#include "teich/cusped.hpp"
#include "teich/deformations.hpp"
#include "teich/errors.hpp"
#include "teich/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace teich {

namespace {

struct Options {
  std::string triPath, dataPath, curvesPath, outPath;
  std::string from = "edges", to = "sr", mode = "per";
  double t = 0.0, t0 = 0.0, t1 = 1.0;
  int steps = 2, edge = 0, vertex = 0, n = 1;
  bool fromMetric = false;
};

std::string num(double v) { return formatNumber(v); }

// Writes to --out when given, otherwise to the command's stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.outPath.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.outPath, std::ios::binary);
  if (!f) throw FormatError("cannot write '" + o.outPath + "'");
  f << text;
}

std::vector<NamedCurve> loadCurves(const Options& o, const Triangulation& tri) {
  if (o.curvesPath.empty()) return {};
  return io::parseCurves(tri, io::readJsonFile(o.curvesPath));
}

void cmdValidate(const Options& o, std::ostream& out) {
  const auto tri = io::parseTriangulation(io::readJsonFile(o.triPath));
  out << "V=" << tri.numVertices() << " E=" << tri.numEdges() << " F=" << tri.numFaces()
      << " g=" << tri.genus() << " n=" << tri.numMarked() << '\n';
  for (int v = 0; v < tri.numVertices(); ++v)
    out << "vertex " << v + 1 << " faces=" << tri.facesAt(v)
        << " bound=" << num(kPi * tri.facesAt(v)) << '\n';
}

void cmdCoords(const Options& o, std::ostream& out) {
  const auto tri = io::parseTriangulation(io::readJsonFile(o.triPath));
  const auto data = io::readJsonFile(o.dataPath);
  EdgeWeights w;
  if (o.from == "edges") {
    w = io::parseEdgeWeights(tri, data);
    validateAdmissible(tri, w);
  } else if (o.from == "sr") {
    w = reconstruct(tri, io::parseShearRadius(tri, data));
  } else {
    throw DomainError("--from must be edges or sr");
  }
  io::Json result;
  if (o.to == "edges") result = io::edgeWeightsJson(w);
  else if (o.to == "sr") result = io::shearRadiusJson(shearRadius(tri, w));
  else throw DomainError("--to must be edges or sr");
  emit(o, out, result.dump(2) + "\n");
}

ConeSurface loadSurface(const Options& o) {
  auto tri = io::parseTriangulation(io::readJsonFile(o.triPath));
  auto w = io::parseEdgeWeights(tri, io::readJsonFile(o.dataPath));
  return ConeSurface(std::move(tri), std::move(w));
}

void cmdAngles(const Options& o, std::ostream& out) {
  const auto x = loadSurface(o);
  const auto theta = coneAngles(x);
  std::ostringstream s;
  for (size_t v = 0; v < theta.size(); ++v) s << "theta_" << v + 1 << '=' << num(theta[v]) << '\n';
  s << "area=" << num(area(x)) << '\n';
  const bool collar = inCollarRegime(x);
  if (!collar) s << "warning: cone angle >= pi, curve lengths may not be realized by smooth geodesics\n";
  for (const auto& c : loadCurves(o, x.triangulation())) {
    const auto cls = translationLength(coneDeveloper(x).holonomy(c.curve));
    if (cls.type == IsometryType::Hyperbolic) s << "len_" << c.name << '=' << num(cls.length) << '\n';
    else s << "len_" << c.name << "=nan elliptic\n";
  }
  emit(o, out, s.str());
}

void cmdStretch(const Options& o, std::ostream& out) {
  const auto x = loadSurface(o);
  const auto y = stretch(x, parseStretchMode(o.mode), o.t);
  emit(o, out, io::edgeWeightsJson(y.lengths(), "edge_lengths").dump(2) + "\n");
}

void cmdRay(const Options& o, std::ostream& out) {
  const auto x = loadSurface(o);
  const auto table =
      sampleRay(x, parseStretchMode(o.mode), o.t0, o.t1, o.steps, loadCurves(o, x.triangulation()));
  std::ostringstream s;
  writeCsv(s, table);
  emit(o, out, s.str());
}

void cmdCusped(const Options& o, std::ostream& out) {
  auto tri = io::parseTriangulation(io::readJsonFile(o.triPath));
  const auto data = io::readJsonFile(o.dataPath);
  std::vector<double> shears;
  if (o.fromMetric || (io::hasEdgeWeights(data) && !data.contains("shears"))) {
    const ConeSurface x(tri, io::parseEdgeWeights(tri, data));
    shears = cuspedTarget(x);
  } else {
    shears = io::parseShears(tri, data);
  }
  const auto curves = loadCurves(o, tri);
  const CuspedSurface y(std::move(tri), std::move(shears));
  std::ostringstream s;
  for (const auto& c : curves) {
    const Isometry hol = cuspedHolonomy(y, c.curve);
    s << "len_" << c.name << '=' << num(cuspedLength(y, c.curve)) << " trace=" << num(std::abs(hol.trace()))
      << '\n';
  }
  emit(o, out, s.str());
}

void cmdFlip(const Options& o, std::ostream& out) {
  const auto x = loadSurface(o);
  const int e = o.edge - 1;
  if (e < 0 || e >= x.triangulation().numEdges())
    throw IndexError("edge " + std::to_string(o.edge) + " out of range");
  const auto r = geodesicFlip(x, e);
  io::Json j = io::toJson(r.surface.triangulation());
  j["edge_lengths"] = r.surface.lengths().w;
  emit(o, out, j.dump(2) + "\n");
}

void cmdMaxAngle(const Options& o, std::ostream& out) {
  const auto tri = io::parseTriangulation(io::readJsonFile(o.triPath));
  const int p = o.vertex - 1;
  const auto x = maxAngleSequence(tri, p, o.n);
  const double theta = coneAngles(x)[p];
  const double bound = kPi * tri.facesAt(p);
  out << "theta=" << num(theta) << " bound=" << num(bound) << " deficit=" << num(bound - theta) << '\n';
}

} // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cone-surface geometry on triangulated surfaces", "teich"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check a triangulation and print its counts");
  validate->add_option("triangulation", o.triPath)->required();

  auto* coords = app.add_subcommand("coords", "Convert between edge weights and shear-radius coordinates");
  coords->add_option("triangulation", o.triPath)->required();
  coords->add_option("data", o.dataPath)->required();
  coords->add_option("--from", o.from, "edges | sr");
  coords->add_option("--to", o.to, "edges | sr");
  coords->add_option("--out", o.outPath);

  auto* angles = app.add_subcommand("angles", "Cone angles, area and optional curve lengths");
  angles->add_option("triangulation", o.triPath)->required();
  angles->add_option("metric", o.dataPath)->required();
  angles->add_option("--curves", o.curvesPath);
  angles->add_option("--out", o.outPath);

  auto* stretchCmd = app.add_subcommand("stretch", "Apply a peripheral or interior stretch");
  stretchCmd->add_option("triangulation", o.triPath)->required();
  stretchCmd->add_option("metric", o.dataPath)->required();
  stretchCmd->add_option("--mode", o.mode, "per | int");
  stretchCmd->add_option("--t", o.t)->required();
  stretchCmd->add_option("--out", o.outPath);

  auto* ray = app.add_subcommand("ray", "Sample a stretch ray as CSV");
  ray->add_option("triangulation", o.triPath)->required();
  ray->add_option("metric", o.dataPath)->required();
  ray->add_option("--mode", o.mode, "per | int");
  ray->add_option("--t0", o.t0);
  ray->add_option("--t1", o.t1);
  ray->add_option("--steps", o.steps);
  ray->add_option("--curves", o.curvesPath);
  ray->add_option("--out", o.outPath);

  auto* cusped = app.add_subcommand("cusped", "Curve lengths on the cusped surface with given shears");
  cusped->add_option("triangulation", o.triPath)->required();
  cusped->add_option("shears", o.dataPath, "shear file, or a metric file with --from-metric")->required();
  cusped->add_option("--curves", o.curvesPath)->required();
  cusped->add_flag("--from-metric", o.fromMetric, "use the shears of a cone metric");
  cusped->add_option("--out", o.outPath);

  auto* flipCmd = app.add_subcommand("flip", "Geodesic flip of one edge");
  flipCmd->add_option("triangulation", o.triPath)->required();
  flipCmd->add_option("metric", o.dataPath)->required();
  flipCmd->add_option("--edge", o.edge, "1-based edge index")->required();
  flipCmd->add_option("--out", o.outPath);

  auto* maxangle = app.add_subcommand("maxangle", "Cone angle of the maximal-angle sequence");
  maxangle->add_option("triangulation", o.triPath)->required();
  maxangle->add_option("--vertex", o.vertex, "1-based vertex index")->required();
  maxangle->add_option("--n", o.n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ERROR UsageError: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*validate) cmdValidate(o, out);
    else if (*coords) cmdCoords(o, out);
    else if (*angles) cmdAngles(o, out);
    else if (*stretchCmd) cmdStretch(o, out);
    else if (*ray) cmdRay(o, out);
    else if (*cusped) cmdCusped(o, out);
    else if (*flipCmd) cmdFlip(o, out);
    else if (*maxangle) cmdMaxAngle(o, out);
  } catch (const Error& e) {
    err << "ERROR " << e.what() << '\n';
    return e.exitCode();
  } catch (const std::exception& e) {
    err << "ERROR NumericError: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

} // namespace teich
