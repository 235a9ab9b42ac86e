#include "teich/io.hpp"

#include "teich/errors.hpp"

#include <cmath>
#include <fstream>

namespace teich::io {

namespace {

std::vector<double> numberArray(const Json& j, const char* key, size_t expected) {
  if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
  const Json& arr = j.at(key);
  if (!arr.is_array()) throw FormatError(std::string("'") + key + "' must be an array");
  if (arr.size() != expected)
    throw FormatError(std::string("'") + key + "' has " + std::to_string(arr.size()) +
                      " entries, expected " + std::to_string(expected));
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw FormatError(std::string("'") + key + "' contains a non-number");
    out.push_back(v.get<double>());
    if (!std::isfinite(out.back())) throw FormatError(std::string("'") + key + "' is not finite");
  }
  return out;
}

int integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return v.get<int>();
}

} // namespace

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void writeJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

Triangulation parseTriangulation(const Json& j) {
  if (!j.is_object() || !j.contains("faces") || !j.at("faces").is_array())
    throw FormatError("triangulation needs a 'faces' array");
  std::vector<FaceGluing> faces;
  for (const auto& f : j.at("faces")) {
    if (!f.is_array() || f.size() != 3) throw FormatError("every face needs exactly 3 entries");
    faces.push_back({integer(f[0], "face entry"), integer(f[1], "face entry"),
                     integer(f[2], "face entry")});
  }
  Triangulation tri = Triangulation::build(faces);
  if (j.contains("genus") && integer(j.at("genus"), "genus") != tri.genus())
    throw EulerError("declared genus " + std::to_string(j.at("genus").get<int>()) +
                     " but the gluing has genus " + std::to_string(tri.genus()));
  if (j.contains("marked") && integer(j.at("marked"), "marked") != tri.numMarked())
    throw EulerError("declared " + std::to_string(j.at("marked").get<int>()) +
                     " marked points but the gluing has " + std::to_string(tri.numMarked()));
  return tri;
}

Json toJson(const Triangulation& tri) {
  Json faces = Json::array();
  for (const auto& f : tri.gluing()) faces.push_back({f[0], f[1], f[2]});
  return Json{{"genus", tri.genus()}, {"marked", tri.numMarked()}, {"faces", faces}};
}

std::vector<NamedCurve> parseCurves(const Triangulation& tri, const Json& j) {
  if (!j.is_object() || !j.contains("curves") || !j.at("curves").is_array())
    throw FormatError("curves file needs a 'curves' array");
  std::vector<NamedCurve> out;
  for (const auto& c : j.at("curves")) {
    if (!c.contains("name") || !c.at("name").is_string()) throw FormatError("curve without a name");
    if (!c.contains("steps") || !c.at("steps").is_array())
      throw FormatError("curve '" + c.at("name").get<std::string>() + "' needs a 'steps' array");
    std::vector<CurveStep> steps;
    for (const auto& s : c.at("steps")) {
      if (!s.is_array() || s.size() < 2 || s.size() > 3)
        throw FormatError("a curve step is [edge, face] or [edge, face, side]");
      CurveStep step{integer(s[0], "step edge") - 1, integer(s[1], "step face") - 1, std::nullopt};
      if (s.size() == 3) step.side = integer(s[2], "step side") - 1;
      steps.push_back(step);
    }
    out.push_back({c.at("name").get<std::string>(), validateCurve(tri, steps)});
  }
  return out;
}

bool hasEdgeWeights(const Json& j) {
  return j.is_object() && (j.contains("edge_weights") || j.contains("edge_lengths"));
}

EdgeWeights parseEdgeWeights(const Triangulation& tri, const Json& j) {
  if (!j.is_object()) throw FormatError("weights file must be a JSON object");
  const char* key = j.contains("edge_lengths") ? "edge_lengths" : "edge_weights";
  return EdgeWeights{numberArray(j, key, tri.numEdges())};
}

ShearRadius parseShearRadius(const Triangulation& tri, const Json& j) {
  if (!j.is_object()) throw FormatError("coordinate file must be a JSON object");
  return ShearRadius{numberArray(j, "shears", tri.numEdges()),
                     numberArray(j, "radii", tri.numVertices())};
}

std::vector<double> parseShears(const Triangulation& tri, const Json& j) {
  if (!j.is_object()) throw FormatError("shear file must be a JSON object");
  return numberArray(j, "shears", tri.numEdges());
}

Json edgeWeightsJson(const EdgeWeights& w, const char* key) { return Json{{key, w.w}}; }

Json shearRadiusJson(const ShearRadius& sr) {
  return Json{{"shears", sr.shears}, {"radii", sr.radii}};
}

} // namespace teich::io
