#pragma once

#include "teich/deformations.hpp"
#include "teich/foliation.hpp"
#include "teich/triangulation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace teich::io {

using Json = nlohmann::json;

// Throws FormatError when the file is missing or not valid JSON.
Json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const Json& j);

// {"genus", "marked", "faces": [[+-e, +-e, +-e], ...]} with 1-based edges.
// Declared genus / marked counts are optional; a mismatch raises EulerError.
Triangulation parseTriangulation(const Json& j);
Json toJson(const Triangulation& tri);

// {"curves": [{"name", "steps": [[edge, face(, side)], ...]}]}, all 1-based.
std::vector<NamedCurve> parseCurves(const Triangulation& tri, const Json& j);

// {"edge_weights": [...]} or {"edge_lengths": [...]}.
EdgeWeights parseEdgeWeights(const Triangulation& tri, const Json& j);
bool hasEdgeWeights(const Json& j);
// {"shears": [...], "radii": [...]}.
ShearRadius parseShearRadius(const Triangulation& tri, const Json& j);
// {"shears": [...]}.
std::vector<double> parseShears(const Triangulation& tri, const Json& j);

Json edgeWeightsJson(const EdgeWeights& w, const char* key = "edge_weights");
Json shearRadiusJson(const ShearRadius& sr);

} // namespace teich::io
