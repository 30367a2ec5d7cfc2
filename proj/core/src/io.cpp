#include "circdiff/io.hpp"

#include <json.hpp>

#include "circdiff/errors.hpp"

namespace circdiff {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<double> coefficient_array(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number()) throw ParseError(std::string("\"") + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

double number(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number()) throw ParseError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

json object(std::string_view text) {
  json doc = parse(text);
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  return doc;
}

}  // namespace

ProjectiveStructure structure_from_name(std::string_view name) {
  if (name == "torus") return ProjectiveStructure::torus();
  if (name == "line") return ProjectiveStructure::line();
  throw InvalidInput("unknown projective structure '" + std::string(name) +
                     "' (expected torus or line)");
}

CircleDiffeo diffeo_from_json(std::string_view text) {
  const json doc = object(text);
  if (doc.contains("mobius")) {
    const std::vector<double> m = coefficient_array(doc, "mobius");
    if (m.size() != 4) throw ParseError("\"mobius\" must hold four entries [a, b, c, d]");
    std::string structure = "torus";
    if (doc.contains("structure")) {
      if (!doc.at("structure").is_string()) throw ParseError("\"structure\" must be a string");
      structure = doc.at("structure").get<std::string>();
    }
    return mobius_lift(MobiusElement(m[0], m[1], m[2], m[3]), structure_from_name(structure));
  }
  return CircleDiffeo(number(doc, "shift", 0.0), coefficient_array(doc, "cos"),
                      coefficient_array(doc, "sin"));
}

std::string diffeo_to_json(const CircleDiffeo& d) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["shift"] = d.shift();
  doc["cos"] = d.cos_coeffs();
  doc["sin"] = d.sin_coeffs();
  return doc.dump();
}

VectorFieldS1 field_from_json(std::string_view text) {
  const json doc = object(text);
  return VectorFieldS1(number(doc, "mean", 0.0), coefficient_array(doc, "cos"),
                       coefficient_array(doc, "sin"));
}

std::string field_to_json(const VectorFieldS1& xi) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["mean"] = xi.mean();
  doc["cos"] = xi.cos_coeffs();
  doc["sin"] = xi.sin_coeffs();
  return doc.dump();
}

std::string orbit_point_to_json(const OrbitPoint& p) {
  const FourierSeries s = fourier_analyze(p.q.samples());
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["charge"] = p.charge;
  doc["grid"] = p.q.size();
  doc["mean"] = s.mean;
  doc["cos"] = s.cos;
  doc["sin"] = s.sin;
  doc["nyquist"] = s.nyquist;
  return doc.dump();
}

OrbitPoint orbit_point_from_json(std::string_view text) {
  const json doc = object(text);
  FourierSeries s;
  s.mean = number(doc, "mean", 0.0);
  s.cos = coefficient_array(doc, "cos");
  s.sin = coefficient_array(doc, "sin");
  s.nyquist = number(doc, "nyquist", 0.0);
  if (s.cos.size() != s.sin.size()) throw ParseError("\"cos\" and \"sin\" lengths differ");
  const double grid = number(doc, "grid", static_cast<double>(kDefaultGridSize));
  if (grid < 8 || grid != static_cast<double>(static_cast<std::size_t>(grid))) {
    throw ParseError("\"grid\" must be an integer >= 8");
  }
  return {QuadraticDifferential(static_cast<std::size_t>(grid),
                                [s](double t) { return s.eval(t); }),
          number(doc, "charge", 0.0)};
}

}  // namespace circdiff
