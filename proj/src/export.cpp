#include "ftpoly/export.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "ftpoly/errors.hpp"

namespace ftpoly {

using nlohmann::json;

ExportFormat parse_export_format(const std::string& text) {
  if (text == "off") return ExportFormat::kOff;
  if (text == "obj") return ExportFormat::kObj;
  if (text == "json") return ExportFormat::kJson;
  throw UsageError("unknown export format '" + text + "' (expected off, obj or json)");
}

std::string format_decimal(double value, int precision) {
  if (precision < 1 || precision > 17) throw UsageError("precision must be between 1 and 17");
  if (value == 0.0) value = 0.0;  // no negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

namespace {

std::vector<std::size_t> face_indices(const Polyhedron& p, const Face& f) {
  std::vector<std::size_t> out;
  for (const auto& v : f.path) out.push_back(*p.vertex_index(v));
  return out;
}

std::string coords(const Vec3Q& v, int precision) {
  return format_decimal(v[0].to_double(), precision) + " " + format_decimal(v[1].to_double(), precision) + " " +
         format_decimal(v[2].to_double(), precision);
}

std::string to_off(const Polyhedron& p, int precision, const SceneMetadata& meta) {
  std::ostringstream out;
  out << "OFF\n";
  for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
  out << p.vertices().size() << " " << p.faces().size() << " " << p.edges().size() << "\n";
  for (const auto& v : p.vertices()) out << coords(v, precision) << "\n";
  for (std::size_t f = 0; f < p.faces().size(); ++f) {
    const Face& face = p.faces()[f];
    auto idx = face_indices(p, face);
    if (!face.closed) {
      out << "# truncated " << f << "\n";
      for (std::size_t k = idx.size() - 1; k-- > 1;) idx.push_back(idx[k]);
    }
    out << idx.size();
    for (auto i : idx) out << " " << i;
    out << "\n";
  }
  return out.str();
}

std::string to_obj(const Polyhedron& p, int precision, const SceneMetadata& meta) {
  std::ostringstream out;
  for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
  for (const auto& v : p.vertices()) out << "v " << coords(v, precision) << "\n";
  for (const auto& face : p.faces()) {
    out << (face.closed ? "f" : "l");
    for (auto i : face_indices(p, face)) out << " " << i + 1;
    out << "\n";
  }
  return out.str();
}

std::string to_json(const Polyhedron& p, int precision, const SceneMetadata& meta) {
  json doc;
  doc["format"] = "ftpoly-scene";
  doc["version"] = 1;
  doc["metadata"] = meta;
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json approx = json::array();
    for (std::size_t i = 0; i < 3; ++i) approx.push_back(std::stod(format_decimal(v[i].to_double(), precision)));
    verts.push_back({{"exact", {v[0].to_string(), v[1].to_string(), v[2].to_string()}}, {"approx", approx}});
  }
  doc["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& e : p.edges()) edges.push_back({*p.vertex_index(e.a), *p.vertex_index(e.b)});
  doc["edges"] = std::move(edges);
  json faces = json::array();
  for (const auto& f : p.faces()) {
    faces.push_back({{"path", face_indices(p, f)}, {"closed", f.closed}, {"truncated", f.truncated}});
  }
  doc["faces"] = std::move(faces);
  return doc.dump(1) + "\n";
}

}  // namespace

std::string export_mesh(const Polyhedron& p, ExportFormat format, int precision, const SceneMetadata& metadata) {
  if (p.vertices().empty()) throw InvariantError("cannot export an empty polyhedron");
  format_decimal(0.0, precision);  // validates precision
  switch (format) {
    case ExportFormat::kOff: return to_off(p, precision, metadata);
    case ExportFormat::kObj: return to_obj(p, precision, metadata);
    case ExportFormat::kJson: return to_json(p, precision, metadata);
  }
  throw UsageError("unknown export format");
}

ImportedScene import_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != "ftpoly-scene") throw ParseError("not an ftpoly scene");
    std::vector<Vec3Q> verts;
    for (const auto& v : doc.at("vertices")) {
      const auto& ex = v.at("exact");
      verts.emplace_back(QSqrt3::parse(ex.at(0).get<std::string>()), QSqrt3::parse(ex.at(1).get<std::string>()),
                         QSqrt3::parse(ex.at(2).get<std::string>()));
    }
    auto vertex = [&](std::size_t i) -> const Vec3Q& {
      if (i >= verts.size()) throw ParseError("vertex index " + std::to_string(i) + " out of range");
      return verts[i];
    };
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) edges.emplace_back(vertex(e.at(0).get<std::size_t>()), vertex(e.at(1).get<std::size_t>()));
    std::vector<Face> faces;
    for (const auto& f : doc.at("faces")) {
      Face face;
      for (const auto& i : f.at("path")) face.path.push_back(vertex(i.get<std::size_t>()));
      face.closed = f.at("closed").get<bool>();
      face.truncated = f.at("truncated").get<bool>();
      faces.push_back(std::move(face));
    }
    ImportedScene scene{Polyhedron(std::move(verts), std::move(edges), std::move(faces)),
                        doc.at("metadata").get<SceneMetadata>()};
    return scene;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed scene JSON: ") + e.what());
  }
}

}  // namespace ftpoly
