#pragma once

#include <map>
#include <string>

#include "ftpoly/polyhedron.hpp"

namespace ftpoly {

enum class ExportFormat { kOff, kObj, kJson };

// "off", "obj" or "json"; anything else throws UsageError.
ExportFormat parse_export_format(const std::string& text);

using SceneMetadata = std::map<std::string, std::string>;

inline constexpr int kDefaultPrecision = 12;

// Decimal rendering with `precision` significant digits.
std::string format_decimal(double value, int precision);

// Serializes the polyhedron. Vertices are written in canonical order and
// indexed from that order; output is a pure function of the inputs.
//
// OFF: header counts are vertices, faces (all of them) and edges. A closed
// face is "k i1 ... ik". A truncated face is preceded by the comment line
// "# truncated <face number>" and written as the closed walk there and back,
// "2k-2 i1 ... ik i(k-1) ... i2", so viewers draw it as a degenerate
// polygon over the polyline.
// OBJ: "f" records for closed faces, "l" polylines for truncated ones,
// 1-based indices; metadata as leading comments.
// JSON: exact coordinates as strings plus rounded doubles, edges as index
// pairs, faces with closed/truncated flags, and the metadata map.
std::string export_mesh(const Polyhedron& p, ExportFormat format, int precision = kDefaultPrecision,
                        const SceneMetadata& metadata = {});

struct ImportedScene {
  Polyhedron polyhedron;
  SceneMetadata metadata;
};

// Reads back the JSON form from exact strings. Throws ParseError.
ImportedScene import_json(const std::string& text);

}  // namespace ftpoly
