#pragma once

// JSON serialization of configurations and DOT export.  The wire format is a
// single UTF-8 object with fixed key order:
//   { "version", "vertices", "rotation", "pairing", "labels", "regions" }
// Encoding is byte-stable: identical configurations serialize identically.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "curve_spectra/ribbon.hpp"

namespace curve_spectra {

struct ParseError : std::runtime_error {
  std::size_t byte;
  ParseError(std::size_t byte_, const std::string& what)
      : std::runtime_error(what), byte(byte_) {}
};

struct SchemaError : std::runtime_error {
  std::string field;
  explicit SchemaError(std::string field_)
      : std::runtime_error("missing or ill-typed field: " + field_), field(std::move(field_)) {}
};

using json = nlohmann::ordered_json;

inline json to_json(const Configuration& c) {
  json j;
  j["version"] = c.version;
  j["vertices"] = c.vertices;
  json rot = json::array();
  for (const auto& row : c.rotation) rot.push_back({row[0], row[1], row[2], row[3]});
  j["rotation"] = std::move(rot);
  j["pairing"] = c.pairing;
  json labels = json::array();
  for (Curve l : c.labels) labels.push_back(std::string(1, curve_char(l)));
  j["labels"] = std::move(labels);
  json regions = json::array();
  for (const auto& r : c.regions) {
    json jr;
    jr["cycles"] = r.cycles;
    jr["genus"] = r.genus;
    jr["punctures"] = r.punctures;
    regions.push_back(std::move(jr));
  }
  j["regions"] = std::move(regions);
  return j;
}

inline std::string encode(const Configuration& c) { return to_json(c).dump(); }

namespace detail {
inline const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(name);
  return *it;
}
inline int int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_integer()) throw SchemaError(name);
  return f.get<int>();
}
}  // namespace detail

inline Configuration from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("<root>");
  Configuration c;
  c.version = detail::int_field(j, "version");
  c.vertices = detail::int_field(j, "vertices");
  const json& rot = detail::field(j, "rotation");
  if (!rot.is_array()) throw SchemaError("rotation");
  for (const auto& row : rot) {
    if (!row.is_array() || row.size() != 4) throw SchemaError("rotation");
    std::array<int, 4> r{};
    for (int k = 0; k < 4; ++k) {
      if (!row[k].is_number_integer()) throw SchemaError("rotation");
      r[k] = row[k].get<int>();
    }
    c.rotation.push_back(r);
  }
  const json& pair = detail::field(j, "pairing");
  if (!pair.is_array()) throw SchemaError("pairing");
  for (const auto& p : pair) {
    if (!p.is_number_integer()) throw SchemaError("pairing");
    c.pairing.push_back(p.get<int>());
  }
  const json& labels = detail::field(j, "labels");
  if (!labels.is_array()) throw SchemaError("labels");
  for (const auto& l : labels) {
    if (!l.is_string()) throw SchemaError("labels");
    std::string s = l.get<std::string>();
    if (s == "A") c.labels.push_back(Curve::Alpha);
    else if (s == "B") c.labels.push_back(Curve::Beta);
    else throw SchemaError("labels");
  }
  const json& regions = detail::field(j, "regions");
  if (!regions.is_array()) throw SchemaError("regions");
  for (const auto& jr : regions) {
    if (!jr.is_object()) throw SchemaError("regions");
    RegionData r;
    const json& cyc = detail::field(jr, "cycles");
    if (!cyc.is_array()) throw SchemaError("cycles");
    for (const auto& f : cyc) {
      if (!f.is_number_integer()) throw SchemaError("cycles");
      r.cycles.push_back(f.get<int>());
    }
    std::sort(r.cycles.begin(), r.cycles.end());
    r.genus = detail::int_field(jr, "genus");
    r.punctures = detail::int_field(jr, "punctures");
    c.regions.push_back(std::move(r));
  }
  return c;
}

inline Configuration decode(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  return from_json(j);
}

inline void save_configuration(const std::string& path, const Configuration& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << encode(c);
}

inline Configuration load_configuration(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return decode(ss.str());
}

// One node per vertex, one edge per pairing orbit colored by curve label,
// face and region structure as comments.
inline std::string to_dot(const Configuration& c) {
  std::ostringstream out;
  out << "graph configuration {\n";
  if (structurally_valid(c)) {
    const DartIndex ix = build_index(c);
    const FaceSet fs = trace_faces(c, ix);
    for (int f = 0; f < fs.count(); ++f) {
      out << "  // face " << f << ": darts [";
      for (std::size_t i = 0; i < fs.darts[f].size(); ++i)
        out << (i ? " " : "") << fs.darts[f][i];
      out << "]\n";
    }
    for (std::size_t r = 0; r < c.regions.size(); ++r) {
      const auto& reg = c.regions[r];
      out << "  // region " << r << ": genus " << reg.genus << ", punctures "
          << reg.punctures << ", cycles [";
      for (std::size_t i = 0; i < reg.cycles.size(); ++i)
        out << (i ? " " : "") << reg.cycles[i];
      out << "]\n";
    }
    for (int v = 0; v < c.vertices; ++v) out << "  v" << v << ";\n";
    for (std::size_t e = 0; e < ix.edges.size(); ++e) {
      auto [d, p] = ix.edges[e];
      out << "  v" << ix.vertex_of[d] << " -- v" << ix.vertex_of[p] << " [color="
          << (c.labels[e] == Curve::Alpha ? "red" : "blue") << ", label=\"e" << e
          << "\"];\n";
    }
  } else {
    out << "  // structurally invalid configuration\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace curve_spectra
