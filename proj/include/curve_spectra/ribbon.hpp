#pragma once

// Two essential simple closed curves on an oriented punctured surface, encoded
// as a labeled 4-valent rotation system plus a table of complement regions.
// Every vertex is a transversal crossing of the two curves, so the four darts
// at a vertex alternate ALPHA, BETA in rotation order.  Faces are the orbits
// of (edge_pairing . rotation); that orientation convention is fixed here and
// used everywhere else.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace curve_spectra {

enum class Curve : std::uint8_t { Alpha = 0, Beta = 1 };

inline Curve other(Curve c) { return c == Curve::Alpha ? Curve::Beta : Curve::Alpha; }
inline char curve_char(Curve c) { return c == Curve::Alpha ? 'A' : 'B'; }

struct SurfaceType {
  int genus = 0;
  int punctures = 0;

  // no essential simple closed curves at all
  bool is_simple() const { return genus == 0 && punctures <= 3; }
  // no two disjoint essential simple closed curves
  bool is_sporadic() const {
    return (genus == 0 && punctures <= 4) || (genus == 1 && punctures <= 1);
  }
  int chi() const { return 2 - 2 * genus - punctures; }
  bool operator==(const SurfaceType&) const = default;
};

// One complement component of the curve pair: a surface of type
// (genus, boundary_count, punctures) attached to the listed face cycles.
struct RegionData {
  int genus = 0;
  int punctures = 0;
  std::vector<int> cycles;  // face ids, sorted ascending

  int boundary_count() const { return static_cast<int>(cycles.size()); }
  int chi() const { return 2 - 2 * genus - boundary_count() - punctures; }
  bool is_simple() const { return genus == 0 && boundary_count() + punctures <= 3; }
  bool operator==(const RegionData&) const = default;
};

struct Configuration {
  int version = 1;
  int vertices = 0;
  std::vector<std::array<int, 4>> rotation;  // counterclockwise dart order per vertex
  std::vector<int> pairing;                  // fixed-point-free involution on darts
  std::vector<Curve> labels;                 // per edge; edges indexed by min dart id
  std::vector<RegionData> regions;

  int dart_count() const { return 4 * vertices; }
  bool operator==(const Configuration&) const = default;
};

struct NonOrientableOrInconsistent : std::runtime_error {
  explicit NonOrientableOrInconsistent(const std::string& what)
      : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + what);
}
}  // namespace detail

// Dart-level lookups derived from a structurally sound configuration.
struct DartIndex {
  std::vector<int> vertex_of;               // dart -> vertex
  std::vector<int> pos_of;                  // dart -> slot in its rotation row
  std::vector<int> edge_of;                 // dart -> edge id
  std::vector<std::pair<int, int>> edges;   // edge id -> (min dart, partner)

  int sigma(const Configuration& c, int d) const {
    const auto& row = c.rotation[vertex_of[d]];
    return row[(pos_of[d] + 1) & 3];
  }
  int sigma_inv(const Configuration& c, int d) const {
    const auto& row = c.rotation[vertex_of[d]];
    return row[(pos_of[d] + 3) & 3];
  }
  Curve label(const Configuration& c, int d) const { return c.labels[edge_of[d]]; }
};

// True when sizes, the rotation partition and the pairing involution are sound
// enough to build a DartIndex.  Semantic checks live in validate().
inline bool structurally_valid(const Configuration& c) {
  const int nd = c.dart_count();
  if (c.vertices < 1) return false;
  if (static_cast<int>(c.rotation.size()) != c.vertices) return false;
  if (static_cast<int>(c.pairing.size()) != nd) return false;
  std::vector<char> seen(nd, 0);
  for (const auto& row : c.rotation)
    for (int d : row) {
      if (d < 0 || d >= nd || seen[d]) return false;
      seen[d] = 1;
    }
  for (int d = 0; d < nd; ++d) {
    int p = c.pairing[d];
    if (p < 0 || p >= nd || p == d || c.pairing[p] != d) return false;
  }
  if (static_cast<int>(c.labels.size()) != 2 * c.vertices) return false;
  return true;
}

inline DartIndex build_index(const Configuration& c) {
  detail::require(structurally_valid(c), "build_index on structurally invalid configuration");
  const int nd = c.dart_count();
  DartIndex ix;
  ix.vertex_of.assign(nd, -1);
  ix.pos_of.assign(nd, -1);
  for (int v = 0; v < c.vertices; ++v)
    for (int j = 0; j < 4; ++j) {
      ix.vertex_of[c.rotation[v][j]] = v;
      ix.pos_of[c.rotation[v][j]] = j;
    }
  ix.edge_of.assign(nd, -1);
  ix.edges.reserve(2 * c.vertices);
  for (int d = 0; d < nd; ++d) {
    if (d < c.pairing[d]) {
      int e = static_cast<int>(ix.edges.size());
      ix.edges.emplace_back(d, c.pairing[d]);
      ix.edge_of[d] = e;
      ix.edge_of[c.pairing[d]] = e;
    }
  }
  return ix;
}

// Face cycles: orbits of d -> pairing[sigma(d)].  Ids are assigned by the
// smallest dart in the orbit, ascending.
struct FaceSet {
  std::vector<int> face_of;             // dart -> face id
  std::vector<std::vector<int>> darts;  // face id -> orbit, starting at min dart
  int count() const { return static_cast<int>(darts.size()); }
  int length(int f) const { return static_cast<int>(darts[f].size()); }
};

inline FaceSet trace_faces(const Configuration& c, const DartIndex& ix) {
  const int nd = c.dart_count();
  FaceSet fs;
  fs.face_of.assign(nd, -1);
  for (int start = 0; start < nd; ++start) {
    if (fs.face_of[start] != -1) continue;
    std::vector<int> orbit;
    int d = start;
    do {
      fs.face_of[d] = static_cast<int>(fs.darts.size());
      orbit.push_back(d);
      d = c.pairing[ix.sigma(c, d)];
    } while (d != start);
    fs.darts.push_back(std::move(orbit));
  }
  return fs;
}

// Number of maximal same-curve runs around the face (cyclically).  In a valid
// configuration consecutive face sides always alternate curves, so this equals
// the face length; it is kept general for diagnostics on raw input.
inline int side_profile(const Configuration& c, const DartIndex& ix,
                        const std::vector<int>& orbit) {
  const int n = static_cast<int>(orbit.size());
  if (n == 1) return 1;
  int runs = 0;
  for (int i = 0; i < n; ++i) {
    Curve a = ix.label(c, orbit[i]);
    Curve b = ix.label(c, orbit[(i + 1) % n]);
    if (a != b) ++runs;
  }
  return runs == 0 ? 1 : runs;
}

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string message) {
    violations.push_back({std::move(code), std::move(message)});
  }
  std::string to_string() const {
    std::string s;
    for (const auto& v : violations) {
      s += v.code;
      s += ": ";
      s += v.message;
      s += '\n';
    }
    return s;
  }
};

// Orbits of the directed curve traversal d -> sigma^2(pairing[d]) restricted to
// darts of one curve.  A single simple closed curve yields exactly two orbits
// (one per direction), each of length V.
inline int curve_orbit_count(const Configuration& c, const DartIndex& ix, Curve which) {
  const int nd = c.dart_count();
  std::vector<char> seen(nd, 0);
  int orbits = 0;
  for (int start = 0; start < nd; ++start) {
    if (seen[start] || ix.label(c, start) != which) continue;
    ++orbits;
    int d = start;
    do {
      seen[d] = 1;
      int arrive = c.pairing[d];
      d = ix.sigma(c, ix.sigma(c, arrive));
    } while (d != start);
  }
  return orbits;
}

// Solves 2 - 2g - n = -V + sum_R chi(R).  Throws when no non-negative integer
// genus fits.
inline SurfaceType surface_type(const Configuration& c) {
  int chi = -c.vertices;
  int n = 0;
  for (const auto& r : c.regions) {
    chi += r.chi();
    n += r.punctures;
  }
  const int twice_genus = 2 - n - chi;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw NonOrientableOrInconsistent(
        "euler characteristic bookkeeping has no non-negative integer genus (chi=" +
        std::to_string(chi) + ", punctures=" + std::to_string(n) + ")");
  return SurfaceType{twice_genus / 2, n};
}

// Checks every Configuration invariant and reports all violations found.
// A sporadic (or simple) ambient surface is a fatal error unless
// allow_sporadic is set (subsurface searches use that mode internally).
inline ValidationReport validate(const Configuration& c, bool allow_sporadic = false) {
  ValidationReport rep;
  if (c.vertices < 1) {
    rep.add("vertices", "configuration must have at least one crossing (V >= 1)");
    return rep;
  }
  const int nd = c.dart_count();
  if (static_cast<int>(c.rotation.size()) != c.vertices)
    rep.add("rotation", "expected " + std::to_string(c.vertices) + " rotation rows, got " +
                            std::to_string(c.rotation.size()));
  if (static_cast<int>(c.pairing.size()) != nd)
    rep.add("pairing", "expected " + std::to_string(nd) + " pairing entries, got " +
                           std::to_string(c.pairing.size()));
  if (!rep.ok()) return rep;

  std::vector<int> seen(nd, 0);
  for (int v = 0; v < c.vertices; ++v)
    for (int d : c.rotation[v]) {
      if (d < 0 || d >= nd) {
        rep.add("rotation", "dart " + std::to_string(d) + " out of range at vertex " +
                                std::to_string(v));
        return rep;
      }
      if (seen[d]++)
        rep.add("rotation", "dart " + std::to_string(d) + " appears in two rotation slots");
    }
  for (int d = 0; d < nd; ++d) {
    int p = c.pairing[d];
    if (p < 0 || p >= nd) {
      rep.add("pairing", "pairing[" + std::to_string(d) + "] out of range");
      return rep;
    }
    if (p == d) rep.add("pairing", "pairing has fixed point at dart " + std::to_string(d));
    else if (c.pairing[p] != d)
      rep.add("pairing", "pairing is not an involution at dart " + std::to_string(d));
  }
  if (static_cast<int>(c.labels.size()) != 2 * c.vertices)
    rep.add("labels", "expected " + std::to_string(2 * c.vertices) + " edge labels, got " +
                          std::to_string(c.labels.size()));
  if (!rep.ok()) return rep;

  const DartIndex ix = build_index(c);

  for (int v = 0; v < c.vertices; ++v)
    for (int j = 0; j < 4; ++j) {
      Curve a = ix.label(c, c.rotation[v][j]);
      Curve b = ix.label(c, c.rotation[v][(j + 1) & 3]);
      if (a == b) {
        rep.add("alternation", "darts at vertex " + std::to_string(v) +
                                   " do not alternate ALPHA/BETA in rotation order");
        break;
      }
    }
  if (!rep.ok()) return rep;

  if (curve_orbit_count(c, ix, Curve::Alpha) != 2)
    rep.add("curve", "ALPHA edges do not form a single closed curve");
  if (curve_orbit_count(c, ix, Curve::Beta) != 2)
    rep.add("curve", "BETA edges do not form a single closed curve");
  if (!rep.ok()) return rep;

  const FaceSet fs = trace_faces(c, ix);
  std::vector<int> owner(fs.count(), -1);
  for (int r = 0; r < static_cast<int>(c.regions.size()); ++r) {
    const auto& reg = c.regions[r];
    if (reg.genus < 0) rep.add("region", "region " + std::to_string(r) + " has negative genus");
    if (reg.punctures < 0)
      rep.add("region", "region " + std::to_string(r) + " has negative punctures");
    if (reg.cycles.empty())
      rep.add("region", "region " + std::to_string(r) + " has no boundary cycles");
    for (int f : reg.cycles) {
      if (f < 0 || f >= fs.count()) {
        rep.add("region", "region " + std::to_string(r) + " references unknown face " +
                              std::to_string(f));
        continue;
      }
      if (owner[f] != -1)
        rep.add("region", "face " + std::to_string(f) + " assigned to regions " +
                              std::to_string(owner[f]) + " and " + std::to_string(r));
      owner[f] = r;
    }
  }
  for (int f = 0; f < fs.count(); ++f)
    if (owner[f] == -1)
      rep.add("region", "face " + std::to_string(f) + " is not assigned to any region");
  if (!rep.ok()) return rep;

  try {
    SurfaceType st = surface_type(c);
    if (!allow_sporadic && st.is_sporadic()) {
      rep.add("sporadic", "surface type (" + std::to_string(st.genus) + "," +
                              std::to_string(st.punctures) +
                              ") is sporadic; the curve pair lives on non-sporadic surfaces");
    }
  } catch (const NonOrientableOrInconsistent& e) {
    rep.add("euler", e.what());
  }
  return rep;
}

inline void require_valid(const Configuration& c, bool allow_sporadic = false) {
  ValidationReport rep = validate(c, allow_sporadic);
  if (!rep.ok())
    throw PreconditionViolated("invalid configuration:\n" + rep.to_string());
}

}  // namespace curve_spectra
