#pragma once

// Minimal position and distance classification: bigon detection and removal,
// geometric intersection number, cutting along one curve, essentiality, and
// the {<=1, 2, >=3} trichotomy with its disjoint curve classes.

#include <optional>
#include <set>

#include "curve_spectra/ribbon.hpp"

namespace curve_spectra {

struct ReductionToDisjoint : std::runtime_error {
  ReductionToDisjoint() : std::runtime_error("bigon removal exhausts all crossings; the curves are disjoint (distance <= 1)") {}
};

enum class DistanceClass { AtMostOne, ExactlyTwo, AtLeastThree };

inline const char* to_string(DistanceClass d) {
  switch (d) {
    case DistanceClass::AtMostOne: return "<=1";
    case DistanceClass::ExactlyTwo: return "2";
    case DistanceClass::AtLeastThree: return ">=3";
  }
  return "?";
}

// An empty bigon: a length-2 face whose region is an unpunctured disk with
// that face as its only boundary cycle.  Punctured bigon-shaped faces do not
// qualify and must persist under reduction.
struct Bigon {
  int face = -1;
  bool operator==(const Bigon&) const = default;
};

// An isotopy class of essential curves disjoint from the pair: either one face
// cycle pushed into its region, or two cycles merged through an annulus
// region.
struct CurveClass {
  std::vector<int> cycles;  // 1 or 2 face ids, sorted
  int region = -1;
  bool essential = true;
  bool operator==(const CurveClass&) const = default;
};

struct CutComponent {
  int genus = 0;
  int boundary = 0;
  int punctures = 0;
  bool operator==(const CutComponent&) const = default;
  auto operator<=>(const CutComponent&) const = default;
};

namespace detail {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline std::vector<int> region_of_face(const Configuration& c, int face_count) {
  std::vector<int> owner(face_count, -1);
  for (int r = 0; r < static_cast<int>(c.regions.size()); ++r)
    for (int f : c.regions[r].cycles) owner[f] = r;
  return owner;
}

}  // namespace detail

inline std::vector<Bigon> find_bigons(const Configuration& c) {
  const DartIndex ix = build_index(c);
  const FaceSet fs = trace_faces(c, ix);
  const std::vector<int> owner = detail::region_of_face(c, fs.count());
  std::vector<Bigon> out;
  for (int f = 0; f < fs.count(); ++f) {
    if (fs.length(f) != 2) continue;
    const RegionData& r = c.regions[owner[f]];
    if (r.genus == 0 && r.punctures == 0 && r.boundary_count() == 1) out.push_back({f});
  }
  return out;
}

// Cancels the two crossings of an empty bigon.  The region bookkeeping follows
// the local surgery: the bigon disk is absorbed across its ALPHA side, and the
// two wedge faces at the cancelled crossings fuse through the swept strip.
// Each new region's genus is recovered from its Euler characteristic, which
// drops by one exactly on the fused class.
inline Configuration remove_bigon(const Configuration& c, const Bigon& bigon) {
  {
    const std::vector<Bigon> bigons = find_bigons(c);
    detail::require(std::find(bigons.begin(), bigons.end(), bigon) != bigons.end(),
                    "remove_bigon called on a non-bigon face");
  }
  if (c.vertices == 2) throw ReductionToDisjoint();

  const DartIndex ix = build_index(c);
  const FaceSet fs = trace_faces(c, ix);

  int d1 = fs.darts[bigon.face][0];
  int d2 = fs.darts[bigon.face][1];
  if (ix.label(c, d1) != Curve::Alpha) std::swap(d1, d2);
  const int u = ix.vertex_of[d1];
  const int w = ix.vertex_of[d2];
  detail::require(u != w, "bigon corners are distinct crossings");
  detail::require(ix.sigma(c, d1) == c.pairing[d2], "bigon corner at first vertex");
  detail::require(ix.sigma(c, d2) == c.pairing[d1], "bigon corner at second vertex");

  const int au = ix.sigma(c, ix.sigma(c, d1));  // alpha continuation out of u
  const int bu = ix.sigma(c, au);               // beta continuation out of u
  const int bw = ix.sigma(c, ix.sigma(c, d2));  // beta continuation out of w
  const int aw = ix.sigma(c, bw);               // alpha continuation out of w

  const int A1 = c.pairing[au], A2 = c.pairing[aw];
  const int B1 = c.pairing[bu], B2 = c.pairing[bw];
  for (int d : {A1, A2, B1, B2})
    detail::require(ix.vertex_of[d] != u && ix.vertex_of[d] != w,
                    "continuation edges end away from the bigon (V >= 3)");

  const int fB = fs.face_of[d1];
  const int fW = fs.face_of[au];
  const int fE = fs.face_of[bw];

  Configuration out;
  out.version = c.version;
  out.vertices = c.vertices - 2;
  std::vector<int> dart_map(c.dart_count(), -1);
  std::vector<int> inv_map(out.dart_count(), -1);
  {
    int nv = 0;
    for (int v = 0; v < c.vertices; ++v) {
      if (v == u || v == w) continue;
      std::array<int, 4> row{};
      for (int j = 0; j < 4; ++j) {
        row[j] = 4 * nv + j;
        dart_map[c.rotation[v][j]] = 4 * nv + j;
        inv_map[4 * nv + j] = c.rotation[v][j];
      }
      out.rotation.push_back(row);
      ++nv;
    }
  }
  out.pairing.assign(out.dart_count(), -1);
  for (int d = 0; d < c.dart_count(); ++d) {
    if (dart_map[d] < 0) continue;
    int p = c.pairing[d];
    if (dart_map[p] >= 0) out.pairing[dart_map[d]] = dart_map[p];
  }
  auto link = [&](int x, int y) {
    out.pairing[dart_map[x]] = dart_map[y];
    out.pairing[dart_map[y]] = dart_map[x];
  };
  link(A1, A2);
  link(B1, B2);
  for (int d = 0; d < out.dart_count(); ++d)
    if (d < out.pairing[d]) out.labels.push_back(ix.label(c, inv_map[d]));

  const DartIndex ox = build_index(out);
  const FaceSet ofs = trace_faces(out, ox);

  std::vector<std::set<int>> mapped(fs.count());
  for (int d = 0; d < c.dart_count(); ++d)
    if (dart_map[d] >= 0) mapped[fs.face_of[d]].insert(ofs.face_of[dart_map[d]]);
  detail::require(mapped[fB].empty(), "the bigon face vanishes");

  const std::vector<int> owner = detail::region_of_face(c, fs.count());
  const int rB = owner[fB], rW = owner[fW], rE = owner[fE];
  {
    const RegionData& rb = c.regions[rB];
    detail::require(rb.genus == 0 && rb.punctures == 0 && rb.cycles == std::vector<int>{fB},
                    "a removable bigon is its own disk region");
  }

  const int nregions = static_cast<int>(c.regions.size());
  detail::Dsu dsu(nregions);
  dsu.unite(rW, rE);
  // group surviving regions into merge classes, ordered by smallest member
  std::vector<int> reps;
  std::vector<int> class_of(nregions, -1);
  for (int r = 0; r < nregions; ++r) {
    if (r == rB) continue;
    const int root = dsu.find(r);
    int k = -1;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (dsu.find(reps[i]) == root) {
        k = static_cast<int>(i);
        break;
      }
    if (k < 0) {
      k = static_cast<int>(reps.size());
      reps.push_back(r);
    }
    class_of[r] = k;
  }

  std::vector<char> face_used(ofs.count(), 0);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::set<int> cycles;
    int punctures = 0;
    int chi = 0;
    bool fused = false;
    for (int r = 0; r < nregions; ++r) {
      if (r == rB || class_of[r] != static_cast<int>(k)) continue;
      punctures += c.regions[r].punctures;
      chi += c.regions[r].chi();
      if (r == rW || r == rE) fused = true;
      for (int f : c.regions[r].cycles)
        for (int nf : mapped[f]) cycles.insert(nf);
    }
    if (fused) chi -= 1;  // the strip joining the two wedge faces is one band
    RegionData nr;
    nr.punctures = punctures;
    nr.cycles.assign(cycles.begin(), cycles.end());
    const int twice_genus = 2 - chi - nr.boundary_count() - punctures;
    detail::require(twice_genus >= 0 && twice_genus % 2 == 0,
                    "region surgery yields integral non-negative genus");
    nr.genus = twice_genus / 2;
    for (int f : nr.cycles) {
      detail::require(!face_used[f], "each face cycle lands in exactly one region");
      face_used[f] = 1;
    }
    out.regions.push_back(std::move(nr));
  }
  for (int f = 0; f < ofs.count(); ++f)
    detail::require(face_used[f], "all new faces assigned");

  detail::require(validate(out, /*allow_sporadic=*/true).ok(), "bigon removal output validates");
  detail::require(surface_type(out) == surface_type(c), "bigon removal preserves the surface");
  return out;
}

struct ReduceResult {
  bool disjoint = false;
  Configuration config;  // bigon-free when !disjoint
};

// Removes bigons (lowest face id first) until none remain.  The result is
// independent of removal order up to isomorphism.
inline ReduceResult reduce(const Configuration& c) {
  Configuration cur = c;
  for (;;) {
    std::vector<Bigon> bigons = find_bigons(cur);
    if (bigons.empty()) return {false, std::move(cur)};
    if (cur.vertices == 2) return {true, {}};
    cur = remove_bigon(cur, bigons.front());
  }
}

// Geometric intersection number i(alpha, beta): crossings after reduction.
inline int intersection_number(const Configuration& c) {
  ReduceResult r = reduce(c);
  return r.disjoint ? 0 : r.config.vertices;
}

// Homeomorphism types of the components of S cut along the chosen curve.
// Components are assembled from the complement regions joined by bands along
// the other curve's edges; each component's genus is recovered from its Euler
// characteristic.
inline std::vector<CutComponent> cut_along(const Configuration& c, Curve which) {
  const DartIndex ix = build_index(c);
  const FaceSet fs = trace_faces(c, ix);
  const std::vector<int> owner = detail::region_of_face(c, fs.count());
  const int nregions = static_cast<int>(c.regions.size());

  detail::Dsu dsu(nregions);
  for (const auto& [d, p] : ix.edges)
    if (ix.label(c, d) != which) dsu.unite(owner[fs.face_of[d]], owner[fs.face_of[p]]);

  // the two directed traversals of the cut curve, one per side
  std::vector<int> orbit_comp;
  std::vector<char> seen(c.dart_count(), 0);
  for (int start = 0; start < c.dart_count(); ++start) {
    if (seen[start] || ix.label(c, start) != which) continue;
    int comp = -1;
    int d = start;
    do {
      seen[d] = 1;
      int here = dsu.find(owner[fs.face_of[d]]);
      detail::require(comp == -1 || comp == here, "side walk stays in one component");
      comp = here;
      d = ix.sigma(c, ix.sigma(c, c.pairing[d]));
    } while (d != start);
    orbit_comp.push_back(comp);
  }
  detail::require(orbit_comp.size() == 2, "a simple closed curve has two directed traversals");

  std::vector<int> roots;
  for (int comp : orbit_comp)
    if (std::find(roots.begin(), roots.end(), comp) == roots.end()) roots.push_back(comp);
  for (int r = 0; r < nregions; ++r)
    detail::require(std::find(roots.begin(), roots.end(), dsu.find(r)) != roots.end(),
                    "every region lies on one side of the cut");

  std::vector<CutComponent> out;
  for (int root : roots) {
    int punctures = 0, chi = 0, boundary = 0;
    for (int r = 0; r < nregions; ++r)
      if (dsu.find(r) == root) {
        punctures += c.regions[r].punctures;
        chi += c.regions[r].chi();
      }
    for (const auto& [d, p] : ix.edges)
      if (ix.label(c, d) != which && dsu.find(owner[fs.face_of[d]]) == root) chi -= 1;
    for (int comp : orbit_comp)
      if (comp == root) ++boundary;
    const int twice_genus = 2 - chi - boundary - punctures;
    detail::require(twice_genus >= 0 && twice_genus % 2 == 0, "cut component genus is integral");
    out.push_back({twice_genus / 2, boundary, punctures});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Essential: the curve neither bounds an unpunctured disk nor a once-punctured
// disk.  Expects a bigon-free configuration.
inline bool curve_is_essential(const Configuration& c, Curve which) {
  for (const CutComponent& comp : cut_along(c, which))
    if (comp.genus == 0 && comp.boundary == 1 && comp.punctures <= 1) return false;
  return true;
}

struct ClassResult {
  std::vector<CurveClass> classes;          // essential classes only
  std::vector<int> nonsimple_regions;       // regions with room for non-boundary curves
};

// The candidate middle vertices of length-2 geodesics: boundary cycles pushed
// into their regions, merged in pairs through annulus regions, filtered to
// essential ones.  Essentiality is decided by the region type alone: the graph
// side of any cycle carries both intersecting essential curves, so only disk
// and once-punctured-disk regions produce inessential classes.
inline ClassResult disjoint_curve_classes(const Configuration& c) {
  if (!curve_is_essential(c, Curve::Alpha))
    throw PreconditionViolated("ALPHA is inessential");
  if (!curve_is_essential(c, Curve::Beta))
    throw PreconditionViolated("BETA is inessential");
  detail::require(find_bigons(c).empty(), "disjoint_curve_classes expects a bigon-free configuration");

  ClassResult out;
  for (int r = 0; r < static_cast<int>(c.regions.size()); ++r) {
    const RegionData& reg = c.regions[r];
    const int b = reg.boundary_count();
    if (reg.genus == 0 && reg.punctures == 0 && b == 2) {
      // Type I annulus: its two boundary cycles are one isotopy class, and the
      // class is automatically essential (the connected graph side meets both
      // ends, so the core curve is non-separating).
      out.classes.push_back({reg.cycles, r, true});
    } else if (!(reg.genus == 0 && b == 1 && reg.punctures <= 1)) {
      for (int f : reg.cycles) out.classes.push_back({{f}, r, true});
    }
    if (!reg.is_simple()) out.nonsimple_regions.push_back(r);
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const CurveClass& a, const CurveClass& b) { return a.cycles < b.cycles; });
  return out;
}

// Filling: every complement region is a disk or once-punctured disk.  Computed
// on the reduced configuration so it matches the distance classification.
inline bool is_filling(const Configuration& c) {
  ReduceResult r = reduce(c);
  if (r.disjoint) return false;
  if (!curve_is_essential(r.config, Curve::Alpha) || !curve_is_essential(r.config, Curve::Beta))
    throw PreconditionViolated("is_filling expects both curves essential");
  for (const RegionData& reg : r.config.regions)
    if (!(reg.genus == 0 && reg.boundary_count() == 1 && reg.punctures <= 1)) return false;
  return true;
}

inline DistanceClass classify_distance(const Configuration& c) {
  ReduceResult r = reduce(c);
  if (r.disjoint) return DistanceClass::AtMostOne;
  ClassResult cls = disjoint_curve_classes(r.config);
  if (!cls.classes.empty() || !cls.nonsimple_regions.empty()) return DistanceClass::ExactlyTwo;
  return DistanceClass::AtLeastThree;
}

}  // namespace curve_spectra
