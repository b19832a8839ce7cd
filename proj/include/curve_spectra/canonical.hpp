#pragma once

// Canonical byte keys for configurations, invariant under vertex relabeling,
// rotation of dart names, curve swap, and curve orientation reversal.  Two
// configurations are isomorphic exactly when their keys agree.  Mirror images
// (orientation reversal of the surface) are kept distinct unless requested.

#include <string>

#include "curve_spectra/ribbon.hpp"

namespace curve_spectra {

using CanonicalKey = std::string;

namespace detail {

// Deterministic relabeling: the root dart becomes 0 and the traversal follows
// sigma (sigma inverse when mirroring) then the pairing.  Emits the relabeled
// (sigma, pairing, label) table followed by the normalized region table.
inline void canonical_candidate(const Configuration& c, const DartIndex& ix, int root,
                                bool swap_labels, bool mirror, std::string& out,
                                std::vector<int>& new_id, std::vector<int>& order,
                                std::vector<int>& face_of_new) {
  const int nd = c.dart_count();
  new_id.assign(nd, -1);
  order.clear();
  order.reserve(nd);
  new_id[root] = 0;
  order.push_back(root);
  for (int i = 0; i < nd; ++i) {
    const int d = order[i];
    const int s = mirror ? ix.sigma_inv(c, d) : ix.sigma(c, d);
    if (new_id[s] < 0) {
      new_id[s] = static_cast<int>(order.size());
      order.push_back(s);
    }
    const int p = c.pairing[d];
    if (new_id[p] < 0) {
      new_id[p] = static_cast<int>(order.size());
      order.push_back(p);
    }
  }
  detail::require(static_cast<int>(order.size()) == nd, "configuration is connected");

  out.clear();
  out.push_back(static_cast<char>(nd));
  for (int i = 0; i < nd; ++i) {
    const int d = order[i];
    const int s = mirror ? ix.sigma_inv(c, d) : ix.sigma(c, d);
    out.push_back(static_cast<char>(new_id[s]));
    out.push_back(static_cast<char>(new_id[c.pairing[d]]));
    const bool beta = (ix.label(c, d) == Curve::Beta) != swap_labels;
    out.push_back(beta ? 'b' : 'a');
  }

  if (c.regions.empty()) return;

  // trace faces of the relabeled map (phi = pairing . sigma)
  face_of_new.assign(nd, -1);
  int fcount = 0;
  for (int start = 0; start < nd; ++start) {
    if (face_of_new[start] >= 0) continue;
    int i = start;
    do {
      face_of_new[i] = fcount;
      const int d = order[i];
      const int s = mirror ? ix.sigma_inv(c, d) : ix.sigma(c, d);
      i = new_id[c.pairing[s]];
    } while (i != start);
    ++fcount;
  }
}

}  // namespace detail

// Full canonical key.  The region table is part of the key; configurations
// without regions (bare curve systems) get a core key.
inline CanonicalKey canonical_form(const Configuration& c, bool quotient_mirror = false) {
  const DartIndex ix = build_index(c);
  const int nd = c.dart_count();
  const FaceSet fs = c.regions.empty() ? FaceSet{} : trace_faces(c, ix);

  std::string best;
  std::string cand;
  std::vector<int> new_id, order, face_of_new;
  std::string region_block;

  for (int mirror = 0; mirror <= (quotient_mirror ? 1 : 0); ++mirror) {
    for (int swap = 0; swap <= 1; ++swap) {
      for (int root = 0; root < nd; ++root) {
        detail::canonical_candidate(c, ix, root, swap != 0, mirror != 0, cand, new_id, order,
                                    face_of_new);
        if (!c.regions.empty()) {
          region_block.clear();
          std::vector<std::string> entries;
          entries.reserve(c.regions.size());
          for (const RegionData& r : c.regions) {
            std::vector<int> cycles;
            cycles.reserve(r.cycles.size());
            for (int f : r.cycles) {
              int rep = fs.darts[f][0];
              if (mirror) rep = c.pairing[rep];
              cycles.push_back(face_of_new[new_id[rep]]);
            }
            std::sort(cycles.begin(), cycles.end());
            std::string e;
            e.push_back(static_cast<char>(cycles.size()));
            for (int f : cycles) e.push_back(static_cast<char>(f));
            e.push_back(static_cast<char>(r.genus));
            e.push_back(static_cast<char>(r.punctures));
            entries.push_back(std::move(e));
          }
          std::sort(entries.begin(), entries.end());
          for (const auto& e : entries) {
            region_block.push_back('|');
            region_block += e;
          }
          cand += region_block;
        }
        if (best.empty() || cand < best) best = cand;
      }
    }
  }
  return best;
}

}  // namespace curve_spectra
