#pragma once

#include <array>

#include "curve_spectra/ribbon.hpp"

namespace cstest {

using namespace curve_spectra;

// The canonical pair on the 5-punctured sphere: two curves crossing twice,
// four bigon-shaped faces carrying punctures (2,1,1,1).
inline Configuration f05() {
  Configuration c;
  c.vertices = 2;
  c.rotation = {{0, 1, 2, 3}, {4, 5, 6, 7}};
  c.pairing = {4, 7, 6, 5, 0, 3, 2, 1};
  c.labels = {Curve::Alpha, Curve::Beta, Curve::Alpha, Curve::Beta};
  c.regions = {{0, 2, {0}}, {0, 1, {1}}, {0, 1, {2}}, {0, 1, {3}}};
  return c;
}

// Same underlying curve pair with a different puncture distribution over the
// four faces (f0..f3).
inline Configuration f05_with_punctures(const std::array<int, 4>& p) {
  Configuration c = f05();
  for (int i = 0; i < 4; ++i) c.regions[i].punctures = p[i];
  return c;
}

}  // namespace cstest
