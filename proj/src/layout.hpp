#pragma once

#include <vector>

#include "callan/combinat.hpp"

namespace callan::detail {

// Label sets of a barred sequence: blue bars 1..blue_bars, red bars
// 0..red_bars, blue elements blue_shift+1..blue_shift+blue_size, red elements
// red_shift+1..red_shift+red_size.
struct Layout {
  int blue_bars = 0;
  int red_bars = 0;
  int blue_shift = 0;
  int blue_size = 0;
  int red_shift = 0;
  int red_size = 0;
};

Validation validate_layout(const std::vector<Element>& elements, const Layout& layout);

}  // namespace callan::detail
