#pragma once

#include <string>

#include "flatmod/domain.hpp"

namespace flatmod {

struct SvgOptions {
  double y_max = 2.5;
  double pixels_per_unit = 160;
};

/// Upper half plane picture of the domain, clipped to 0 < y <= y_max, with
/// pairing labels on boundary edges.
std::string render_svg(const FundamentalDomain& domain, const SvgOptions& options = {});

}  // namespace flatmod
