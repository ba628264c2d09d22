#ifndef TOPSKIT_SVG_HPP
#define TOPSKIT_SVG_HPP

#include "topskit/gifs.hpp"
#include "topskit/tops.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace topskit {

// Number-line diagram: one row per vertex with the component hull, the edge
// images that land in it, and an optional shaded Υ region. Coordinates are
// decimal approximations.
std::string render_svg(const GraphIFS& g, const ComponentHulls& hulls,
                       const std::optional<UpsilonRegion>& region, std::string_view title);

} // namespace topskit

#endif
