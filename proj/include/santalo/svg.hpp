#pragma once

#include <string>

#include "santalo/equipartition.hpp"
#include "santalo/geometry.hpp"
#include "santalo/measures.hpp"

namespace santalo {

// Deterministic SVG of a 2D partition: fixed 800x800 canvas, viewport fitted
// to the cloud bounding box with a 5% margin, leaf cones as shaded sectors,
// atoms as dots, center marked with a cross.
std::string render_svg(const YaoYaoTree& tree, const WeightedPointCloud& cloud);

void write_svg_file(const std::string& path, const YaoYaoTree& tree,
                    const WeightedPointCloud& cloud);

} // namespace santalo
