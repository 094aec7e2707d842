#pragma once

#include <optional>
#include <string>

#include "latticehull/experiments.hpp"

namespace lh {

/// Render a scaling study as a self-contained log-log SVG plot: data points
/// with 4-SE error bars, the fitted power law, and an optional reference
/// slope drawn through the first point. No external plotting dependency.
std::string render_loglog_svg(const ScalingResult& result,
                              std::optional<double> reference_slope = std::nullopt);

void write_loglog_svg(const std::string& path, const ScalingResult& result,
                      std::optional<double> reference_slope = std::nullopt);

}  // namespace lh
