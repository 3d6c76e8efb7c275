#pragma once

#include <string>
#include <string_view>

#include "betalab/grid.hpp"
#include "betalab/means.hpp"

namespace betalab::cli {

enum class Format { Text, Json };

struct RunConfig {
  AxisSpec x{};
  AxisSpec y{};
  AxisSpec t{};
  Tolerances tol{};
  Format format = Format::Text;

  AnalysisGrid grid() const { return AnalysisGrid::from_specs(x, y, t); }
};

/// "min,max,count[,log|linear]"
AxisSpec parse_axis_spec(std::string_view text);

Format parse_format(std::string_view text);

/// key=value lines; keys: grid, grid.x, grid.y, grid.t, identity_tol,
/// classify_tol, format. '#' starts a comment.
void apply_config_text(RunConfig& cfg, std::string_view text);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Defaults with BETALAB_GRID applied to all three axes when set.
RunConfig default_config();

}  // namespace betalab::cli
