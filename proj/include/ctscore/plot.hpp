#pragma once

#include <string>
#include <string_view>

#include "ctscore/sweep.hpp"

namespace ctscore {

enum class PlotStyle { none, ascii, svg };

PlotStyle parse_plot_style(std::string_view text);

/// cv against a_crit as text, at most 80 columns wide. Points are '*', the
/// selected row '@', interpolated segments '.'.
std::string ascii_plot(const SweepTable& table);

/// Self-contained SVG line chart with the selected row circled.
std::string svg_plot(const SweepTable& table);

std::string emit_plot(const SweepTable& table, PlotStyle style);

}  // namespace ctscore
