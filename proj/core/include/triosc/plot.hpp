#pragma once

#include <string>
#include <vector>

#include "triosc/table.hpp"

namespace triosc {

enum class PlotKind { line, heatmap };

struct PlotSpec {
  PlotKind kind = PlotKind::line;
  std::string x = "t";
  /// Line plots: one or more y columns. Heatmaps: the single row axis.
  std::vector<std::string> y;
  /// Line plots: optional column whose distinct values split each y column
  /// into separate series.
  std::string group;
  /// Heatmaps: the shaded value.
  std::string z;
  std::string title;
  int width = 640;
  int height = 420;

  bool operator==(const PlotSpec&) const = default;
};

/// Standalone SVG 1.1 document. Line plots draw one polyline per series
/// with axis ticks and a legend; heatmaps draw a rect grid shaded on a
/// linear color ramp. Throws MissingColumn for unknown columns and
/// InvalidArgument for an empty selection.
std::string emit_plot(const ResultTable& table, const PlotSpec& spec);

}  // namespace triosc
