#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triosc/model.hpp"
#include "triosc/pipeline.hpp"
#include "triosc/plot.hpp"
#include "triosc/table.hpp"

namespace triosc {

/// A parameter axis: an explicit list, or `start:stop:steps` with
/// evenly spaced points including both ends.
struct Axis {
  std::vector<double> list;
  bool is_grid = false;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;

  static Axis scalar(double v) { return Axis{{v}}; }
  static Axis values_of(std::vector<double> v) { return Axis{std::move(v)}; }
  static Axis grid(double start, double stop, int steps);

  std::vector<double> values() const;
  std::size_t size() const { return is_grid ? static_cast<std::size_t>(steps) : list.size(); }

  bool operator==(const Axis&) const = default;
};

enum class Symmetry { fully_symmetric, bi_symmetric, asymmetric };

/// Optional sweep over base couplings. Every listed coupling takes the axis
/// value; when `omega_sq_factor` is set, omega_i(0)^2 = factor * value for
/// every mode in `omega_sq_targets`.
struct CouplingAxis {
  std::string name = "C";
  Axis values;
  std::vector<int> targets;  // coupling slots: 0 = C12, 1 = C13, 2 = C23; may be empty
  std::optional<double> omega_sq_factor;
  std::vector<int> omega_sq_targets;  // mode indices 0..2

  bool operator==(const CouplingAxis&) const = default;
};

struct ScenarioConfig {
  std::string name = "scenario";
  Symmetry symmetry = Symmetry::asymmetric;
  CouplingSign coupling_sign = CouplingSign::paper_general;
  E2Reading e2_reading = E2Reading::maxidness_heron;
  PopulationConvention population = PopulationConvention::half_trace;

  /// Stored as squared base frequencies, so both `omega0` and `omega0_sq`
  /// inputs round-trip exactly.
  std::array<double, 3> omega0_sq{1.0, 1.0, 1.0};
  std::array<double, 3> c0{0.0, 0.0, 0.0};
  Axis epsilon = Axis::scalar(1.0);
  Axis time = Axis::grid(0.0, 1.0, 2);
  std::optional<CouplingAxis> coupling_axis;

  std::string csv_path;
  std::string svg_path;
  /// Output columns; empty means all.
  std::vector<std::string> quantities;
  std::optional<PlotSpec> plot;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Parses the INI-style text. Throws ConfigInvalid with a line reference.
ScenarioConfig parse_config(const std::string& text);
/// Reads and parses a file. Throws ConfigInvalid if it cannot be read.
ScenarioConfig load_config(const std::string& path);
/// Canonical text; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

struct RunOptions {
  int threads = 1;
  /// Refused parameter sets produce a spectra-only table instead of throwing.
  bool allow_unphysical = false;
};

/// All specs of a config, in output order (coupling axis outer, epsilon
/// inner), plus the coupling-axis value of each.
struct ScenarioPoint {
  QuenchSpec spec;
  double axis_value;
};
std::vector<ScenarioPoint> scenario_points(const ScenarioConfig& config);

/// Column names of a full report table, before selection.
std::vector<std::string> report_columns(const ScenarioConfig& config);

/// Evaluates every (axis, epsilon, t) point. Rows are ordered coupling axis
/// outer, then epsilon, then t; output is identical for any thread count.
/// Throws UnphysicalParameters unless `allow_unphysical`.
ResultTable run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

struct SweepResult {
  ResultTable table;
  /// heatmap over (t, swept axis), or line when the second axis has a
  /// single point.
  PlotSpec plot;
};

/// Two-axis sweep: t plus exactly one of epsilon or the coupling axis.
/// Throws ConfigInvalid if both are multi-valued or t has fewer than 2 points.
SweepResult sweep(const ScenarioConfig& config, const RunOptions& options = {});

/// Plot spec for a plain run: the config's [plot] or an S_L_A line plot.
PlotSpec default_plot(const ScenarioConfig& config);

struct CheckEntry {
  QuenchSpec spec;
  double axis_value;
  PositivityReport positivity;
  std::array<double, 3> sigma2{};
  std::optional<EntanglementClass> initial_class;
};

/// Positivity, spectrum and t = 0 class of every parameter set.
std::vector<CheckEntry> check_scenario(const ScenarioConfig& config);

}  // namespace triosc
