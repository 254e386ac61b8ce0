// triosc: run, sweep and check three-oscillator quench scenarios.
//
// Exit codes: 0 success, 1 numerical failure, 2 config or usage error,
// 3 unphysical parameters refused.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "triosc/errors.hpp"
#include "triosc/plot.hpp"
#include "triosc/scenario.hpp"
#include "triosc/table.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfigError = 2;
constexpr int kUnphysical = 3;

struct Args {
  std::string config;
  std::string out;
  std::string plot;
  bool allow_unphysical = false;
  int threads = 1;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw triosc::ConfigInvalid("cannot open '" + path + "' for writing");
  os << content;
  if (!os) throw triosc::ConfigInvalid("failed writing '" + path + "'");
}

void emit(const triosc::ScenarioConfig& cfg, const Args& args, const triosc::ResultTable& table,
          const triosc::PlotSpec& plot) {
  const std::string csv_path = args.out.empty() ? cfg.csv_path : args.out;
  const std::string svg_path = args.plot.empty() ? cfg.svg_path : args.plot;
  // Render the plot first so a bad column selection leaves no files behind.
  std::string svg;
  if (!svg_path.empty()) {
    if (table.has_column("t")) {
      svg = triosc::emit_plot(table, plot);
    } else {
      std::cerr << "triosc: spectra-only table, no plot written\n";
    }
  }
  const std::string csv = triosc::to_csv(table);
  if (csv_path.empty() || csv_path == "-") {
    std::cout << csv;
  } else {
    write_file(csv_path, csv);
  }
  if (!svg.empty()) write_file(svg_path, svg);
}

int run(const Args& args, bool as_sweep) {
  const triosc::ScenarioConfig cfg = triosc::load_config(args.config);
  const triosc::RunOptions opts{args.threads, args.allow_unphysical};
  if (as_sweep) {
    const triosc::SweepResult res = triosc::sweep(cfg, opts);
    emit(cfg, args, res.table, res.plot);
  } else {
    const triosc::ResultTable table = triosc::run_scenario(cfg, opts);
    emit(cfg, args, table, triosc::default_plot(cfg));
  }
  return kOk;
}

int check(const Args& args) {
  const triosc::ScenarioConfig cfg = triosc::load_config(args.config);
  bool all_positive = true;
  std::printf("%-10s %-10s %-12s %-12s %-12s %-9s %-12s %-12s %-12s %s\n", "epsilon",
              cfg.coupling_axis ? cfg.coupling_axis->name.c_str() : "-", "minor_1", "minor_2",
              "minor_3", "positive", "sigma2_1", "sigma2_2", "sigma2_3", "class_t0");
  for (const auto& e : triosc::check_scenario(cfg)) {
    all_positive = all_positive && e.positivity.positive;
    std::printf("%-10.6g %-10.6g %-12.6g %-12.6g %-12.6g %-9s %-12.6g %-12.6g %-12.6g %s\n",
                e.spec.epsilon(), cfg.coupling_axis ? e.axis_value : 0.0, e.positivity.minors[0],
                e.positivity.minors[1], e.positivity.minors[2],
                e.positivity.positive ? "yes" : "no", e.sigma2[0], e.sigma2[1], e.sigma2[2],
                e.initial_class ? triosc::to_string(*e.initial_class) : "-");
  }
  if (!all_positive && !args.allow_unphysical) {
    std::cerr << "triosc: coupling matrix is not positive definite for some parameter sets\n";
    return kUnphysical;
  }
  return kOk;
}

void add_common(CLI::App* cmd, Args& args, bool outputs) {
  cmd->add_option("config", args.config, "Scenario config (INI)")->required();
  cmd->add_flag("--allow-unphysical", args.allow_unphysical,
                "Report spectra instead of refusing non-positive coupling matrices");
  if (outputs) {
    cmd->add_option("--out", args.out, "CSV output path ('-' for stdout)");
    cmd->add_option("--plot", args.plot, "SVG output path");
    cmd->add_option("--threads", args.threads, "Worker threads")->check(CLI::Range(1, 256));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian dynamics of three coupled oscillators after a sudden quench"};
  app.require_subcommand(1);
  Args args;
  CLI::App* run_cmd = app.add_subcommand("run", "Evaluate a scenario and write CSV/SVG");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Two-axis sweep with heatmap output");
  CLI::App* check_cmd = app.add_subcommand("check", "Physicality and class report only");
  add_common(run_cmd, args, true);
  add_common(sweep_cmd, args, true);
  add_common(check_cmd, args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*run_cmd) return run(args, false);
    if (*sweep_cmd) return run(args, true);
    return check(args);
  } catch (const triosc::UnphysicalParameters& e) {
    std::cerr << "triosc: refused: " << e.what() << " (use --allow-unphysical for spectra)\n";
    return kUnphysical;
  } catch (const triosc::ConfigInvalid& e) {
    std::cerr << "triosc: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const triosc::MissingColumn& e) {
    std::cerr << "triosc: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const triosc::InvalidArgument& e) {
    std::cerr << "triosc: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "triosc: " << e.what() << '\n';
    return kFailure;
  }
}
