#include "triosc/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "triosc/errors.hpp"

namespace triosc {

namespace {

// ---------------------------------------------------------------- text utils

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string join(const std::vector<T>& v, auto&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt(v[i]);
  }
  return out;
}

// ------------------------------------------------------------------ parsing

class Parser {
 public:
  explicit Parser(int line) : line_(line) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigInvalid("line " + std::to_string(line_) + ": " + what);
  }

  double number(const std::string& s) const {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
      fail("expected a finite number, got '" + s + "'");
    }
    return v;
  }

  int integer(const std::string& s) const {
    int v = 0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc() || res.ptr != end) {
      fail("expected an integer, got '" + s + "'");
    }
    return v;
  }

  std::vector<double> numbers(const std::string& s) const {
    std::vector<double> out;
    for (const auto& part : split(s, ',')) out.push_back(number(part));
    return out;
  }

  std::array<double, 3> triple(const std::string& s) const {
    const auto v = numbers(s);
    if (v.size() != 3) fail("expected three comma-separated values");
    return {v[0], v[1], v[2]};
  }

  Axis axis(const std::string& s) const {
    if (s.find(':') != std::string::npos) {
      const auto parts = split(s, ':');
      if (parts.size() != 3) fail("grid must be start:stop:steps");
      const double a = number(parts[0]);
      const double b = number(parts[1]);
      const int n = integer(parts[2]);
      if (n < 2) fail("grid needs at least 2 steps");
      if (!(b > a)) fail("grid stop must exceed start");
      return Axis::grid(a, b, n);
    }
    auto v = numbers(s);
    if (v.empty()) fail("empty value list");
    return Axis::values_of(std::move(v));
  }

 private:
  int line_;
};

template <typename E>
E enum_value(const Parser& p, const std::string& s,
             std::initializer_list<std::pair<const char*, E>> options) {
  for (const auto& [name, value] : options) {
    if (s == name) return value;
  }
  std::string names;
  for (const auto& [name, value] : options) names += std::string(names.empty() ? "" : ", ") + name;
  p.fail("unknown value '" + s + "' (expected one of " + names + ")");
}

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::fully_symmetric: return "fully_symmetric";
    case Symmetry::bi_symmetric: return "bi_symmetric";
    case Symmetry::asymmetric: return "asymmetric";
  }
  return "asymmetric";
}

const char* sign_name(CouplingSign s) {
  return s == CouplingSign::paper_general ? "paper_general" : "paper_symmetric";
}

const std::array<const char*, 3> kCouplingNames{"C12", "C13", "C23"};

std::string axis_text(const Axis& a) {
  if (a.is_grid) return shortest(a.start) + ":" + shortest(a.stop) + ":" + std::to_string(a.steps);
  return join(a.list, shortest);
}

// ------------------------------------------------------------ report rows

const char* const kModes[3] = {"A", "B", "C"};

std::vector<std::string> fixed_report_columns() {
  std::vector<std::string> c{"t", "epsilon", "C12_0", "C13_0", "C23_0"};
  auto per_mode = [&c](const std::string& stem) {
    for (const char* m : kModes) c.push_back(stem + m);
  };
  per_mode("P_");
  per_mode("P_cf_");
  per_mode("S_L_");
  per_mode("S_v_");
  c.insert(c.end(), {"E2", "E2_status", "coherence"});
  per_mode("nbar_");
  per_mode("unc_");
  per_mode("rs_");
  c.insert(c.end(), {"det_G", "det_sigma", "nu_1", "nu_2", "nu_3", "min_eig_phys", "physical",
                     "triangle_ok", "fully_inseparable", "class", "nu_tilde_min_A|BC",
                     "nu_tilde_min_B|AC", "nu_tilde_min_C|AB", "R_A", "R_C", "P_out_A", "P_out_C",
                     "S_v_out_A", "S_v_out_C", "C_out_A", "C_out_C", "nbar_out_A", "nbar_out_C",
                     "C_in_A", "dC_A", "dS_v_A", "witness_ratio_A"});
  return c;
}

std::vector<Cell> report_row(const QuantityReport& r, const QuenchSpec& spec,
                             const std::optional<double>& axis_value) {
  std::vector<Cell> row;
  row.reserve(80);
  auto b = [](bool v) { return Cell(std::string(v ? "true" : "false")); };
  row.emplace_back(r.t);
  row.emplace_back(r.epsilon);
  if (axis_value) row.emplace_back(*axis_value);
  for (double c : spec.c0()) row.emplace_back(c);
  for (double v : r.purity) row.emplace_back(v);
  for (double v : r.purity_closed_form) row.emplace_back(v);
  for (double v : r.linear_entropy) row.emplace_back(v);
  for (double v : r.von_neumann) row.emplace_back(v);
  row.emplace_back(r.e2.value);
  row.emplace_back(std::string(to_string(r.e2.status)));
  row.emplace_back(r.coherence);
  for (double v : r.nbar) row.emplace_back(v);
  for (const auto& u : r.uncertainty) row.emplace_back(u.delta);
  for (const auto& u : r.uncertainty) row.emplace_back(u.det);
  row.emplace_back(r.det_g);
  row.emplace_back(r.det_sigma);
  for (double v : r.symplectic) row.emplace_back(v);
  row.emplace_back(r.physical.min_eigenvalue);
  row.push_back(b(r.physical.ok));
  row.push_back(b(r.triangle.ok));
  row.push_back(b(r.fully_inseparable));
  row.emplace_back(std::string(to_string(r.classification.cls)));
  for (double v : r.classification.nu_tilde_min) row.emplace_back(v);
  const HomodyneOutcome& h = r.homodyne;
  row.emplace_back(h.shift_a);
  row.emplace_back(h.shift_c);
  row.emplace_back(h.purity_out[0]);
  row.emplace_back(h.purity_out[1]);
  row.emplace_back(h.svn_out[0]);
  row.emplace_back(h.svn_out[1]);
  row.emplace_back(h.coherence_out[0]);
  row.emplace_back(h.coherence_out[1]);
  row.emplace_back(h.nbar_out[0]);
  row.emplace_back(h.nbar_out[1]);
  row.emplace_back(r.input_a.coherence);
  const RedistributionWitness w = redistribution_witness(r.input_a, output_mode_report(h, 0));
  row.emplace_back(w.delta_coherence);
  row.emplace_back(w.delta_svn);
  row.emplace_back(w.ratio);
  return row;
}

std::vector<std::string> spectral_columns(const ScenarioConfig& config) {
  std::vector<std::string> c{"epsilon"};
  if (config.coupling_axis) c.push_back(config.coupling_axis->name);
  c.insert(c.end(), {"C12_0", "C13_0", "C23_0", "sigma2_1", "sigma2_2", "sigma2_3", "psi", "theta",
                     "phi", "minor_1", "minor_2", "minor_3", "positive"});
  return c;
}

void validate_symmetry(const ScenarioConfig& config, const QuenchSpec& s) {
  const auto& w = s.omega0();
  const auto& c = s.c0();
  if (config.symmetry == Symmetry::fully_symmetric &&
      !(w[0] == w[1] && w[1] == w[2] && c[0] == c[1] && c[1] == c[2])) {
    throw ConfigInvalid("fully_symmetric needs equal frequencies and equal couplings");
  }
  if (config.symmetry == Symmetry::bi_symmetric && !(w[0] == w[2] && c[0] == c[2])) {
    throw ConfigInvalid("bi_symmetric needs omega1 = omega3 and C12 = C23");
  }
}

template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(
      static_cast<std::size_t>(std::clamp(threads, 1, 256)), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

// --------------------------------------------------------------------- Axis

Axis Axis::grid(double start, double stop, int steps) {
  Axis a;
  a.is_grid = true;
  a.start = start;
  a.stop = stop;
  a.steps = steps;
  return a;
}

std::vector<double> Axis::values() const {
  if (!is_grid) return list;
  std::vector<double> v(static_cast<std::size_t>(steps));
  const double h = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) v[i] = start + i * h;
  v.back() = stop;
  return v;
}

// ---------------------------------------------------------------- config IO

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  std::map<std::string, std::map<std::string, std::pair<std::string, int>>> sections;
  const std::set<std::string> known{"scenario", "parameters", "time", "coupling_axis", "output",
                                    "plot"};
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const Parser p(line);
    const auto hash = raw.find_first_of("#;");
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') p.fail("malformed section header");
      section = trim(s.substr(1, s.size() - 2));
      if (!known.contains(section)) p.fail("unknown section [" + section + "]");
      if (sections.contains(section)) p.fail("duplicate section [" + section + "]");
      sections[section];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) p.fail("expected key = value");
    if (section.empty()) p.fail("key outside of a section");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) p.fail("empty key");
    auto& sec = sections[section];
    if (sec.contains(key)) p.fail("duplicate key '" + key + "'");
    sec[key] = {value, line};
  }

  std::map<std::string, std::set<std::string>> allowed{
      {"scenario", {"name", "symmetry", "coupling_sign", "e2_reading", "population"}},
      {"parameters", {"omega0", "omega0_sq", "c0", "epsilon"}},
      {"time", {"grid"}},
      {"coupling_axis", {"name", "values", "targets", "omega_sq_factor", "omega_sq_targets"}},
      {"output", {"csv", "svg", "quantities"}},
      {"plot", {"kind", "x", "y", "group", "z", "title", "width", "height"}},
  };
  for (const auto& [name, keys] : sections) {
    for (const auto& [key, v] : keys) {
      if (!allowed[name].contains(key)) {
        Parser(v.second).fail("unknown key '" + key + "' in [" + name + "]");
      }
    }
  }
  using Entry = std::pair<std::string, int>;
  auto get = [&](const std::string& sec, const std::string& key) -> const Entry* {
    const auto s = sections.find(sec);
    if (s == sections.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  };

  if (const auto* v = get("scenario", "name")) cfg.name = v->first;
  if (const auto* v = get("scenario", "symmetry")) {
    cfg.symmetry = enum_value<Symmetry>(Parser(v->second), v->first,
                                        {{"fully_symmetric", Symmetry::fully_symmetric},
                                         {"bi_symmetric", Symmetry::bi_symmetric},
                                         {"asymmetric", Symmetry::asymmetric}});
  }
  if (const auto* v = get("scenario", "coupling_sign")) {
    cfg.coupling_sign = enum_value<CouplingSign>(
        Parser(v->second), v->first,
        {{"paper_general", CouplingSign::paper_general},
         {"paper_symmetric", CouplingSign::paper_symmetric}});
  }
  if (const auto* v = get("scenario", "e2_reading")) {
    cfg.e2_reading = enum_value<E2Reading>(
        Parser(v->second), v->first,
        {{"outer_parenthesization", E2Reading::outer_parenthesization},
         {"unit_offset", E2Reading::unit_offset},
         {"maxidness_heron", E2Reading::maxidness_heron}});
  }
  if (const auto* v = get("scenario", "population")) {
    cfg.population = enum_value<PopulationConvention>(
        Parser(v->second), v->first,
        {{"half_trace", PopulationConvention::half_trace},
         {"vacuum_referenced", PopulationConvention::vacuum_referenced}});
  }

  const auto* w = get("parameters", "omega0");
  const auto* w2 = get("parameters", "omega0_sq");
  if (w && w2) Parser(w2->second).fail("give either omega0 or omega0_sq, not both");
  if (w) {
    const auto v = Parser(w->second).triple(w->first);
    for (int i = 0; i < 3; ++i) cfg.omega0_sq[i] = v[i] * v[i];
  } else if (w2) {
    cfg.omega0_sq = Parser(w2->second).triple(w2->first);
    for (double x : cfg.omega0_sq) {
      if (x < 0.0) Parser(w2->second).fail("omega0_sq must be >= 0");
    }
  } else if (!get("coupling_axis", "omega_sq_factor")) {
    throw ConfigInvalid("[parameters] needs omega0 or omega0_sq");
  }
  if (const auto* v = get("parameters", "c0")) {
    cfg.c0 = Parser(v->second).triple(v->first);
  } else if (!sections.contains("coupling_axis")) {
    throw ConfigInvalid("[parameters] needs c0");
  }
  if (const auto* v = get("parameters", "epsilon")) {
    const Parser p(v->second);
    cfg.epsilon = p.axis(v->first);
    for (double e : cfg.epsilon.values()) {
      if (!(e > 0.0)) p.fail("epsilon must be > 0");
    }
  }
  if (const auto* v = get("time", "grid")) {
    const Parser p(v->second);
    cfg.time = p.axis(v->first);
    if (!cfg.time.is_grid) p.fail("time must be a start:stop:steps grid");
    if (cfg.time.start < 0.0) p.fail("time must start at t >= 0");
  } else {
    throw ConfigInvalid("[time] needs grid = start:stop:steps");
  }

  if (sections.contains("coupling_axis")) {
    CouplingAxis ax;
    if (const auto* v = get("coupling_axis", "name")) ax.name = v->first;
    const auto* vals = get("coupling_axis", "values");
    if (!vals) throw ConfigInvalid("[coupling_axis] needs values");
    ax.values = Parser(vals->second).axis(vals->first);
    const auto* tg = get("coupling_axis", "targets");
    if (!tg && !get("coupling_axis", "omega_sq_factor")) {
      throw ConfigInvalid("[coupling_axis] needs targets or omega_sq_factor");
    }
    for (const auto& t : tg ? split(tg->first, ',') : std::vector<std::string>{}) {
      const auto it = std::find(kCouplingNames.begin(), kCouplingNames.end(), t);
      if (it == kCouplingNames.end()) Parser(tg->second).fail("unknown coupling '" + t + "'");
      ax.targets.push_back(static_cast<int>(it - kCouplingNames.begin()));
    }
    if (const auto* v = get("coupling_axis", "omega_sq_factor")) {
      ax.omega_sq_factor = Parser(v->second).number(v->first);
      const auto* mt = get("coupling_axis", "omega_sq_targets");
      if (!mt) Parser(v->second).fail("omega_sq_factor needs omega_sq_targets");
      const Parser p(mt->second);
      for (const auto& t : split(mt->first, ',')) {
        const int m = p.integer(t);
        if (m < 1 || m > 3) p.fail("omega_sq_targets are mode numbers 1..3");
        ax.omega_sq_targets.push_back(m - 1);
      }
    } else if (get("coupling_axis", "omega_sq_targets")) {
      throw ConfigInvalid("omega_sq_targets needs omega_sq_factor");
    }
    const auto fixed = fixed_report_columns();
    if (ax.name.empty() || std::find(fixed.begin(), fixed.end(), ax.name) != fixed.end()) {
      throw ConfigInvalid("coupling axis name '" + ax.name + "' clashes with a report column");
    }
    cfg.coupling_axis = std::move(ax);
  }

  if (const auto* v = get("output", "csv")) cfg.csv_path = v->first;
  if (const auto* v = get("output", "svg")) cfg.svg_path = v->first;
  if (const auto* v = get("output", "quantities")) {
    cfg.quantities = split(v->first, ',');
    const auto cols = report_columns(cfg);
    for (const auto& q : cfg.quantities) {
      if (std::find(cols.begin(), cols.end(), q) == cols.end()) {
        Parser(v->second).fail("unknown quantity '" + q + "'");
      }
    }
  }

  if (sections.contains("plot")) {
    PlotSpec ps;
    if (const auto* v = get("plot", "kind")) {
      ps.kind = enum_value<PlotKind>(Parser(v->second), v->first,
                                     {{"line", PlotKind::line}, {"heatmap", PlotKind::heatmap}});
    }
    if (const auto* v = get("plot", "x")) ps.x = v->first;
    if (const auto* v = get("plot", "y")) ps.y = split(v->first, ',');
    if (ps.y.empty()) throw ConfigInvalid("[plot] needs y");
    if (const auto* v = get("plot", "group")) ps.group = v->first;
    if (const auto* v = get("plot", "z")) ps.z = v->first;
    if (const auto* v = get("plot", "title")) ps.title = v->first;
    if (const auto* v = get("plot", "width")) ps.width = Parser(v->second).integer(v->first);
    if (const auto* v = get("plot", "height")) ps.height = Parser(v->second).integer(v->first);
    cfg.plot = std::move(ps);
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigInvalid("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "[scenario]\n"
     << "name = " << c.name << '\n'
     << "symmetry = " << symmetry_name(c.symmetry) << '\n'
     << "coupling_sign = " << sign_name(c.coupling_sign) << '\n'
     << "e2_reading = " << to_string(c.e2_reading) << '\n'
     << "population = " << to_string(c.population) << "\n\n";
  os << "[parameters]\n"
     << "omega0_sq = " << join(std::vector<double>(c.omega0_sq.begin(), c.omega0_sq.end()),
                               shortest)
     << '\n'
     << "c0 = " << join(std::vector<double>(c.c0.begin(), c.c0.end()), shortest) << '\n'
     << "epsilon = " << axis_text(c.epsilon) << "\n\n";
  os << "[time]\ngrid = " << axis_text(c.time) << "\n";
  if (c.coupling_axis) {
    const CouplingAxis& a = *c.coupling_axis;
    os << "\n[coupling_axis]\n"
       << "name = " << a.name << '\n'
       << "values = " << axis_text(a.values) << '\n';
    if (!a.targets.empty()) {
      os << "targets = " << join(a.targets, [](int i) { return std::string(kCouplingNames[i]); })
         << '\n';
    }
    if (a.omega_sq_factor) {
      os << "omega_sq_factor = " << shortest(*a.omega_sq_factor) << '\n'
         << "omega_sq_targets = "
         << join(a.omega_sq_targets, [](int i) { return std::to_string(i + 1); }) << '\n';
    }
  }
  if (!c.csv_path.empty() || !c.svg_path.empty() || !c.quantities.empty()) {
    os << "\n[output]\n";
    if (!c.csv_path.empty()) os << "csv = " << c.csv_path << '\n';
    if (!c.svg_path.empty()) os << "svg = " << c.svg_path << '\n';
    if (!c.quantities.empty()) {
      os << "quantities = " << join(c.quantities, [](const std::string& s) { return s; }) << '\n';
    }
  }
  if (c.plot) {
    const PlotSpec& p = *c.plot;
    os << "\n[plot]\n"
       << "kind = " << (p.kind == PlotKind::line ? "line" : "heatmap") << '\n'
       << "x = " << p.x << '\n'
       << "y = " << join(p.y, [](const std::string& s) { return s; }) << '\n';
    if (!p.group.empty()) os << "group = " << p.group << '\n';
    if (!p.z.empty()) os << "z = " << p.z << '\n';
    if (!p.title.empty()) os << "title = " << p.title << '\n';
    os << "width = " << p.width << '\n' << "height = " << p.height << '\n';
  }
  return os.str();
}

// ----------------------------------------------------------------- running

std::vector<ScenarioPoint> scenario_points(const ScenarioConfig& config) {
  std::vector<double> axis{std::nan("")};
  if (config.coupling_axis) axis = config.coupling_axis->values.values();
  std::vector<ScenarioPoint> out;
  for (double a : axis) {
    std::array<double, 3> w2 = config.omega0_sq;
    std::array<double, 3> c = config.c0;
    if (config.coupling_axis) {
      for (int k : config.coupling_axis->targets) c[k] = a;
      if (config.coupling_axis->omega_sq_factor) {
        for (int m : config.coupling_axis->omega_sq_targets) {
          w2[m] = *config.coupling_axis->omega_sq_factor * a;
        }
      }
    }
    std::array<double, 3> w{};
    for (int i = 0; i < 3; ++i) {
      if (!(w2[i] >= 0.0)) throw ConfigInvalid("squared base frequency must be >= 0");
      w[i] = std::sqrt(w2[i]);
    }
    for (double e : config.epsilon.values()) {
      QuenchSpec spec(w, c, e, config.coupling_sign);
      validate_symmetry(config, spec);
      out.push_back({spec, a});
    }
  }
  return out;
}

std::vector<std::string> report_columns(const ScenarioConfig& config) {
  std::vector<std::string> c = fixed_report_columns();
  if (config.coupling_axis) c.insert(c.begin() + 2, config.coupling_axis->name);
  return c;
}

ResultTable run_scenario(const ScenarioConfig& config, const RunOptions& options) {
  const std::vector<ScenarioPoint> points = scenario_points(config);
  std::vector<std::optional<QuenchedSystem>> systems(points.size());
  bool any_unphysical = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      systems[i].emplace(points[i].spec);
    } catch (const UnphysicalParameters&) {
      if (!options.allow_unphysical) throw;
      any_unphysical = true;
    }
  }

  if (any_unphysical) {
    // Spectra only: the Gaussian state needs a positive-definite coupling.
    ResultTable table(spectral_columns(config));
    for (const auto& pt : points) {
      const CouplingMatrix m = coupling_matrix(pt.spec, 0.0);
      const PositivityReport pos = sylvester_positivity(m);
      const NormalModeData nm = normal_modes(m);
      std::vector<Cell> row{pt.spec.epsilon()};
      if (config.coupling_axis) row.emplace_back(pt.axis_value);
      for (double v : pt.spec.c0()) row.emplace_back(v);
      for (double v : nm.sigma2) row.emplace_back(v);
      row.emplace_back(nm.angles.psi);
      row.emplace_back(nm.angles.theta);
      row.emplace_back(nm.angles.phi);
      for (double v : pos.minors) row.emplace_back(v);
      row.emplace_back(std::string(pos.positive ? "true" : "false"));
      table.add_row(std::move(row));
    }
    return table;
  }

  const std::vector<double> times = config.time.values();
  const std::size_t nt = times.size();
  const std::size_t total = points.size() * nt;
  std::vector<std::vector<Cell>> rows(total);
  const ReportOptions ropts{config.e2_reading, config.population};
  const std::optional<double> no_axis;
  parallel_for(total, options.threads, [&](std::size_t i) {
    const std::size_t p = i / nt;
    const QuantityReport r = systems[p]->report(times[i % nt], ropts);
    const std::optional<double> axis =
        config.coupling_axis ? std::optional<double>(points[p].axis_value) : no_axis;
    rows[i] = report_row(r, points[p].spec, axis);
  });

  ResultTable table(report_columns(config));
  table.reserve(total);
  for (auto& row : rows) table.add_row(std::move(row));
  if (config.quantities.empty()) return table;

  std::vector<std::string> keep{"t", "epsilon"};
  if (config.coupling_axis) keep.push_back(config.coupling_axis->name);
  for (const auto& q : config.quantities) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) keep.push_back(q);
  }
  return table.select(keep);
}

PlotSpec default_plot(const ScenarioConfig& config) {
  if (config.plot) return *config.plot;
  PlotSpec p;
  p.title = config.name;
  p.y = {"S_L_A"};
  if (config.coupling_axis && config.coupling_axis->values.size() > 1) {
    p.group = config.coupling_axis->name;
  } else if (config.epsilon.size() > 1) {
    p.group = "epsilon";
  }
  return p;
}

SweepResult sweep(const ScenarioConfig& config, const RunOptions& options) {
  if (config.time.size() < 2) throw ConfigInvalid("sweep needs at least two time points");
  const bool eps_axis = config.epsilon.size() > 1;
  const bool c_axis = config.coupling_axis && config.coupling_axis->values.size() > 1;
  if (eps_axis && c_axis) {
    throw ConfigInvalid("sweep takes t plus one of epsilon or the coupling axis, not both");
  }
  SweepResult out{run_scenario(config, options), default_plot(config)};
  if (!out.table.has_column("t")) return out;  // spectra-only table
  if (!eps_axis && !c_axis) {
    out.plot.kind = PlotKind::line;
    out.plot.group.clear();
    return out;
  }
  PlotSpec p = out.plot;
  if (p.kind != PlotKind::heatmap) {
    p.kind = PlotKind::heatmap;
    p.z = p.y.empty() ? std::string("S_L_A") : p.y.front();
    p.x = "t";
    p.y = {eps_axis ? std::string("epsilon") : config.coupling_axis->name};
    p.group.clear();
  }
  out.plot = std::move(p);
  return out;
}

std::vector<CheckEntry> check_scenario(const ScenarioConfig& config) {
  std::vector<CheckEntry> out;
  for (const auto& pt : scenario_points(config)) {
    const CouplingMatrix m = coupling_matrix(pt.spec, 0.0);
    CheckEntry e{pt.spec, pt.axis_value, sylvester_positivity(m), normal_frequencies(m), {}};
    if (e.positivity.positive) {
      const QuenchedSystem sys(pt.spec);
      e.initial_class = classify(sys.state(0.0)).cls;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace triosc
