#include "triosc/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <variant>

#include "triosc/errors.hpp"

namespace triosc {

namespace {

constexpr int kLeft = 70;
constexpr int kRight = 150;
constexpr int kTop = 40;
constexpr int kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  // Short fixed output keeps SVG small and byte-stable.
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

std::string label(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range finite_range(const std::vector<double>& v) {
  Range r{INFINITY, -INFINITY};
  for (double x : v) {
    if (std::isfinite(x)) {
      r.lo = std::min(r.lo, x);
      r.hi = std::max(r.hi, x);
    }
  }
  if (!std::isfinite(r.lo)) return {0.0, 1.0};
  if (r.hi - r.lo <= 1e-300 * std::max(1.0, std::abs(r.lo)) || r.hi == r.lo) {
    const double pad = r.lo == 0.0 ? 1.0 : 0.05 * std::abs(r.lo);
    return {r.lo - pad, r.hi + pad};
  }
  return r;
}

std::vector<double> ticks(Range r) {
  const double raw = (r.hi - r.lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> out;
  for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 1e-9 * step; v += step) {
    out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }
  return out;
}

class Frame {
 public:
  Frame(const PlotSpec& spec, Range x, Range y)
      : w_(spec.width), h_(spec.height), x_(x), y_(y) {}

  double px(double v) const {
    return kLeft + (v - x_.lo) / (x_.hi - x_.lo) * (w_ - kLeft - kRight);
  }
  double py(double v) const {
    return h_ - kBottom - (v - y_.lo) / (y_.hi - y_.lo) * (h_ - kTop - kBottom);
  }

  void axes(std::ostream& os, const std::string& xlabel, const std::string& ylabel) const {
    const double x0 = kLeft, x1 = w_ - kRight, y0 = h_ - kBottom, y1 = kTop;
    os << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\""
       << y0 - y1 << "\" fill=\"none\" stroke=\"#000\"/>\n";
    for (double t : ticks(x_)) {
      os << "<line x1=\"" << num(px(t)) << "\" y1=\"" << y0 << "\" x2=\"" << num(px(t))
         << "\" y2=\"" << y0 + 5 << "\" stroke=\"#000\"/>"
         << "<text x=\"" << num(px(t)) << "\" y=\"" << y0 + 18
         << "\" text-anchor=\"middle\">" << label(t) << "</text>\n";
    }
    for (double t : ticks(y_)) {
      os << "<line x1=\"" << x0 - 5 << "\" y1=\"" << num(py(t)) << "\" x2=\"" << x0
         << "\" y2=\"" << num(py(t)) << "\" stroke=\"#000\"/>"
         << "<text x=\"" << x0 - 8 << "\" y=\"" << num(py(t) + 4)
         << "\" text-anchor=\"end\">" << label(t) << "</text>\n";
    }
    os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << h_ - 12
       << "\" text-anchor=\"middle\">" << xml_escape(xlabel) << "</text>\n";
    os << "<text x=\"16\" y=\"" << (y0 + y1) / 2
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << (y0 + y1) / 2 << ")\">" << xml_escape(ylabel) << "</text>\n";
  }

 private:
  int w_;
  int h_;
  Range x_;
  Range y_;
};

void header(std::ostream& os, const PlotSpec& spec) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
     << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  if (!spec.title.empty()) {
    os << "<text x=\"" << spec.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << xml_escape(spec.title) << "</text>\n";
  }
}

std::string cell_key(const Cell& c) {
  if (const double* v = std::get_if<double>(&c)) return label(*v);
  return std::get<std::string>(c);
}

std::string line_plot(const ResultTable& table, const PlotSpec& spec) {
  const std::vector<double> xs = table.numeric_column(spec.x);
  struct Series {
    std::string name;
    std::vector<std::size_t> rows;
    std::size_t ycol;
  };
  std::vector<Series> series;
  const bool grouped = !spec.group.empty();
  const std::size_t gcol = grouped ? table.column_index(spec.group) : 0;
  for (const auto& y : spec.y) {
    const std::size_t ycol = table.column_index(y);
    if (!grouped) {
      Series s{y, {}, ycol};
      for (std::size_t r = 0; r < table.size(); ++r) s.rows.push_back(r);
      series.push_back(std::move(s));
      continue;
    }
    std::map<std::string, std::size_t> slot;
    for (std::size_t r = 0; r < table.size(); ++r) {
      const std::string key = cell_key(table.rows()[r][gcol]);
      auto [it, fresh] = slot.emplace(key, series.size());
      if (fresh) {
        std::string name = spec.y.size() > 1 ? y + " " : std::string();
        series.push_back({name + spec.group + "=" + key, {}, ycol});
      }
      series[it->second].rows.push_back(r);
    }
  }

  std::vector<double> all_y;
  for (const auto& s : series) {
    for (std::size_t r : s.rows) {
      const double* v = std::get_if<double>(&table.rows()[r][s.ycol]);
      if (v) all_y.push_back(*v);
    }
  }
  const Frame frame(spec, finite_range(xs), finite_range(all_y));

  std::ostringstream os;
  header(os, spec);
  frame.axes(os, spec.x, spec.y.size() == 1 ? spec.y.front() : std::string());
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t r : s.rows) {
      const double* v = std::get_if<double>(&table.rows()[r][s.ycol]);
      if (!v || !std::isfinite(*v) || !std::isfinite(xs[r])) continue;
      if (!first) os << ' ';
      os << num(frame.px(xs[r])) << ',' << num(frame.py(*v));
      first = false;
    }
    os << "\"/>\n";
    const double ly = kTop + 10 + 16.0 * static_cast<double>(i);
    const double lx = spec.width - kRight + 10;
    os << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 20 << "\" y2=\"" << ly
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"/><text x=\"" << lx + 25 << "\" y=\""
       << ly + 4 << "\">" << xml_escape(s.name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string ramp(double f) {
  // Linear ramp from dark blue through teal to yellow.
  f = std::clamp(std::isfinite(f) ? f : 0.0, 0.0, 1.0);
  const double c0[3] = {68, 1, 84};
  const double c1[3] = {33, 145, 140};
  const double c2[3] = {253, 231, 37};
  const double* a = f < 0.5 ? c0 : c1;
  const double* b = f < 0.5 ? c1 : c2;
  const double u = f < 0.5 ? 2.0 * f : 2.0 * f - 1.0;
  char buf[8];
  auto channel = [&](int k) { return static_cast<int>(std::lround(a[k] + u * (b[k] - a[k]))); };
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(0), channel(1), channel(2));
  return buf;
}

std::vector<double> distinct_sorted(std::vector<double> v) {
  std::erase_if(v, [](double x) { return !std::isfinite(x); });
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string heatmap(const ResultTable& table, const PlotSpec& spec) {
  if (spec.z.empty()) throw InvalidArgument("heatmap needs a z column");
  const std::vector<double> xs = table.numeric_column(spec.x);
  const std::vector<double> ys = table.numeric_column(spec.y.front());
  const std::vector<double> zs = table.numeric_column(spec.z);
  const std::vector<double> ux = distinct_sorted(xs);
  const std::vector<double> uy = distinct_sorted(ys);
  const Range zr = finite_range(zs);

  auto edges = [](const std::vector<double>& u) {
    std::vector<double> e(u.size() + 1);
    if (u.size() == 1) return std::vector<double>{u[0] - 0.5, u[0] + 0.5};
    for (std::size_t i = 1; i < u.size(); ++i) e[i] = 0.5 * (u[i - 1] + u[i]);
    e.front() = u.front() - (e[1] - u.front());
    e.back() = u.back() + (u.back() - e[u.size() - 1]);
    return e;
  };
  const std::vector<double> ex = edges(ux);
  const std::vector<double> ey = edges(uy);
  const Frame frame(spec, {ex.front(), ex.back()}, {ey.front(), ey.back()});

  std::ostringstream os;
  header(os, spec);
  os << "<g shape-rendering=\"crispEdges\">\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (!std::isfinite(xs[r]) || !std::isfinite(ys[r])) continue;
    const auto i = static_cast<std::size_t>(std::ranges::lower_bound(ux, xs[r]) - ux.begin());
    const auto j = static_cast<std::size_t>(std::ranges::lower_bound(uy, ys[r]) - uy.begin());
    const double x0 = frame.px(ex[i]);
    const double x1 = frame.px(ex[i + 1]);
    const double y0 = frame.py(ey[j + 1]);
    const double y1 = frame.py(ey[j]);
    const std::string fill =
        std::isfinite(zs[r]) ? ramp((zs[r] - zr.lo) / (zr.hi - zr.lo)) : std::string("#cccccc");
    os << "<rect class=\"cell\" x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\""
       << num(x1 - x0 + 0.3) << "\" height=\"" << num(y1 - y0 + 0.3) << "\" fill=\"" << fill
       << "\"/>\n";
  }
  os << "</g>\n";
  frame.axes(os, spec.x, spec.y.front());
  // Color bar.
  const double bx = spec.width - kRight + 20;
  const double btop = kTop;
  const double bh = spec.height - kTop - kBottom;
  constexpr int kSteps = 32;
  for (int k = 0; k < kSteps; ++k) {
    const double f = (k + 0.5) / kSteps;
    os << "<rect x=\"" << bx << "\" y=\"" << num(btop + bh * (1.0 - (k + 1.0) / kSteps))
       << "\" width=\"16\" height=\"" << num(bh / kSteps + 0.3) << "\" fill=\"" << ramp(f)
       << "\"/>\n";
  }
  os << "<text x=\"" << bx + 22 << "\" y=\"" << btop + 8 << "\">" << label(zr.hi) << "</text>\n"
     << "<text x=\"" << bx + 22 << "\" y=\"" << num(btop + bh) << "\">" << label(zr.lo)
     << "</text>\n"
     << "<text x=\"" << bx << "\" y=\"" << btop - 8 << "\">" << xml_escape(spec.z) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string emit_plot(const ResultTable& table, const PlotSpec& spec) {
  if (spec.y.empty()) throw InvalidArgument("plot needs at least one y column");
  if (spec.width < kLeft + kRight + 50 || spec.height < kTop + kBottom + 50) {
    throw InvalidArgument("plot is too small");
  }
  table.column_index(spec.x);
  for (const auto& y : spec.y) table.column_index(y);
  if (spec.kind == PlotKind::heatmap) {
    if (spec.y.size() != 1) throw InvalidArgument("heatmap takes exactly one y column");
    return heatmap(table, spec);
  }
  return line_plot(table, spec);
}

}  // namespace triosc
