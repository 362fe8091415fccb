#include "sagin/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <tuple>
#include <vector>

namespace sagin {

namespace {

constexpr const char* kHeader = "users,framework,metric,mean,ci95";
constexpr const char* kCapacityMetric = "capacity_bps";
constexpr const char* kEeMetric = "ee_bps_per_w";

// Shortest representation that parses back to the same double.
std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

// Fixed-precision label for plot text.
std::string format_label(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 4);
  return std::string(buf.data(), res.ptr);
}

std::string format_coord(double v) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing: " + std::strerror(errno));
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path + ": " + std::strerror(errno));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <class T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw IoError("csv line " + std::to_string(line) + ": bad number '" + std::string(field) +
                  "'");
  }
  return value;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string format_csv(const SweepResult& result) {
  struct Row {
    int users;
    std::string framework;
    std::string metric;
    Estimate value;
  };
  std::vector<Row> rows;
  rows.reserve(result.points.size() * 2);
  for (const auto& p : result.points) {
    rows.push_back({p.users, framework_id(p.framework), kCapacityMetric, p.capacity_bps});
    rows.push_back({p.users, framework_id(p.framework), kEeMetric, p.ee_bps_per_w});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.users, a.framework, a.metric) < std::tie(b.users, b.framework, b.metric);
  });

  std::string out = kHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.users);
    out += ',';
    out += r.framework;
    out += ',';
    out += r.metric;
    out += ',';
    out += format_number(r.value.mean);
    out += ',';
    out += format_number(r.value.ci95);
    out += '\n';
  }
  return out;
}

void write_csv(const SweepResult& result, const std::string& path) {
  write_file(path, format_csv(result));
}

SweepResult parse_csv(const std::string& text) {
  const auto lines = split(text, '\n');
  if (lines.empty() || lines.front() != kHeader) throw IoError("csv: missing or wrong header");

  std::map<std::pair<int, FrameworkKind>, SweepPoint> points;
  std::vector<int> counts;
  std::vector<FrameworkKind> frameworks;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty()) {
      if (i + 1 == lines.size()) break;
      throw IoError("csv line " + std::to_string(i + 1) + ": empty row");
    }
    const auto f = split(line, ',');
    if (f.size() != 5) {
      throw IoError("csv line " + std::to_string(i + 1) + ": expected 5 fields");
    }
    const int users = parse_field<int>(f[0], i + 1);
    const auto kind = parse_framework(f[1]);
    if (!kind) {
      throw IoError("csv line " + std::to_string(i + 1) + ": unknown framework '" +
                    std::string(f[1]) + "'");
    }
    const Estimate e{parse_field<double>(f[3], i + 1), parse_field<double>(f[4], i + 1)};
    SweepPoint& p = points[{users, *kind}];
    p.users = users;
    p.framework = *kind;
    if (f[2] == kCapacityMetric) {
      p.capacity_bps = e;
    } else if (f[2] == kEeMetric) {
      p.ee_bps_per_w = e;
    } else {
      throw IoError("csv line " + std::to_string(i + 1) + ": unknown metric '" +
                    std::string(f[2]) + "'");
    }
    if (std::find(counts.begin(), counts.end(), users) == counts.end()) counts.push_back(users);
    if (std::find(frameworks.begin(), frameworks.end(), *kind) == frameworks.end()) {
      frameworks.push_back(*kind);
    }
  }

  SweepResult out;
  std::sort(counts.begin(), counts.end());
  std::sort(frameworks.begin(), frameworks.end());
  out.user_counts = counts;
  out.frameworks = frameworks;
  for (int c : counts) {
    for (FrameworkKind k : frameworks) {
      const auto it = points.find({c, k});
      if (it != points.end()) out.points.push_back(it->second);
    }
  }
  return out;
}

std::string render_svg(const SweepResult& result, PlotMetric metric) {
  if (result.points.empty()) throw std::invalid_argument("cannot plot an empty sweep");

  constexpr double kWidth = 720.0;
  constexpr double kHeight = 480.0;
  constexpr double kLeft = 90.0;
  constexpr double kRight = 180.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 60.0;
  constexpr int kTicks = 5;

  auto value_of = [metric](const SweepPoint& p) {
    return metric == PlotMetric::kCapacity ? p.capacity_bps : p.ee_bps_per_w;
  };

  double x_min = result.points.front().users;
  double x_max = x_min;
  double y_min = value_of(result.points.front()).mean;
  double y_max = y_min;
  for (const auto& p : result.points) {
    const Estimate e = value_of(p);
    x_min = std::min<double>(x_min, p.users);
    x_max = std::max<double>(x_max, p.users);
    y_min = std::min(y_min, e.mean - e.ci95);
    y_max = std::max(y_max, e.mean + e.ci95);
  }
  auto pad = [](double& lo, double& hi) {
    double span = hi - lo;
    if (span <= 0.0) span = std::max(std::abs(hi), 1.0);
    lo -= 0.05 * span;
    hi += 0.05 * span;
  };
  pad(x_min, x_max);
  pad(y_min, y_max);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) { return kTop + (y_max - y) / (y_max - y_min) * plot_h; };

  const bool capacity = metric == PlotMetric::kCapacity;
  const std::string title = capacity ? "Total network capacity" : "Energy efficiency";
  const std::string y_label = capacity ? "capacity (bps)" : "energy efficiency (bps/W)";

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
    << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
    << "<title>" << title << "</title>\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" fill=\"white\"/>\n";

  // Axes carry their data range so the layout can be checked without
  // re-deriving the transform.
  s << "<g id=\"axes\" font-family=\"sans-serif\" font-size=\"12\" data-x-min=\""
    << format_number(x_min) << "\" data-x-max=\"" << format_number(x_max) << "\" data-y-min=\""
    << format_number(y_min) << "\" data-y-max=\"" << format_number(y_max) << "\">\n";
  s << "<line x1=\"" << format_coord(kLeft) << "\" y1=\"" << format_coord(kTop + plot_h)
    << "\" x2=\"" << format_coord(kLeft + plot_w) << "\" y2=\"" << format_coord(kTop + plot_h)
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << format_coord(kLeft) << "\" y1=\"" << format_coord(kTop) << "\" x2=\""
    << format_coord(kLeft) << "\" y2=\"" << format_coord(kTop + plot_h)
    << "\" stroke=\"black\"/>\n";
  for (int c : result.user_counts) {
    const double x = sx(c);
    s << "<line x1=\"" << format_coord(x) << "\" y1=\"" << format_coord(kTop + plot_h)
      << "\" x2=\"" << format_coord(x) << "\" y2=\"" << format_coord(kTop + plot_h + 5)
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << format_coord(x) << "\" y=\"" << format_coord(kTop + plot_h + 20)
      << "\" text-anchor=\"middle\">" << c << "</text>\n";
  }
  for (int i = 0; i <= kTicks; ++i) {
    const double v = y_min + (y_max - y_min) * i / kTicks;
    const double y = sy(v);
    s << "<line x1=\"" << format_coord(kLeft - 5) << "\" y1=\"" << format_coord(y) << "\" x2=\""
      << format_coord(kLeft) << "\" y2=\"" << format_coord(y) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << format_coord(kLeft - 8) << "\" y=\"" << format_coord(y + 4)
      << "\" text-anchor=\"end\">" << format_label(v) << "</text>\n";
  }
  s << "<text x=\"" << format_coord(kLeft + plot_w / 2) << "\" y=\""
    << format_coord(kHeight - 15) << "\" text-anchor=\"middle\">number of users</text>\n"
    << "<text x=\"20\" y=\"" << format_coord(kTop + plot_h / 2)
    << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << format_coord(kTop + plot_h / 2)
    << ")\">" << y_label << "</text>\n"
    << "<text x=\"" << format_coord(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\">"
    << title << "</text>\n"
    << "</g>\n";

  for (std::size_t f = 0; f < result.frameworks.size(); ++f) {
    const FrameworkKind kind = result.frameworks[f];
    const char* color = kPalette[f % std::size(kPalette)];
    std::vector<const SweepPoint*> series;
    for (const auto& p : result.points) {
      if (p.framework == kind) series.push_back(&p);
    }
    std::sort(series.begin(), series.end(),
              [](const SweepPoint* a, const SweepPoint* b) { return a->users < b->users; });

    s << "<g class=\"series\" id=\"series-" << framework_id(kind) << "\">\n<polyline fill=\"none\" stroke=\""
      << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (i > 0) s << ' ';
      s << format_coord(sx(series[i]->users)) << ',' << format_coord(sy(value_of(*series[i]).mean));
    }
    s << "\"/>\n";
    for (const SweepPoint* p : series) {
      const Estimate e = value_of(*p);
      const double x = sx(p->users);
      const double lo = sy(e.mean - e.ci95);
      const double hi = sy(e.mean + e.ci95);
      s << "<path class=\"ci\" stroke=\"" << color << "\" d=\"M" << format_coord(x - 4) << ' '
        << format_coord(hi) << " H" << format_coord(x + 4) << " M" << format_coord(x) << ' '
        << format_coord(hi) << " V" << format_coord(lo) << " M" << format_coord(x - 4) << ' '
        << format_coord(lo) << " H" << format_coord(x + 4) << "\"/>\n"
        << "<circle cx=\"" << format_coord(x) << "\" cy=\"" << format_coord(sy(e.mean))
        << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    s << "</g>\n";
  }

  s << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t f = 0; f < result.frameworks.size(); ++f) {
    const double y = kTop + 10 + 20.0 * static_cast<double>(f);
    const double x = kWidth - kRight + 20;
    s << "<line x1=\"" << format_coord(x) << "\" y1=\"" << format_coord(y) << "\" x2=\""
      << format_coord(x + 24) << "\" y2=\"" << format_coord(y) << "\" stroke=\""
      << kPalette[f % std::size(kPalette)] << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << format_coord(x + 30) << "\" y=\"" << format_coord(y + 4) << "\">"
      << framework_id(result.frameworks[f]) << "</text>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

void emit_plot(const SweepResult& result, const std::string& path_prefix) {
  const std::string cap = render_svg(result, PlotMetric::kCapacity);
  const std::string ee = render_svg(result, PlotMetric::kEnergyEfficiency);
  write_file(path_prefix + "_capacity.svg", cap);
  write_file(path_prefix + "_ee.svg", ee);
}

}  // namespace sagin
