#include <algorithm>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "woac/harness.hpp"

namespace woac {

namespace fs = std::filesystem;

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round-ish tick step covering `span` in about five intervals.
double tick_step(double span) {
  if (!(span > 0)) return 1.0;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= f * mag) return f * mag;
  }
  return 10.0 * mag;
}

std::string series_csv(const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& series) {
  std::string out = "round";
  for (const auto& n : names) out += "," + n;
  out += "\n";
  std::size_t length = 0;
  for (const auto& s : series) length = std::max(length, s.size());
  for (std::size_t k = 0; k < length; ++k) {
    out += fmt::format("{}", k + 1);
    for (const auto& s : series) out += k < s.size() ? fmt::format(",{}", s[k]) : std::string(",");
    out += "\n";
  }
  return out;
}

}  // namespace

std::string line_chart_svg(const std::string& title, const std::string& y_label,
                           const std::vector<std::string>& names,
                           const std::vector<std::vector<double>>& series) {
  constexpr double W = 800, H = 500, L = 80, R = 160, T = 40, B = 60;
  std::size_t length = 1;
  double ymax = 0.0;
  for (const auto& s : series) {
    length = std::max(length, s.size());
    for (double v : s) ymax = std::max(ymax, v);
  }
  if (!(ymax > 0)) ymax = 1.0;
  const double xstep = tick_step(static_cast<double>(length));
  const double ystep = tick_step(ymax);
  ymax = std::ceil(ymax / ystep) * ystep;
  const double xmax = std::max(1.0, std::ceil(static_cast<double>(length) / xstep) * xstep);
  auto px = [&](double x) { return L + (W - L - R) * x / xmax; };
  auto py = [&](double y) { return H - B - (H - T - B) * y / ymax; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
      W, H, (L + W - R) / 2, escape(title));
  for (double x = 0; x <= xmax + 1e-9; x += xstep) {
    svg += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"#ddd\"/>"
        "<text x=\"{0:.1f}\" y=\"{3:.1f}\" text-anchor=\"middle\">{4:g}</text>\n",
        px(x), py(0), py(ymax), H - B + 18, x);
  }
  for (double y = 0; y <= ymax + 1e-9 * ymax; y += ystep) {
    svg += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"#ddd\"/>"
        "<text x=\"{3:.1f}\" y=\"{4:.1f}\" text-anchor=\"end\">{5:g}</text>\n",
        px(0), py(y), px(xmax), L - 6, py(y) + 4, y);
  }
  svg += fmt::format(
      "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">round</text>\n"
      "<text x=\"18\" y=\"{:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.1f})\">{}</text>\n",
      (L + W - R) / 2, H - 16, (T + H - B) / 2, (T + H - B) / 2, escape(y_label));

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    std::string pts;
    // Thin long series so files stay small; keep the final point.
    const std::size_t stride = std::max<std::size_t>(1, series[i].size() / 2000);
    for (std::size_t k = 0; k < series[i].size(); k += stride) {
      pts += fmt::format("{:.1f},{:.1f} ", px(static_cast<double>(k + 1)), py(series[i][k]));
    }
    if (!series[i].empty()) {
      pts += fmt::format("{:.1f},{:.1f}", px(static_cast<double>(series[i].size())),
                         py(series[i].back()));
    }
    svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                       color, pts);
    const double ly = T + 20.0 * static_cast<double>(i) + 10;
    svg += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"{3}\" stroke-width=\"3\"/>"
        "<text x=\"{4:.1f}\" y=\"{5:.1f}\">{6}</text>\n",
        W - R + 15, ly, W - R + 40, color, W - R + 46, ly + 4,
        escape(i < names.size() ? names[i] : fmt::format("series {}", i)));
  }
  svg += "</svg>\n";
  return svg;
}

PlotReport emit_plots(const ExperimentResult& result, const fs::path& dir) {
  PlotReport report;
  if (result.series.empty()) {
    report.notes.push_back("plots skipped: no aggregate series");
    return report;
  }
  struct Metric {
    const char* key;
    const char* title;
    const char* y_label;
    const std::vector<std::vector<double>> ScenarioSeries::*data;
  };
  const Metric metrics[] = {
      {"residual", "Total residual energy", "residual energy (J)", &ScenarioSeries::residual},
      {"dead", "Dead nodes", "dead nodes", &ScenarioSeries::dead},
      {"throughput", "Throughput", "bits delivered per round", &ScenarioSeries::throughput},
  };
  for (const auto& s : result.series) {
    for (const auto& m : metrics) {
      const auto& data = s.*(m.data);
      const bool empty = data.empty() || std::all_of(data.begin(), data.end(),
                                                     [](const auto& v) { return v.empty(); });
      if (empty) {
        report.notes.push_back(fmt::format("{} {}: missing series, plot skipped", s.scenario, m.key));
        continue;
      }
      fs::create_directories(dir);
      const fs::path csv = dir / fmt::format("{}_{}.csv", s.scenario, m.key);
      const fs::path svg = dir / fmt::format("{}_{}.svg", s.scenario, m.key);
      std::ofstream(csv, std::ios::binary) << series_csv(s.strategies, data);
      std::ofstream(svg, std::ios::binary)
          << line_chart_svg(fmt::format("{} ({})", m.title, s.scenario), m.y_label, s.strategies, data);
      report.files.push_back(svg);
      report.files.push_back(csv);
    }
  }
  return report;
}

}  // namespace woac
