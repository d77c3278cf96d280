// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// Metrics-to-SVG rendering: one panel per split, accuracy as a red solid
// line, loss as a blue dashed line, both against the epoch axis.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "qnnbench/errors.hpp"
#include "qnnbench/harness.hpp"
#include "qnnbench/metrics.hpp"

namespace qnnbench {

namespace {

constexpr double kPanelWidth = 720.0;
constexpr double kPanelHeight = 240.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 40.0;

struct Series {
  std::vector<int> epochs;
  std::vector<double> loss;
  std::vector<double> accuracy;
};

std::string polyline_points(const std::vector<int>& epochs,
                            const std::vector<double>& values, int max_epoch,
                            double vmax, double y_top) {
  double plot_w = kPanelWidth - kMarginLeft - kMarginRight;
  double plot_h = kPanelHeight - kMarginTop - kMarginBottom;
  std::ostringstream pts;
  for (std::size_t i = 0; i < epochs.size(); ++i) {
    double fx = max_epoch > 1
                    ? static_cast<double>(epochs[i] - 1) / (max_epoch - 1)
                    : 0.5;
    double fy = vmax > 0.0 ? values[i] / vmax : 0.0;
    double x = kMarginLeft + fx * plot_w;
    double y = y_top + kMarginTop + (1.0 - fy) * plot_h;
    if (i) pts << ' ';
    pts << format_double(x) << ',' << format_double(y);
  }
  return pts.str();
}

void render_panel(std::ostringstream& svg, const Series& s, const char* split,
                  int max_epoch, double y_top) {
  double plot_w = kPanelWidth - kMarginLeft - kMarginRight;
  double plot_h = kPanelHeight - kMarginTop - kMarginBottom;
  double x0 = kMarginLeft;
  double y0 = y_top + kMarginTop;
  double loss_max = *std::max_element(s.loss.begin(), s.loss.end());

  svg << "  <g data-split=\"" << split << "\">\n";
  svg << "    <text x=\"" << format_double(x0) << "\" y=\""
      << format_double(y_top + 22.0) << "\" font-size=\"14\">" << split
      << " split</text>\n";
  // Axes.
  svg << "    <rect x=\"" << format_double(x0) << "\" y=\""
      << format_double(y0) << "\" width=\"" << format_double(plot_w)
      << "\" height=\"" << format_double(plot_h)
      << "\" fill=\"none\" stroke=\"#888888\"/>\n";
  svg << "    <text x=\"" << format_double(x0 + plot_w / 2.0) << "\" y=\""
      << format_double(y0 + plot_h + 30.0)
      << "\" font-size=\"11\" text-anchor=\"middle\">epoch (1.."
      << max_epoch << ")</text>\n";
  svg << "    <text x=\"" << format_double(x0 - 40.0) << "\" y=\""
      << format_double(y0 + 10.0)
      << "\" font-size=\"11\">1.0</text>\n";
  svg << "    <text x=\"" << format_double(x0 - 40.0) << "\" y=\""
      << format_double(y0 + plot_h)
      << "\" font-size=\"11\">0.0</text>\n";
  // Loss, scaled by its own maximum so the curve shape stays readable.
  svg << "    <polyline data-series=\"loss\" data-split=\"" << split
      << "\" data-final=\"" << format_double(s.loss.back())
      << "\" data-max=\"" << format_double(loss_max)
      << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6 3\" points=\""
      << polyline_points(s.epochs, s.loss, max_epoch, loss_max, y_top)
      << "\"/>\n";
  // Accuracy on the fixed [0, 1] scale.
  svg << "    <polyline data-series=\"accuracy\" data-split=\"" << split
      << "\" data-final=\"" << format_double(s.accuracy.back())
      << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" "
         "points=\""
      << polyline_points(s.epochs, s.accuracy, max_epoch, 1.0, y_top)
      << "\"/>\n";
  svg << "    <text x=\"" << format_double(x0 + plot_w - 4.0) << "\" y=\""
      << format_double(y0 + 14.0)
      << "\" font-size=\"11\" text-anchor=\"end\" fill=\"#d62728\">accuracy"
         "</text>\n";
  svg << "    <text x=\"" << format_double(x0 + plot_w - 4.0) << "\" y=\""
      << format_double(y0 + 28.0)
      << "\" font-size=\"11\" text-anchor=\"end\" fill=\"#1f77b4\">loss (max "
      << format_double(loss_max) << ")</text>\n";
  svg << "  </g>\n";
}

}  // namespace

void emit_plot(const std::string& metrics_csv, const std::string& out_svg) {
  std::vector<MetricsRecord> records = read_metrics_csv(metrics_csv);
  if (records.empty()) {
    throw DataError(metrics_csv + ": no metrics rows to plot");
  }

  Series train, test;
  int max_epoch = 1;
  for (const auto& r : records) {
    Series& s = (r.split == Split::kTrain) ? train : test;
    s.epochs.push_back(r.epoch);
    s.loss.push_back(r.loss);
    s.accuracy.push_back(r.accuracy);
    max_epoch = std::max(max_epoch, r.epoch);
  }

  std::vector<std::pair<const char*, const Series*>> panels;
  if (!train.epochs.empty()) panels.push_back({"train", &train});
  if (!test.epochs.empty()) panels.push_back({"test", &test});

  double total_height = kPanelHeight * panels.size();
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << format_double(kPanelWidth) << "\" height=\""
      << format_double(total_height) << "\" viewBox=\"0 0 "
      << format_double(kPanelWidth) << ' ' << format_double(total_height)
      << "\" font-family=\"sans-serif\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(svg, *panels[i].second, panels[i].first, max_epoch,
                 kPanelHeight * i);
  }
  svg << "</svg>\n";

  std::ofstream out(out_svg, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write SVG: " + out_svg);
  out << svg.str();
  if (!out) throw std::runtime_error("write failed: " + out_svg);
}

}  // namespace qnnbench
