// Copyright 2026 The UMV Design Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "umv/cli/output.h"
#include "umv/common/number_format.h"

namespace umv::cli {
namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 72, kRight = 130, kTop = 36, kBottom = 52;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#ff7f0e", "#9467bd", "#8c564b"};

std::string Num(double v) { return FormatSignificant(v, 6); }

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
  // Pads a degenerate range so the mapping stays finite.
  void Settle() {
    if (empty()) {
      lo = 0;
      hi = 1;
    } else if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      const double pad = std::max(1e-3, 0.05 * std::abs(hi));
      lo -= pad;
      hi += pad;
    }
  }
};

class Canvas {
 public:
  Canvas(Range x, Range y, const std::string& title, const std::string& xlabel,
         const std::string& ylabel)
      : x_(x), y_(y) {
    x_.Settle();
    y_.Settle();
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(kWidth) +
             "\" height=\"" + Num(kHeight) + "\" viewBox=\"0 0 " + Num(kWidth) +
             " " + Num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    Text(kWidth / 2, 20, title, "middle", 13);
    Text(kLeft + PlotWidth() / 2, kHeight - 12, xlabel, "middle");
    body_ += "<text transform=\"translate(16," + Num(kTop + PlotHeight() / 2) +
             ") rotate(-90)\" text-anchor=\"middle\">" + Escape(ylabel) +
             "</text>\n";
  }

  static double PlotWidth() { return kWidth - kLeft - kRight; }
  static double PlotHeight() { return kHeight - kTop - kBottom; }

  double X(double v) const {
    return kLeft + (v - x_.lo) / (x_.hi - x_.lo) * PlotWidth();
  }
  double Y(double v) const {
    return kTop + PlotHeight() - (v - y_.lo) / (y_.hi - y_.lo) * PlotHeight();
  }

  void Frame(bool x_ticks = true, bool y_ticks = true) {
    body_ += "<rect x=\"" + Num(kLeft) + "\" y=\"" + Num(kTop) + "\" width=\"" +
             Num(PlotWidth()) + "\" height=\"" + Num(PlotHeight()) +
             "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
      if (x_ticks) {
        const double v = x_.lo + (x_.hi - x_.lo) * i / 4;
        const double px = X(v);
        Line(px, kTop + PlotHeight(), px, kTop + PlotHeight() + 4, "black");
        Text(px, kTop + PlotHeight() + 16, FormatSignificant(v, 3), "middle");
      }
      if (y_ticks) {
        const double v = y_.lo + (y_.hi - y_.lo) * i / 4;
        const double py = Y(v);
        Line(kLeft - 4, py, kLeft, py, "black");
        Text(kLeft - 6, py + 4, FormatSignificant(v, 3), "end");
      }
    }
  }

  void Line(double x1, double y1, double x2, double y2, const std::string& color,
            const std::string& extra = "") {
    body_ += "<line x1=\"" + Num(x1) + "\" y1=\"" + Num(y1) + "\" x2=\"" +
             Num(x2) + "\" y2=\"" + Num(y2) + "\" stroke=\"" + color + "\"" +
             extra + "/>\n";
  }

  void Text(double x, double y, const std::string& s, const std::string& anchor,
            int size = 11) {
    body_ += "<text x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" text-anchor=\"" +
             anchor + "\"" +
             (size != 11 ? " font-size=\"" + std::to_string(size) + "\"" : "") +
             ">" + Escape(s) + "</text>\n";
  }

  // Polyline through the finite points; NaN breaks the line.
  void Series(const std::vector<double>& xs, const std::vector<double>& ys,
              const std::string& color, bool markers) {
    std::string pts;
    auto flush = [&] {
      if (!pts.empty()) {
        body_ += "<polyline fill=\"none\" stroke=\"" + color +
                 "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
      }
      pts.clear();
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(ys[i])) {
        flush();
        continue;
      }
      if (!pts.empty()) pts += ' ';
      pts += Num(X(xs[i])) + "," + Num(Y(ys[i]));
      if (markers) {
        body_ += "<circle cx=\"" + Num(X(xs[i])) + "\" cy=\"" + Num(Y(ys[i])) +
                 "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
      }
    }
    flush();
  }

  void Legend(int slot, const std::string& label, const std::string& color,
              bool dashed = false) {
    const double x = kLeft + PlotWidth() + 12;
    const double y = kTop + 10 + 16 * slot;
    Line(x, y - 4, x + 18, y - 4, color,
         dashed ? " stroke-width=\"1.5\" stroke-dasharray=\"5,3\""
                : " stroke-width=\"1.5\"");
    Text(x + 22, y, label, "start");
  }

  void Raw(const std::string& s) { body_ += s; }

  std::string Finish() { return body_ + "</svg>\n"; }

 private:
  Range x_, y_;
  std::string body_;
};

std::string Star(double cx, double cy, double r) {
  std::string pts;
  for (int k = 0; k < 10; ++k) {
    const double radius = (k % 2 == 0) ? r : 0.4 * r;
    const double a = -std::numbers::pi / 2 + k * std::numbers::pi / 5;
    if (!pts.empty()) pts += ' ';
    pts += Num(cx + radius * std::cos(a)) + "," + Num(cy + radius * std::sin(a));
  }
  return "<polygon class=\"marked\" points=\"" + pts +
         "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
}

// Position of v along the axis, in fractional grid indices.
double FractionalIndex(const std::vector<double>& values, double v) {
  if (values.size() < 2) return 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double a = values[i], b = values[i + 1];
    if ((v - a) * (v - b) <= 0 && a != b) return i + (v - a) / (b - a);
  }
  return std::abs(v - values.front()) < std::abs(v - values.back())
             ? 0
             : values.size() - 1.0;
}

// Perceptually ordered ramp, dark blue to yellow.
std::string Color(double t) {
  static const double stops[][3] = {{68, 1, 84},    {59, 82, 139},
                                    {33, 145, 140}, {94, 201, 98},
                                    {253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0) * 4;
  const int i = std::min(3, static_cast<int>(t));
  const double f = t - i;
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c) {
    rgb[c] = static_cast<int>(std::lround(stops[i][c] + f * (stops[i + 1][c] - stops[i][c])));
  }
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string AxisValue(const SweepAxis& axis, std::size_t i) {
  return axis.labels.empty() ? FormatSignificant(axis.values[i], 4)
                             : axis.labels[i];
}

std::string LineChart(const SweepResult& r, std::size_t m) {
  const SweepAxis& ax = r.axes[0];
  Range xr, yr;
  std::vector<double> ys(r.points.size());
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    xr.Add(ax.values[i]);
    ys[i] = r.points[i].metrics[m];
    yr.Add(ys[i]);
  }
  Canvas c(xr, yr, r.study, ax.name, r.metric_names[m]);
  c.Frame(ax.labels.empty(), true);
  if (!ax.labels.empty()) {
    for (std::size_t i = 0; i < ax.values.size(); ++i) {
      c.Text(c.X(ax.values[i]), kTop + Canvas::PlotHeight() + 16, ax.labels[i],
             "middle");
    }
  }
  c.Series(ax.values, ys, kPalette[0], true);
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    if (!r.points[i].ok()) {
      const double px = c.X(ax.values[i]), py = kTop + Canvas::PlotHeight() - 6;
      c.Line(px - 3, py - 3, px + 3, py + 3, "#d62728");
      c.Line(px - 3, py + 3, px + 3, py - 3, "#d62728");
    }
  }
  if (r.marked_point && r.marked_point->size() == 1) {
    const double v = (*r.marked_point)[0];
    if (std::isfinite(v) && v >= xr.lo && v <= xr.hi) {
      c.Line(c.X(v), kTop, c.X(v), kTop + Canvas::PlotHeight(), "#555555",
             " class=\"marked\" stroke-dasharray=\"2,3\"");
    }
  }
  return c.Finish();
}

std::string SeriesChart(const SweepResult& r, std::size_t m) {
  const SweepAxis& group = r.axes[0];
  const SweepAxis& ax = r.axes[1];
  Range xr, yr;
  for (double v : ax.values) xr.Add(v);
  for (const auto& p : r.points) yr.Add(p.metrics[m]);
  Canvas c(xr, yr, r.study, ax.name, r.metric_names[m]);
  c.Frame();
  for (std::size_t g = 0; g < group.values.size(); ++g) {
    std::vector<double> ys(ax.values.size());
    for (std::size_t i = 0; i < ax.values.size(); ++i) {
      ys[i] = r.points[r.index({g, i})].metrics[m];
    }
    const char* color = kPalette[g % std::size(kPalette)];
    c.Series(ax.values, ys, color, true);
    c.Legend(static_cast<int>(g), group.name + " = " + AxisValue(group, g), color);
  }
  return c.Finish();
}

std::string HeatMap(const SweepResult& r, std::size_t m) {
  const SweepAxis& ax = r.axes[0];
  const SweepAxis& ay = r.axes[1];
  const std::size_t nx = ax.values.size(), ny = ay.values.size();
  Range xr{-0.5, nx - 0.5}, yr{-0.5, ny - 0.5}, vr;
  for (const auto& p : r.points) vr.Add(p.metrics[m]);
  vr.Settle();
  Canvas c(xr, yr, r.study + ": " + r.metric_names[m], ax.name, ay.name);
  const double cw = Canvas::PlotWidth() / nx, ch = Canvas::PlotHeight() / ny;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double v = r.points[r.index({i, j})].metrics[m];
      const std::string fill =
          std::isfinite(v) ? Color((v - vr.lo) / (vr.hi - vr.lo)) : "#bbbbbb";
      c.Raw("<rect x=\"" + Num(c.X(i - 0.5)) + "\" y=\"" + Num(c.Y(j + 0.5)) +
            "\" width=\"" + Num(cw) + "\" height=\"" + Num(ch) + "\" fill=\"" +
            fill + "\"/>\n");
    }
  }
  c.Frame(false, false);
  const std::size_t step_x = std::max<std::size_t>(1, nx / 5);
  for (std::size_t i = 0; i < nx; i += step_x) {
    c.Text(c.X(i), kTop + Canvas::PlotHeight() + 16, AxisValue(ax, i), "middle");
  }
  const std::size_t step_y = std::max<std::size_t>(1, ny / 5);
  for (std::size_t j = 0; j < ny; j += step_y) {
    c.Text(kLeft - 6, c.Y(j) + 4, AxisValue(ay, j), "end");
  }
  // Color bar.
  const double bx = kLeft + Canvas::PlotWidth() + 16;
  for (int k = 0; k < 20; ++k) {
    c.Raw("<rect x=\"" + Num(bx) + "\" y=\"" +
          Num(kTop + Canvas::PlotHeight() * (19 - k) / 20.0) +
          "\" width=\"14\" height=\"" + Num(Canvas::PlotHeight() / 20.0 + 0.5) +
          "\" fill=\"" + Color((k + 0.5) / 20) + "\"/>\n");
  }
  c.Text(bx + 18, kTop + 8, FormatSignificant(vr.hi, 3), "start");
  c.Text(bx + 18, kTop + Canvas::PlotHeight(), FormatSignificant(vr.lo, 3),
         "start");
  if (r.marked_point && r.marked_point->size() == 2) {
    const double fx = FractionalIndex(ax.values, (*r.marked_point)[0]);
    const double fy = FractionalIndex(ay.values, (*r.marked_point)[1]);
    c.Raw(Star(c.X(fx), c.Y(fy), 9));
  }
  return c.Finish();
}

}  // namespace

std::optional<std::string> RenderSweepSvg(const SweepResult& r,
                                          std::string* warning,
                                          const std::string& metric) {
  r.check_shape();
  auto warn = [&](const std::string& w) -> std::optional<std::string> {
    if (warning) *warning = w;
    return std::nullopt;
  };
  if (r.metric_names.empty() || r.axes.empty() || r.axes.size() > 2) {
    return warn("no plot for this result shape");
  }
  const std::size_t m = metric.empty() ? 0 : r.metric_index(metric);
  bool any = false;
  for (const auto& p : r.points) any = any || std::isfinite(p.metrics[m]);
  if (!any) return warn("no finite values of " + r.metric_names[m] + "; plot omitted");
  if (r.axes.size() == 1) return LineChart(r, m);
  if (!r.axes[0].labels.empty() || r.axes[0].values.size() <= 4) {
    return SeriesChart(r, m);
  }
  return HeatMap(r, m);
}

std::string RenderTraceSvg(const jump::JumpTrace& trace) {
  Range tr, hr;
  const std::size_t n = trace.samples.size();
  // At most about 1500 vertices per line.
  const std::size_t stride = std::max<std::size_t>(1, n / 1500);
  std::vector<double> t, h_com, h_clear;
  for (std::size_t i = 0; i < n; i += stride) {
    const auto& s = trace.samples[i];
    t.push_back(s.state.time);
    h_com.push_back(s.observables.h_com);
    h_clear.push_back(s.observables.h_clearance);
  }
  if (n > 0 && (n - 1) % stride != 0) {
    const auto& s = trace.samples.back();
    t.push_back(s.state.time);
    h_com.push_back(s.observables.h_com);
    h_clear.push_back(s.observables.h_clearance);
  }
  for (double v : t) tr.Add(v);
  for (double v : h_com) hr.Add(v);
  for (double v : h_clear) hr.Add(v);
  hr.Add(0.0);
  Canvas c(tr, hr, "jump", "time (s)", "height (m)");
  c.Frame();
  c.Series(t, h_com, kPalette[0], false);
  c.Series(t, h_clear, kPalette[1], false);
  const double bottom = kTop + Canvas::PlotHeight();
  c.Line(c.X(trace.t_liftoff), kTop, c.X(trace.t_liftoff), bottom, "#333333",
         " class=\"liftoff\" stroke-dasharray=\"6,4\"");
  c.Line(c.X(trace.t_apogee), kTop, c.X(trace.t_apogee), bottom, "#333333",
         " class=\"apogee\" stroke-dasharray=\"6,4\"");
  c.Legend(0, "h_CoM", kPalette[0]);
  c.Legend(1, "h_clearance", kPalette[1]);
  c.Legend(2, "lift-off, apogee", "#333333", true);
  return c.Finish();
}

}  // namespace umv::cli
