#include "disbessel/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace disbessel::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kPanelHeight = 180.0;
constexpr double kMarginLeft = 60.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 30.0;
constexpr double kGap = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

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

}  // namespace

std::string render(const std::vector<Panel>& panels, const std::string& caption) {
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double height = kMarginTop + panels.size() * (kPanelHeight + kGap) + 20.0;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(kMarginLeft) << "\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(caption) << "</text>\n";

  double top = kMarginTop;
  for (const Panel& p : panels) {
    const double xs = plot_w / (p.x_max - p.x_min);
    const double ys = kPanelHeight / (p.y_max - p.y_min);
    auto px = [&](double x) { return kMarginLeft + (x - p.x_min) * xs; };
    auto py = [&](double y) { return top + (p.y_max - y) * ys; };

    out << "<g>\n<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(top) << "\" width=\""
        << num(plot_w) << "\" height=\"" << num(kPanelHeight)
        << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"0.8\"/>\n";
    if (p.y_min < 0.0 && p.y_max > 0.0)
      out << "<line x1=\"" << num(px(p.x_min)) << "\" y1=\"" << num(py(0)) << "\" x2=\""
          << num(px(p.x_max)) << "\" y2=\"" << num(py(0))
          << "\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
    // Axis labels at the ends of each range.
    out << "<text x=\"" << num(kMarginLeft) << "\" y=\"" << num(top + kPanelHeight + 14)
        << "\" font-family=\"sans-serif\" font-size=\"10\">" << num(p.x_min) << "</text>\n"
        << "<text x=\"" << num(kMarginLeft + plot_w - 30) << "\" y=\""
        << num(top + kPanelHeight + 14) << "\" font-family=\"sans-serif\" font-size=\"10\">"
        << num(p.x_max) << "</text>\n"
        << "<text x=\"4\" y=\"" << num(top + 10) << "\" font-family=\"sans-serif\" font-size=\"10\">"
        << num(p.y_max) << "</text>\n"
        << "<text x=\"4\" y=\"" << num(top + kPanelHeight) << "\" font-family=\"sans-serif\" font-size=\"10\">"
        << num(p.y_min) << "</text>\n"
        << "<text x=\"" << num(kMarginLeft + 8) << "\" y=\"" << num(top + 14)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(p.title) << "</text>\n";

    for (const Polyline& line : p.lines) {
      if (line.points.size() < 2) continue;
      out << "<polyline fill=\"none\" stroke=\"" << line.stroke << "\" stroke-width=\""
          << num(line.width) << "\" points=\"";
      for (const Point& pt : line.points) out << num(px(pt.x)) << ',' << num(py(pt.y)) << ' ';
      out << "\"/>\n";
    }
    for (const Point& c : p.circles)
      out << "<circle cx=\"" << num(px(c.x)) << "\" cy=\"" << num(py(c.y))
          << "\" r=\"2.5\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.8\"/>\n";
    out << "</g>\n";
    top += kPanelHeight + kGap;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace disbessel::svg
