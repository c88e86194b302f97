#pragma once

#include <string>
#include <vector>

namespace disbessel::svg {

struct Point {
  double x;
  double y;
};

struct Polyline {
  std::vector<Point> points;
  std::string stroke = "#000000";
  double width = 1.0;
};

/// Stacked panel with lines (continuous curves) and open circles (discrete values).
struct Panel {
  std::string title;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;
  std::vector<Polyline> lines;
  std::vector<Point> circles;
};

/// Self-contained SVG document, panels stacked vertically.
std::string render(const std::vector<Panel>& panels, const std::string& caption);

}  // namespace disbessel::svg
