#pragma once

#include <string>

#include "hagge/construction.hpp"
#include "hagge/scene.hpp"

namespace hagge {

struct StrokeStyle {
  std::string color;
  double width = 1.0;  // pixels
  std::string dash;    // SVG dasharray in pixels, empty for solid
};

/// Defaults are fixed so identical (scene, options) render identical bytes.
struct FigureOptions {
  int width = 800;
  int height = 800;
  int margin = 40;

  StrokeStyle circumcircle{"#000000", 1.5, ""};
  StrokeStyle triangle{"#000000", 1.5, ""};
  StrokeStyle chords{"#1f77b4", 1.0, ""};
  StrokeStyle parallelograms{"#7f7f7f", 1.0, ""};
  StrokeStyle diagonals{"#7f7f7f", 1.0, "4 3"};
  StrokeStyle special_circle{"#d62728", 2.0, ""};
  StrokeStyle midpoint_circle{"#2ca02c", 1.5, ""};
  StrokeStyle hagge_circle{"#9467bd", 1.5, "6 4"};
  std::string point_color = "#000000";
  double point_radius = 3.0;  // pixels
  double font_size = 14.0;    // pixels

  bool labels = true;
  bool show_chords = true;
  bool show_parallelograms = true;
  bool show_diagonals = true;
  bool show_special_circle = true;
  bool show_midpoint_circle = true;
  bool show_hagge = false;
};

/// SVG 1.1 figure of the geometric-path construction. World coordinates are
/// y-up under a single transform on the root group.
template <Scalar T>
std::string render_figure(const Scene<T>& scene, const FigureOptions& options = {});

extern template std::string render_figure(const Scene<Rational>&, const FigureOptions&);
extern template std::string render_figure(const Scene<double>&, const FigureOptions&);

}  // namespace hagge
