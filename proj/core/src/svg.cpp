#include "hagge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hagge {

namespace {

using P2 = Point<double>;

template <Scalar T>
P2 to_double(const Point<T>& p) {
  return {ScalarTraits<T>::to_double(p.x), ScalarTraits<T>::to_double(p.y)};
}

struct Disk {
  P2 center;
  double radius;
};

template <Scalar T>
Disk to_disk(const Circle<T>& c) {
  return {to_double(c.center()), std::sqrt(std::max(0.0, ScalarTraits<T>::to_double(c.radius_sq())))};
}

/// Everything the renderer needs, in doubles.
struct Figure {
  std::array<P2, 3> vertices;
  P2 o, p, q, d, k;
  std::array<P2, 3> chord_ends, special_points, diagonal_midpoints;
  Disk circumcircle;
  std::optional<Disk> special_circle, midpoint_circle, hagge_circle;
  bool degenerate = false;
};

std::string num(double v) { return format_double(v); }

class Writer {
 public:
  Writer(const FigureOptions& options, double scale) : opt_(options), scale_(scale) {}

  void open_group(const char* cls, const StrokeStyle& style) {
    out_ << "<g class=\"" << cls << "\" fill=\"none\" stroke=\"" << style.color << "\" stroke-width=\""
         << num(style.width / scale_) << "\"";
    if (!style.dash.empty()) {
      std::istringstream parts(style.dash);
      out_ << " stroke-dasharray=\"";
      double v;
      bool first = true;
      while (parts >> v) {
        out_ << (first ? "" : " ") << num(v / scale_);
        first = false;
      }
      out_ << "\"";
    }
    out_ << ">\n";
  }
  void close_group() { out_ << "</g>\n"; }

  void circle(const Disk& c) {
    out_ << "<circle cx=\"" << num(c.center.x) << "\" cy=\"" << num(c.center.y) << "\" r=\"" << num(c.radius)
         << "\"/>\n";
  }
  void line(const P2& a, const P2& b) {
    out_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
         << num(b.y) << "\"/>\n";
  }
  void polygon(std::initializer_list<P2> pts) {
    out_ << "<polygon points=\"";
    bool first = true;
    for (const auto& p : pts) {
      out_ << (first ? "" : " ") << num(p.x) << "," << num(p.y);
      first = false;
    }
    out_ << "\"/>\n";
  }
  void dot(const P2& p, double radius_px) {
    out_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(radius_px / scale_)
         << "\"/>\n";
  }
  void label(const P2& p, const std::string& text) {
    const double offset = 0.4 * opt_.font_size / scale_;
    out_ << "<text transform=\"matrix(1 0 0 -1 " << num(p.x + offset) << " " << num(p.y + offset)
         << ")\">" << text << "</text>\n";
  }

  std::ostringstream& raw() { return out_; }

 private:
  const FigureOptions& opt_;
  double scale_;
  std::ostringstream out_;
};

template <Scalar T>
Figure build_figure(const Scene<T>& scene, const FigureOptions& options) {
  const auto out = construct(scene, ConstructionPath::geometric);
  Figure fig;
  for (std::size_t i = 0; i < 3; ++i) {
    fig.vertices[i] = to_double(out.vertices[i]);
    fig.chord_ends[i] = to_double(out.chord_ends[i]);
    fig.special_points[i] = to_double(out.special_points[i]);
    fig.diagonal_midpoints[i] = to_double(out.diagonal_midpoints[i]);
  }
  fig.o = to_double(out.o);
  fig.p = to_double(out.p);
  fig.q = to_double(out.q);
  fig.d = to_double(out.d);
  fig.k = to_double(out.k);
  fig.circumcircle = to_disk(scene.circumcircle());
  fig.degenerate = out.degenerate;
  if (out.special_circle) fig.special_circle = to_disk(*out.special_circle);
  if (out.midpoint_circle) fig.midpoint_circle = to_disk(*out.midpoint_circle);
  if (options.show_hagge) {
    try {
      fig.hagge_circle = to_disk(classic_hagge(scene.vertices(), scene.d()).circle);
    } catch (const GeometryError&) {
      // No overlay when the reflections collapse.
    }
  }
  return fig;
}

std::string render(const Figure& fig, const FigureOptions& opt) {
  // World bounding box of every visible element.
  double lo_x = fig.circumcircle.center.x - fig.circumcircle.radius;
  double hi_x = fig.circumcircle.center.x + fig.circumcircle.radius;
  double lo_y = fig.circumcircle.center.y - fig.circumcircle.radius;
  double hi_y = fig.circumcircle.center.y + fig.circumcircle.radius;
  auto grow = [&](const P2& p, double r = 0.0) {
    lo_x = std::min(lo_x, p.x - r);
    hi_x = std::max(hi_x, p.x + r);
    lo_y = std::min(lo_y, p.y - r);
    hi_y = std::max(hi_y, p.y + r);
  };
  const bool show_special = opt.show_special_circle && fig.special_circle && !fig.degenerate;
  const bool show_mid = opt.show_midpoint_circle && fig.midpoint_circle && !fig.degenerate;
  const bool show_hagge = opt.show_hagge && fig.hagge_circle;
  if (show_special) grow(fig.special_circle->center, fig.special_circle->radius);
  if (show_mid) grow(fig.midpoint_circle->center, fig.midpoint_circle->radius);
  if (show_hagge) grow(fig.hagge_circle->center, fig.hagge_circle->radius);
  for (const auto& p : {fig.o, fig.p, fig.q, fig.d, fig.k}) grow(p);
  for (const auto* group : {&fig.vertices, &fig.chord_ends, &fig.special_points, &fig.diagonal_midpoints}) {
    for (const auto& p : *group) grow(p);
  }

  const double span_x = std::max(hi_x - lo_x, 1e-12);
  const double span_y = std::max(hi_y - lo_y, 1e-12);
  const double scale = std::min((opt.width - 2.0 * opt.margin) / span_x, (opt.height - 2.0 * opt.margin) / span_y);
  const double mid_x = 0.5 * (lo_x + hi_x);
  const double mid_y = 0.5 * (lo_y + hi_y);

  Writer w(opt, scale);
  auto& os = w.raw();
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width << "\" height=\""
     << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n"
     << "<title>Special circle through P</title>\n"
     << "<rect width=\"" << opt.width << "\" height=\"" << opt.height << "\" fill=\"#ffffff\"/>\n"
     << "<g transform=\"matrix(" << num(scale) << " 0 0 " << num(-scale) << " "
     << num(0.5 * opt.width - scale * mid_x) << " " << num(0.5 * opt.height + scale * mid_y) << ")\">\n";

  w.open_group("circumcircle", opt.circumcircle);
  w.circle(fig.circumcircle);
  w.close_group();

  w.open_group("triangle", opt.triangle);
  w.polygon({fig.vertices[0], fig.vertices[1], fig.vertices[2]});
  w.close_group();

  if (opt.show_chords) {
    w.open_group("chords", opt.chords);
    for (std::size_t i = 0; i < 3; ++i) w.line(fig.vertices[i], fig.chord_ends[i]);
    w.close_group();
  }
  if (opt.show_parallelograms) {
    w.open_group("parallelograms", opt.parallelograms);
    for (std::size_t i = 0; i < 3; ++i) {
      w.polygon({fig.vertices[i], fig.q, fig.chord_ends[i], fig.special_points[i]});
    }
    w.close_group();
  }
  if (opt.show_diagonals) {
    w.open_group("diagonals", opt.diagonals);
    for (std::size_t i = 0; i < 3; ++i) {
      w.line(fig.q, fig.special_points[i]);
      w.line(fig.vertices[i], fig.chord_ends[i]);
    }
    w.close_group();
  }
  if (show_special) {
    w.open_group("special-circle", opt.special_circle);
    w.circle(*fig.special_circle);
    w.close_group();
  }
  if (show_mid) {
    w.open_group("midpoint-circle", opt.midpoint_circle);
    w.circle(*fig.midpoint_circle);
    w.close_group();
  }
  if (show_hagge) {
    w.open_group("hagge-circle", opt.hagge_circle);
    w.circle(*fig.hagge_circle);
    w.close_group();
  }

  struct Named {
    P2 point;
    std::string name;
  };
  std::vector<Named> named = {{fig.vertices[0], "A"}, {fig.vertices[1], "B"}, {fig.vertices[2], "C"},
                              {fig.o, "O"},           {fig.q, "Q"},           {fig.d, "D"},
                              {fig.chord_ends[0], "E"}, {fig.chord_ends[1], "F"}, {fig.chord_ends[2], "G"},
                              {fig.diagonal_midpoints[0], "U'"}, {fig.diagonal_midpoints[1], "V'"},
                              {fig.diagonal_midpoints[2], "W'"}};
  if (fig.degenerate) {
    named.push_back({fig.p, "U=V=W=P=K"});
  } else {
    named.push_back({fig.p, "P"});
    named.push_back({fig.k, "K"});
    named.push_back({fig.special_points[0], "U"});
    named.push_back({fig.special_points[1], "V"});
    named.push_back({fig.special_points[2], "W"});
  }

  os << "<g class=\"points\" fill=\"" << opt.point_color << "\" stroke=\"none\">\n";
  for (const auto& n : named) w.dot(n.point, opt.point_radius);
  if (fig.degenerate) {
    os << "<g class=\"collapse\" fill=\"none\" stroke=\"" << opt.special_circle.color << "\" stroke-width=\""
       << num(opt.special_circle.width / scale) << "\">\n";
    w.dot(fig.p, 3.0 * opt.point_radius);
    os << "</g>\n";
  }
  os << "</g>\n";

  if (opt.labels) {
    os << "<g class=\"labels\" fill=\"#000000\" stroke=\"none\" font-family=\"serif\" font-size=\""
       << num(opt.font_size / scale) << "\">\n";
    // Points closer than a pixel share one label, e.g. "P=U".
    std::vector<Named> merged;
    for (const auto& n : named) {
      auto same = std::find_if(merged.begin(), merged.end(), [&](const Named& m) {
        return std::hypot(m.point.x - n.point.x, m.point.y - n.point.y) * scale < 1.0;
      });
      if (same == merged.end()) {
        merged.push_back(n);
      } else {
        same->name += "=" + n.name;
      }
    }
    for (const auto& n : merged) w.label(n.point, n.name);
    os << "</g>\n";
  }

  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

template <Scalar T>
std::string render_figure(const Scene<T>& scene, const FigureOptions& options) {
  return render(build_figure(scene, options), options);
}

template std::string render_figure(const Scene<Rational>&, const FigureOptions&);
template std::string render_figure(const Scene<double>&, const FigureOptions&);

}  // namespace hagge
