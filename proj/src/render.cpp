#include "qcat/render.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <vector>

namespace qcat {

namespace {

struct PathPair {
  const std::vector<LatticePoint>* first;   // pi or omega
  const std::vector<LatticePoint>* second;  // sigma or nu
};

PathPair paths_for(const GeometricScene& sc, View view) {
  if (view == View::kBefore) return {&sc.pi_path, &sc.sigma_path};
  return {&sc.omega_path, &sc.nu_path};
}

class AsciiCanvas {
 public:
  explicit AsciiCanvas(std::size_t side)
      : side_(side), width_(2 * side + 1), grid_(width_ * width_, ' ') {
    for (std::size_t y = 0; y <= side; ++y) {
      for (std::size_t x = 0; x <= side; ++x) at_point(x, y) = '.';
    }
  }

  char& at_point(std::size_t x, std::size_t y) { return cell(2 * x, 2 * (side_ - y)); }

  void shade(std::size_t x, std::size_t y) { cell(2 * x + 1, 2 * (side_ - y) - 1) = '/'; }

  void draw(const std::vector<LatticePoint>& pts, char horizontal, char vertical, char point) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      mark(at_point(pts[i].x, pts[i].y), point, '@');
      if (i + 1 == pts.size()) break;
      const LatticePoint& a = pts[i];
      const LatticePoint& b = pts[i + 1];
      if (b.x > a.x) {
        mark(cell(2 * a.x + 1, 2 * (side_ - a.y)), horizontal, '#');
      } else {
        mark(cell(2 * a.x, 2 * (side_ - a.y) - 1), vertical, '#');
      }
    }
  }

  std::string str() const {
    std::string out;
    for (std::size_t row = 0; row < width_; ++row) {
      std::string line = grid_.substr(row * width_, width_);
      line.erase(line.find_last_not_of(' ') + 1);
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  char& cell(std::size_t col, std::size_t row) { return grid_[row * width_ + col]; }

  // A glyph already owned by the other path becomes `shared`.
  static void mark(char& slot, char glyph, char shared) {
    if (slot == ' ' || slot == '.' || slot == '/' || slot == glyph) slot = glyph;
    else slot = shared;
  }

  std::size_t side_;
  std::size_t width_;
  std::string grid_;
};

}  // namespace

std::string render_ascii(const GeometricScene& sc, View view) {
  AsciiCanvas canvas(sc.big_side);
  for (std::size_t x = sc.k; x < sc.big_side; ++x) {
    for (std::size_t y = 0; y < sc.rectangle_height; ++y) canvas.shade(x, y);
  }
  const PathPair paths = paths_for(sc, view);
  canvas.draw(*paths.first, '-', '|', 'o');
  canvas.draw(*paths.second, '=', ':', '*');
  canvas.at_point(sc.meet_point.x, sc.meet_point.y) = 'M';

  std::ostringstream out;
  if (view == View::kBefore) {
    out << "pi=" << (sc.pi.empty() ? "-" : sc.pi) << " sigma=" << sc.sigma;
  } else {
    out << "omega/nu after splicing pi=" << (sc.pi.empty() ? "-" : sc.pi) << " sigma=" << sc.sigma;
  }
  out << " k=" << sc.k << " l=" << sc.l << " r=" << sc.r << '\n';
  out << "meet=(" << sc.meet_point.x << "," << sc.meet_point.y << ") rectangle "
      << sc.rectangle_width << "x" << sc.rectangle_height << " area " << sc.rectangle_area
      << '\n';
  out << canvas.str();
  return out.str();
}

namespace {

class SvgWriter {
 public:
  SvgWriter(std::size_t side, const Style& style) : side_(side), style_(style) {}

  long px(std::size_t x) const { return margin() + static_cast<long>(x) * style_.cell_size; }
  long py(std::size_t y) const {
    return margin() + static_cast<long>(side_ - y) * style_.cell_size;
  }

  void open() {
    const long extent = 2 * margin() + static_cast<long>(side_) * style_.cell_size;
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << extent
         << "\" height=\"" << extent << "\" viewBox=\"0 0 " << extent << ' ' << extent
         << "\">\n";
  }

  void close() { out_ << "</svg>\n"; }

  // Axis-aligned box with lower-left lattice corner (x, y).
  void box(std::size_t x, std::size_t y, std::size_t w, std::size_t h, const std::string& fill,
           const std::string& stroke, int stroke_width, const char* cls) {
    out_ << "<rect class=\"" << cls << "\" x=\"" << px(x) << "\" y=\"" << py(y + h)
         << "\" width=\"" << static_cast<long>(w) * style_.cell_size << "\" height=\""
         << static_cast<long>(h) * style_.cell_size << "\" fill=\"" << fill << "\" stroke=\""
         << stroke << "\" stroke-width=\"" << stroke_width << "\"/>\n";
  }

  void path(std::span<const LatticePoint> pts, const std::string& color, const char* cls) {
    if (pts.empty()) return;
    out_ << "<path class=\"" << cls << "\" d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out_ << (i == 0 ? "M" : " L") << px(pts[i].x) << ',' << py(pts[i].y);
    }
    out_ << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << style_.path_width
         << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
  }

  void dot(const LatticePoint& p, const char* cls) {
    out_ << "<circle class=\"" << cls << "\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y)
         << "\" r=\"" << std::max(2, style_.cell_size / 6) << "\" fill=\""
         << style_.outline_color << "\"/>\n";
  }

  std::string str() const { return out_.str(); }

 private:
  long margin() const { return style_.cell_size; }

  std::size_t side_;
  const Style& style_;
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(const GeometricScene& sc, const Style& style, View view) {
  SvgWriter svg(sc.big_side, style);
  svg.open();
  svg.box(sc.k, 0, sc.rectangle_width, sc.rectangle_height, style.shade_color, "none", 0,
          "rectangle");
  svg.box(0, 0, sc.big_side, sc.big_side, "none", style.outline_color, style.outline_width,
          "outer");

  const std::span<const LatticePoint> pi(sc.pi_path);
  const std::span<const LatticePoint> sigma(sc.sigma_path);
  if (view == View::kBefore) {
    svg.box(0, 0, sc.k, sc.k, "none", style.pi_color, style.outline_width, "pi-square");
    svg.box(sc.r, sc.r, sc.l, sc.l, "none", style.sigma_color, style.outline_width,
            "sigma-square");
    svg.path(pi, style.pi_color, "pi");
    svg.path(sigma, style.sigma_color, "sigma");
  } else {
    // Segments keep the color of the word they came from.
    svg.box(sc.r, sc.r, sc.k - sc.r, sc.k - sc.r, "none", style.outline_color,
            style.outline_width, "nu-square");
    svg.path(pi.first(sc.meet_index_pi + 1), style.pi_color, "omega-left");
    svg.path(sigma.subspan(sc.meet_index_sigma), style.sigma_color, "omega-right");
    svg.path(sigma.first(sc.meet_index_sigma + 1), style.sigma_color, "nu-left");
    svg.path(pi.subspan(sc.meet_index_pi), style.pi_color, "nu-right");
  }
  svg.dot(sc.meet_point, "meet");
  svg.close();
  return svg.str();
}

}  // namespace qcat
