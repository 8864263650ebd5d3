#include "cheby/svg.hpp"

#include <cstdio>
#include <sstream>

#include "cheby/errors.hpp"

namespace cheby {

namespace {

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                          "#b07aa1", "#76b7b2", "#edc949", "#9c755f"};
constexpr int kPaletteSize = 8;

std::string dec(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", r.get_d());
  return buf;
}

std::string dec(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const char* color_of(int c) { return kPalette[c % kPaletteSize]; }

// The group flips y so the document reads in math coordinates.
void open_svg(std::ostringstream& out, const Rational& window) {
  std::string w = dec(window);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << w
      << "\" width=\"640\" height=\"640\">\n";
  out << "  <defs><clipPath id=\"win\"><rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << w
      << "\"/></clipPath></defs>\n";
  out << "  <g transform=\"translate(0 " << w
      << ") scale(1 -1)\" clip-path=\"url(#win)\">\n";
}

void close_svg(std::ostringstream& out) { out << "  </g>\n</svg>\n"; }

void draw_marker(std::ostringstream& out, const Point& p, const Rational& window) {
  double r = window.get_d() / 80.0;
  out << "    <circle cx=\"" << dec(p.x) << "\" cy=\"" << dec(p.y) << "\" r=\"" << dec(r)
      << "\" fill=\"#222222\" stroke=\"white\" stroke-width=\"" << dec(r / 4) << "\"/>\n";
}

void draw_triple(std::ostringstream& out, const Point& a, const Point& b, const Point& c,
                 const Rational& window) {
  double w = window.get_d() / 160.0;
  out << "    <polygon points=\"" << dec(a.x) << "," << dec(a.y) << " " << dec(b.x) << ","
      << dec(b.y) << " " << dec(c.x) << "," << dec(c.y)
      << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << dec(w) << "\"/>\n";
}

void draw_overlay(std::ostringstream& out, const RenderOverlay& overlay, const Rational& window) {
  for (const auto& t : overlay.triples)
    draw_triple(out, overlay.points[t[0]], overlay.points[t[1]], overlay.points[t[2]], window);
  for (const auto& p : overlay.points.points()) draw_marker(out, p, window);
}

}  // namespace

std::string render_plane_coloring(const PlaneColoring& coloring, const Rational& window,
                                  const std::optional<RenderOverlay>& overlay) {
  if (window <= 0) throw Error(ErrorCode::EmptyGrid, "window must be positive");
  std::ostringstream out;
  open_svg(out, window);
  switch (coloring.kind()) {
    case PlaneColoring::Kind::HorizontalLift: {
      const LineColoring& line = coloring.line();
      const Rational& p = line.period();
      const std::size_t n = line.breaks().size();
      for (Rational y0 = 0; y0 < window; y0 += p) {
        for (std::size_t i = 0; i < n; ++i) {
          Rational lo = y0 + line.breaks()[i];
          Rational hi = y0 + (i + 1 < n ? line.breaks()[i + 1] : p);
          if (lo >= window) continue;
          out << "    <rect x=\"0\" y=\"" << dec(lo) << "\" width=\"" << dec(window)
              << "\" height=\"" << dec(hi - lo) << "\" fill=\"" << color_of(line.colors()[i])
              << "\"/>\n";
        }
      }
      break;
    }
    case PlaneColoring::Kind::DiagonalLift: {
      // Stripes of constant x+y; each band [s0, s1) is a quad clipped to
      // the window.
      const LineColoring& line = coloring.line();
      const Rational& p = line.period();
      const std::size_t n = line.breaks().size();
      for (Rational s0 = 0; s0 < 2 * window; s0 += p) {
        for (std::size_t i = 0; i < n; ++i) {
          Rational lo = s0 + line.breaks()[i];
          Rational hi = s0 + (i + 1 < n ? line.breaks()[i + 1] : p);
          if (lo >= 2 * window) continue;
          out << "    <polygon points=\"" << dec(lo) << ",0 " << dec(hi) << ",0 0," << dec(hi)
              << " 0," << dec(lo) << "\" fill=\"" << color_of(line.colors()[i]) << "\"/>\n";
        }
      }
      break;
    }
    case PlaneColoring::Kind::GridPeriodic: {
      const GridSpec& g = coloring.grid();
      for (Rational y0 = 0; y0 < window; y0 += g.py)
        for (Rational x0 = 0; x0 < window; x0 += g.px)
          for (std::size_t iy = 0; iy < g.ybreaks.size(); ++iy)
            for (std::size_t ix = 0; ix < g.xbreaks.size(); ++ix) {
              Rational xlo = x0 + g.xbreaks[ix];
              Rational xhi = x0 + (ix + 1 < g.xbreaks.size() ? g.xbreaks[ix + 1] : g.px);
              Rational ylo = y0 + g.ybreaks[iy];
              Rational yhi = y0 + (iy + 1 < g.ybreaks.size() ? g.ybreaks[iy + 1] : g.py);
              if (xlo >= window || ylo >= window) continue;
              out << "    <rect x=\"" << dec(xlo) << "\" y=\"" << dec(ylo) << "\" width=\""
                  << dec(xhi - xlo) << "\" height=\"" << dec(yhi - ylo) << "\" fill=\""
                  << color_of(g.table[iy][ix]) << "\"/>\n";
            }
      break;
    }
  }
  if (overlay) draw_overlay(out, *overlay, window);
  close_svg(out);
  return out.str();
}

std::string render_points(const PointSet& points, const std::vector<IndexTriple>& triples,
                          const Rational& window) {
  if (window <= 0) throw Error(ErrorCode::EmptyGrid, "window must be positive");
  std::ostringstream out;
  open_svg(out, window);
  out << "    <rect x=\"0\" y=\"0\" width=\"" << dec(window) << "\" height=\"" << dec(window)
      << "\" fill=\"#f7f7f7\"/>\n";
  RenderOverlay overlay{points, triples};
  draw_overlay(out, overlay, window);
  close_svg(out);
  return out.str();
}

}  // namespace cheby
