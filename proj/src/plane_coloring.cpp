#include "cheby/plane_coloring.hpp"

#include <algorithm>

#include "cheby/errors.hpp"
#include "cheby/grid_scan.hpp"

namespace cheby {

namespace {

void validate_grid(const GridSpec& g) {
  if (g.px <= 0 || g.py <= 0) throw Error(ErrorCode::BadColoring, "grid periods must be positive");
  auto check_breaks = [](const std::vector<Rational>& b, const Rational& period) {
    if (b.empty() || b.front() != 0)
      throw Error(ErrorCode::BadColoring, "grid breakpoints must start at 0");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] >= period) throw Error(ErrorCode::BadColoring, "grid breakpoint beyond period");
      if (i > 0 && b[i] <= b[i - 1])
        throw Error(ErrorCode::BadColoring, "grid breakpoints must be strictly increasing");
    }
  };
  check_breaks(g.xbreaks, g.px);
  check_breaks(g.ybreaks, g.py);
  if (g.table.size() != g.ybreaks.size())
    throw Error(ErrorCode::BadColoring, "grid table must have one row per y interval");
  for (const auto& row : g.table)
    if (row.size() != g.xbreaks.size())
      throw Error(ErrorCode::BadColoring, "grid table row width must match x intervals");
}

int grid_color_count(const GridSpec& g) {
  int max_color = 0;
  for (const auto& row : g.table)
    for (int c : row) {
      if (c < 0) throw Error(ErrorCode::BadColoring, "negative color index");
      max_color = std::max(max_color, c);
    }
  std::vector<bool> used(static_cast<std::size_t>(max_color) + 1, false);
  for (const auto& row : g.table)
    for (int c : row) used[static_cast<std::size_t>(c)] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(ErrorCode::BadColoring, "grid colors must be contiguous from 0");
  return max_color + 1;
}

std::size_t interval_index(const std::vector<Rational>& breaks, const Rational& v) {
  auto it = std::upper_bound(breaks.begin(), breaks.end(), v);
  return static_cast<std::size_t>(it - breaks.begin()) - 1;
}

}  // namespace

PlaneColoring PlaneColoring::horizontal_lift(LineColoring line) {
  PlaneColoring p;
  p.kind_ = Kind::HorizontalLift;
  p.color_count_ = line.color_count();
  p.line_ = std::move(line);
  return p;
}

PlaneColoring PlaneColoring::diagonal_lift(LineColoring line) {
  PlaneColoring p;
  p.kind_ = Kind::DiagonalLift;
  p.color_count_ = line.color_count();
  p.line_ = std::move(line);
  return p;
}

PlaneColoring PlaneColoring::grid_periodic(GridSpec spec) {
  validate_grid(spec);
  PlaneColoring p;
  p.kind_ = Kind::GridPeriodic;
  p.color_count_ = grid_color_count(spec);
  p.grid_ = std::move(spec);
  return p;
}

int PlaneColoring::eval(const Point& pt) const {
  switch (kind_) {
    case Kind::HorizontalLift:
      return line_->eval(pt.y);
    case Kind::DiagonalLift:
      return line_->eval(pt.x + pt.y);
    case Kind::GridPeriodic: {
      const GridSpec& g = *grid_;
      std::size_t ix = interval_index(g.xbreaks, mod_rational(pt.x, g.px));
      std::size_t iy = interval_index(g.ybreaks, mod_rational(pt.y, g.py));
      return g.table[iy][ix];
    }
  }
  return 0;
}

PlaneColoring lift(const LineColoring& line, LiftAxis axis) {
  return axis == LiftAxis::Horizontal ? PlaneColoring::horizontal_lift(line)
                                      : PlaneColoring::diagonal_lift(line);
}

LiftCertificate certify_lift(const PlaneColoring& p, const Triangle& t) {
  LiftCertificate cert;
  if (!p.is_lift()) {
    cert.reason = "only lift colorings admit a certificate";
    return cert;
  }
  if (p.kind() == PlaneColoring::Kind::HorizontalLift) {
    cert.route = LiftAxis::Horizontal;
    const auto s = t.side_set();
    cert.distances = DistanceSet({s[0], s[1], s[2]});
  } else {
    cert.route = LiftAxis::Diagonal;
    const auto d = t.diag_set();
    if (d[0] == 0)
      throw Error(ErrorCode::DegenerateDiagonalRoute,
                  "diag_set contains 0: the diagonal route needs a non-degenerate triangle");
    cert.distances = DistanceSet({d[0], d[1], d[2]});
  }
  cert.verdict = avoids_distances(p.line(), cert.distances);
  cert.certified = cert.verdict->avoids;
  if (!cert.certified) cert.reason = "1D coloring does not avoid the required distance set";
  return cert;
}

SampleVerdict sample_verify(const PlaneColoring& p, const Triangle& t, const Rational& window,
                            const Rational& step, bool parallel) {
  if (step <= 0 || window <= 0)
    throw Error(ErrorCode::EmptyGrid, "window and step must be positive");
  SampleVerdict out;
  Integer m_int = floor_rational(window / step);
  std::int64_t m = to_int64(m_int);
  out.grid_side = m;

  // Copies on the grid realize only distances that are multiples of step.
  IntSides sides;
  {
    Rational sa = t.a() / step, sb = t.b() / step, sc = t.c() / step;
    if (!is_integral(sa) || !is_integral(sb) || !is_integral(sc)) {
      out.vacuous = true;
      out.note = "no copy of the triangle is realizable on the sampling grid";
      return out;
    }
    sides = IntSides{to_int64(sa), to_int64(sb), to_int64(sc)};
  }
  if (sides.c > m) {
    out.vacuous = true;
    out.note = "window too small to contain a copy at this step";
    return out;
  }

  // Precompute colors once per row/diagonal/cell rather than per point.
  const std::size_t width = static_cast<std::size_t>(m + 1);
  std::vector<int> colors(width * width);
  switch (p.kind()) {
    case PlaneColoring::Kind::HorizontalLift: {
      std::vector<int> row(width);
      for (std::size_t j = 0; j < width; ++j)
        row[j] = p.line().eval(Rational(static_cast<long>(j)) * step);
      for (std::size_t j = 0; j < width; ++j)
        for (std::size_t i = 0; i < width; ++i) colors[j * width + i] = row[j];
      break;
    }
    case PlaneColoring::Kind::DiagonalLift: {
      std::vector<int> diag(2 * width - 1);
      for (std::size_t s = 0; s < diag.size(); ++s)
        diag[s] = p.line().eval(Rational(static_cast<long>(s)) * step);
      for (std::size_t j = 0; j < width; ++j)
        for (std::size_t i = 0; i < width; ++i) colors[j * width + i] = diag[i + j];
      break;
    }
    case PlaneColoring::Kind::GridPeriodic: {
      const GridSpec& g = p.grid();
      std::vector<std::size_t> ix(width), iy(width);
      for (std::size_t i = 0; i < width; ++i) {
        Rational v = Rational(static_cast<long>(i)) * step;
        ix[i] = interval_index(g.xbreaks, mod_rational(v, g.px));
        iy[i] = interval_index(g.ybreaks, mod_rational(v, g.py));
      }
      for (std::size_t j = 0; j < width; ++j)
        for (std::size_t i = 0; i < width; ++i) colors[j * width + i] = g.table[iy[j]][ix[i]];
      break;
    }
  }

  auto hit = find_monochromatic_grid_copy(m, m, sides, colors, parallel);
  if (!hit) {
    out.note = "no monochromatic copy on the sampled grid; this is not a certificate";
    return out;
  }
  std::array<Point, 3> witness;
  for (int i = 0; i < 3; ++i)
    witness[static_cast<std::size_t>(i)] =
        Point{Rational(static_cast<long>((*hit)[static_cast<std::size_t>(i)].x)) * step,
              Rational(static_cast<long>((*hit)[static_cast<std::size_t>(i)].y)) * step};
  // Exact re-validation of the integer kernel's find.
  if (!is_copy(witness[0], witness[1], witness[2], t) ||
      p.eval(witness[0]) != p.eval(witness[1]) || p.eval(witness[1]) != p.eval(witness[2]))
    throw Error(ErrorCode::EmptyGrid, "internal error: grid witness failed exact re-check");
  out.counterexample_found = true;
  out.witness = witness;
  out.note = "monochromatic copy found";
  return out;
}

namespace {

struct Shift1D {
  enum class Kind { AllSame, AllDifferent, Mixed } kind;
  Rational same_at;  // a point with equal colors (Mixed)
  Rational diff_at;  // a point with different colors (Mixed)
};

Shift1D shift_compare_1d(const LineColoring& c, const Rational& shift) {
  const Rational& p = c.period();
  std::vector<Rational> cuts = c.breaks();
  for (const auto& b : c.breaks()) cuts.push_back(mod_rational(b - shift, p));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  bool any_same = false, any_diff = false;
  Rational same_at = 0, diff_at = 0;
  for (const auto& u : cuts) {
    bool equal = c.eval(u) == c.eval(u + shift);
    if (equal && !any_same) {
      any_same = true;
      same_at = u;
    }
    if (!equal && !any_diff) {
      any_diff = true;
      diff_at = u;
    }
  }
  if (any_same && any_diff) return {Shift1D::Kind::Mixed, same_at, diff_at};
  return {any_same ? Shift1D::Kind::AllSame : Shift1D::Kind::AllDifferent, 0, 0};
}

}  // namespace

ShiftParity shift_parity(const PlaneColoring& p, const ShiftVector& v) {
  ShiftParity out;
  switch (p.kind()) {
    case PlaneColoring::Kind::HorizontalLift:
    case PlaneColoring::Kind::DiagonalLift: {
      const bool horizontal = p.kind() == PlaneColoring::Kind::HorizontalLift;
      Rational s = horizontal ? v.dy : v.dx + v.dy;
      Shift1D r = shift_compare_1d(p.line(), s);
      if (r.kind == Shift1D::Kind::AllSame) {
        out.value = ParityValue::Period;
      } else if (r.kind == Shift1D::Kind::AllDifferent) {
        out.value = ParityValue::AntiPeriod;
      } else {
        out.value = ParityValue::Neither;
        out.same_witness = horizontal ? Point{0, r.same_at} : Point{0, r.same_at};
        out.diff_witness = horizontal ? Point{0, r.diff_at} : Point{0, r.diff_at};
      }
      return out;
    }
    case PlaneColoring::Kind::GridPeriodic: {
      const GridSpec& g = p.grid();
      std::vector<Rational> xcuts = g.xbreaks, ycuts = g.ybreaks;
      for (const auto& b : g.xbreaks) xcuts.push_back(mod_rational(b - v.dx, g.px));
      for (const auto& b : g.ybreaks) ycuts.push_back(mod_rational(b - v.dy, g.py));
      std::sort(xcuts.begin(), xcuts.end());
      xcuts.erase(std::unique(xcuts.begin(), xcuts.end()), xcuts.end());
      std::sort(ycuts.begin(), ycuts.end());
      ycuts.erase(std::unique(ycuts.begin(), ycuts.end()), ycuts.end());
      bool any_same = false, any_diff = false;
      Point same_at, diff_at;
      for (const auto& u : xcuts)
        for (const auto& w : ycuts) {
          Point z{u, w};
          bool equal = p.eval(z) == p.eval(Point{u + v.dx, w + v.dy});
          if (equal && !any_same) {
            any_same = true;
            same_at = z;
          }
          if (!equal && !any_diff) {
            any_diff = true;
            diff_at = z;
          }
        }
      if (any_same && any_diff) {
        out.value = ParityValue::Neither;
        out.same_witness = same_at;
        out.diff_witness = diff_at;
      } else {
        out.value = any_same ? ParityValue::Period : ParityValue::AntiPeriod;
      }
      return out;
    }
  }
  return out;
}

LabeledShift combine_shifts(const LabeledShift& s1, const LabeledShift& s2, ShiftOp op) {
  LabeledShift out;
  out.vector = op == ShiftOp::Add
                   ? ShiftVector{s1.vector.dx + s2.vector.dx, s1.vector.dy + s2.vector.dy}
                   : ShiftVector{s1.vector.dx - s2.vector.dx, s1.vector.dy - s2.vector.dy};
  out.label = s1.label == s2.label ? ParityLabel::Period : ParityLabel::AntiPeriod;
  return out;
}

PlaneChiResult plane_chi(const Triangle& t, std::size_t window, std::int64_t max_period) {
  PlaneChiResult res;
  res.lower = 2;
  res.lower_witness = canonical_copy(t);

  const auto s = t.side_set();
  res.side_route.axis = LiftAxis::Horizontal;
  res.side_route.applicable = true;
  res.side_route.line_result = chi_line(DistanceSet({s[0], s[1], s[2]}), window, max_period);

  res.diag_route.axis = LiftAxis::Diagonal;
  const auto d = t.diag_set();
  if (d[0] > 0) {
    res.diag_route.applicable = true;
    res.diag_route.line_result = chi_line(DistanceSet({d[0], d[1], d[2]}), window, max_period);
  }

  for (const PlaneChiRoute* route : {&res.side_route, &res.diag_route}) {
    if (!route->applicable || !route->line_result.upper.found) continue;
    int k = route->line_result.upper.colors;
    if (!res.upper || k < *res.upper) {
      res.upper = k;
      res.upper_route = route->axis;
    }
  }
  res.exact = res.upper && *res.upper == res.lower;
  return res;
}

}  // namespace cheby
