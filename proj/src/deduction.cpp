#include "cheby/deduction.hpp"

#include <algorithm>

#include "cheby/errors.hpp"

namespace cheby {

namespace {

Obligation copy_obligation(const Point& p1, const Point& p2, const Point& p3, const Triangle& t,
                           std::string note) {
  Obligation o;
  o.kind = ObligationKind::Copy;
  o.points = {p1, p2, p3};
  o.verified = is_copy(p1, p2, p3, t);
  o.note = std::move(note);
  return o;
}

const std::array<Rational, 5> kSamples = {Rational(0), Rational(1, 4), Rational(1, 2),
                                          Rational(3, 4), Rational(1)};

}  // namespace

std::array<AntiperiodCase, 12> antiperiod_cases(const Triangle& t) {
  if (t.degenerate())
    throw Error(ErrorCode::DegenerateTriangleUnsupported,
                "the segment lemma needs a non-degenerate triangle");
  const Rational &a = t.a(), &b = t.b(), &c = t.c();
  const Rational len1 = b + c - a, len2 = c + a - b, len3 = a + b - c;
  auto seg = [](Axis axis, Rational x, Rational y, Rational len) {
    return Segment{axis, Point{std::move(x), std::move(y)}, std::move(len)};
  };
  // For each listed vector: the canonical pair offset z2 - z1 and the
  // forced segment for z1 = (0,0).
  return {
      // part 1: segments of length b+c-a
      AntiperiodCase{1, {a, c - b}, {a, c - b}, seg(Axis::Horizontal, a - b, c, len1)},
      AntiperiodCase{1, {-a, c - b}, {a, b - c}, seg(Axis::Horizontal, a - b, -c, len1)},
      AntiperiodCase{1, {c - b, a}, {c - b, a}, seg(Axis::Vertical, c, a - b, len1)},
      AntiperiodCase{1, {c - b, -a}, {b - c, a}, seg(Axis::Vertical, -c, a - b, len1)},
      // part 2: segments of length c+a-b
      AntiperiodCase{2, {b, a - c}, {b, a - c}, seg(Axis::Horizontal, b - a, -c, len2)},
      AntiperiodCase{2, {-b, a - c}, {b, c - a}, seg(Axis::Horizontal, b - a, c, len2)},
      AntiperiodCase{2, {a - c, b}, {a - c, b}, seg(Axis::Vertical, -c, b - a, len2)},
      AntiperiodCase{2, {a - c, -b}, {c - a, b}, seg(Axis::Vertical, c, b - a, len2)},
      // part 3: segments of length a+b-c
      AntiperiodCase{3, {b - a, c}, {a - b, -c}, seg(Axis::Vertical, -b, -b, len3)},
      AntiperiodCase{3, {b - a, -c}, {a - b, c}, seg(Axis::Vertical, -b, c - a, len3)},
      AntiperiodCase{3, {c, b - a}, {-c, a - b}, seg(Axis::Horizontal, -b, -b, len3)},
      AntiperiodCase{3, {-c, b - a}, {c, a - b}, seg(Axis::Horizontal, c - a, -b, len3)},
  };
}

ForcedSegmentResult forced_segment(const Point& p1, const Point& p2, const ShiftVector& case_vector,
                                   const Triangle& t) {
  const auto cases = antiperiod_cases(t);
  const AntiperiodCase* match = nullptr;
  for (const auto& cs : cases)
    if (cs.vector.dx == case_vector.dx && cs.vector.dy == case_vector.dy) {
      match = &cs;
      break;
    }
  if (!match)
    throw Error(ErrorCode::PairDoesNotMatchCase, "case vector is not one of the twelve");

  Point delta = p2 - p1;
  const Point want{match->pair_delta.dx, match->pair_delta.dy};
  Point anchor;
  if (delta == want) {
    anchor = p1;
  } else if (Point{-delta.x, -delta.y} == want) {
    anchor = p2;
  } else {
    throw Error(ErrorCode::PairDoesNotMatchCase,
                "pair difference does not match the case vector (either sign)");
  }

  ForcedSegmentResult res;
  res.segment = match->segment_at_origin;
  res.segment.anchor = res.segment.anchor + anchor;
  res.length = res.segment.length;
  for (const auto& s : kSamples) {
    Point w = res.segment.point_at(s);
    res.obligations.push_back(
        copy_obligation(w, p1, p2, t, "segment point at t=" + to_string(s)));
  }
  return res;
}

AntiperiodReport antiperiod_consequences(const Triangle& t, std::int64_t bound) {
  if (t.degenerate())
    throw Error(ErrorCode::DegenerateTriangleUnsupported,
                "anti-period consequences need a non-degenerate triangle");
  const Rational &a = t.a(), &b = t.b(), &c = t.c();
  AntiperiodReport rep;
  rep.hypothesis = "no monochromatic axis-parallel segment of length c+a-b";
  rep.search_bound = bound;

  const ShiftVector v_pa{a, c - b}, v_ma{-a, c - b}, v_pa_s{c - b, a}, v_ma_s{c - b, -a};
  const ShiftVector v_pb{b, a - c}, v_mb{-b, a - c}, v_pb_s{a - c, b}, v_mb_s{a - c, -b};
  auto push_unique = [](std::vector<ShiftVector>& vs, const ShiftVector& v) {
    for (const auto& u : vs)
      if (u.dx == v.dx && u.dy == v.dy) return;
    vs.push_back(v);
  };
  for (const auto& v : {v_pa, v_ma, v_pa_s, v_ma_s, v_pb, v_mb, v_pb_s, v_mb_s})
    push_unique(rep.anti_periods, v);

  auto decomp = [](ShiftVector period, std::vector<std::pair<int, ShiftVector>> terms) {
    return PeriodDecomposition{std::move(period), std::move(terms)};
  };
  std::vector<PeriodDecomposition> periods = {
      decomp({2 * a, 0}, {{1, v_pa}, {-1, v_ma}}),
      decomp({2 * b, 0}, {{1, v_pb}, {-1, v_mb}}),
      decomp({2 * c, 0}, {{1, v_pa_s}, {1, v_ma_s}, {1, v_pb}, {-1, v_mb}}),
      decomp({0, 2 * a}, {{1, v_pa_s}, {-1, v_ma_s}}),
      decomp({0, 2 * b}, {{1, v_pb_s}, {-1, v_mb_s}}),
      decomp({0, 2 * c}, {{1, v_pa}, {1, v_ma}, {1, v_pb_s}, {-1, v_mb_s}}),
  };
  for (auto& p : periods) {
    bool seen = false;
    for (const auto& q : rep.periods)
      if (q.period.dx == p.period.dx && q.period.dy == p.period.dy) seen = true;
    if (!seen) rep.periods.push_back(std::move(p));
  }

  // Zigzag 0, 1, -1, 2, -2, ... per coordinate, m outermost: certificates
  // with few b-multiples are preferred, then few a-multiples.
  auto zigzag = [bound](std::int64_t i) {
    return i % 2 == 1 ? (i + 1) / 2 : -(i / 2);
  };
  const std::int64_t steps = 2 * bound + 1;
  for (std::int64_t mi = 0; mi < steps && !rep.certificate; ++mi) {
    std::int64_t m = zigzag(mi);
    for (std::int64_t ni = 0; ni < steps && !rep.certificate; ++ni) {
      std::int64_t n = zigzag(ni);
      for (std::int64_t ki = 0; ki < steps; ++ki) {
        std::int64_t k = zigzag(ki);
        Rational value = 2 * (a * static_cast<long>(n) + b * static_cast<long>(m) +
                              c * static_cast<long>(k));
        if (value > 0 && value <= a + b - c) {
          rep.certificate = {n, m, k};
          rep.certificate_value = value;
          break;
        }
      }
    }
  }
  if (rep.certificate) {
    for (const auto& v : {ShiftVector{c, b - a}, ShiftVector{-c, b - a}, ShiftVector{b - a, c},
                          ShiftVector{b - a, -c}})
      push_unique(rep.extra_anti_periods, v);
  }
  return rep;
}

ForcedLinesReport forced_lines(const Triangle& t, std::int64_t bound) {
  if (t.degenerate())
    throw Error(ErrorCode::DegenerateTriangleUnsupported,
                "forced lines need a non-degenerate triangle");
  const Rational &a = t.a(), &b = t.b(), &c = t.c();
  ForcedLinesReport rep;
  rep.hypothesis_line_y = 0;
  rep.search_bound = bound;
  rep.forced_lines = {a, b};
  rep.obligations.push_back(copy_obligation(Point{0, a}, Point{-c, 0}, Point{b - c, 0}, t,
                                            "(x0, a) with (x0-c, 0), (x0+b-c, 0) at x0=0"));
  rep.obligations.push_back(copy_obligation(Point{0, b}, Point{-c, 0}, Point{a - c, 0}, t,
                                            "(x0, b) with (x0-c, 0), (x0+a-c, 0) at x0=0"));

  auto zigzag = [](std::int64_t i) { return i % 2 == 1 ? (i + 1) / 2 : -(i / 2); };
  const std::int64_t steps = 2 * bound + 1;
  for (std::int64_t ni = 0; ni < steps && !rep.certificate; ++ni) {
    std::int64_t n = zigzag(ni);
    for (std::int64_t mi = 0; mi < steps; ++mi) {
      std::int64_t m = zigzag(mi);
      if ((n + m) % 2 != 0) continue;
      Rational value = a * static_cast<long>(n) + b * static_cast<long>(m);
      if (value >= c - b && value <= a) {
        rep.certificate = {n, m};
        rep.certificate_value = value;
        break;
      }
    }
  }
  if (rep.certificate) {
    rep.forced_lines.push_back(c);
    rep.obligations.push_back(copy_obligation(Point{0, c}, Point{-b, rep.certificate_value},
                                              Point{a - b, 0}, t,
                                              "(x0, c) with (x0-b, an+bm), (x0+a-b, 0) at x0=0"));
  }
  return rep;
}

DeductionTrace segment_extension_trace(const Triangle& t, int depth) {
  if (t.degenerate())
    throw Error(ErrorCode::DegenerateTriangleUnsupported,
                "segment extension needs a non-degenerate triangle");
  const Rational &a = t.a(), &b = t.b(), &c = t.c();
  if (a == b) throw Error(ErrorCode::HypothesisViolated, "the extension argument requires a < b");

  DeductionTrace trace;
  trace.isosceles = (b == c);
  const Rational other_line = trace.isosceles ? b : a;  // blue line height above a red one
  trace.base_length = trace.isosceles ? a : b + c - a;
  trace.growth = trace.isosceles ? b - a : c - b;

  Rational lo = 0, hi = trace.base_length;
  for (int level = 0; level <= depth; ++level) {
    TraceStep step;
    step.level = level;
    step.color = level % 2;
    step.segment =
        Segment{Axis::Horizontal, Point{lo, (level % 2 == 0) ? Rational(0) : other_line}, hi - lo};
    trace.steps.push_back(step);
    if (level == depth) break;

    // Extend: the segment on the other line, grown by `growth` per side.
    Rational nlo = lo - trace.growth, nhi = hi + trace.growth;
    const bool from_lower = level % 2 == 0;  // previous segment on the lower line
    auto place = [&](const Point& p) {
      // Standard frame: previous segment on y=0, new on y=other_line.
      return from_lower ? p : Point{p.x, other_line - p.y};
    };
    auto note_level = " (level " + std::to_string(level) + "->" + std::to_string(level + 1) + ")";

    if (trace.isosceles) {
      // Every point of the new segment pairs with two previous-line points
      // at distance a apart.
      for (const auto& s : kSamples) {
        Rational u = nlo + s * (nhi - nlo);
        Rational shifted = u - b;
        Rational x = std::max(lo, shifted);
        trace.obligations.push_back(copy_obligation(place(Point{u, b}), place(Point{x, 0}),
                                                    place(Point{x + a, 0}), t,
                                                    "isosceles extension" + note_level));
      }
    } else {
      // Directly forced part: [lo+c, hi+c-b] via two previous-line points.
      Rational j1_lo = lo + c, j1_hi = hi + c - b;
      for (const auto& s : kSamples) {
        Rational x0 = j1_lo + s * (j1_hi - j1_lo);
        trace.obligations.push_back(copy_obligation(place(Point{x0, a}), place(Point{x0 - c, 0}),
                                                    place(Point{x0 + b - c, 0}), t,
                                                    "direct part" + note_level));
      }
      // Five-point chain across [lo+c-b, lo+c].
      Rational j2_lo = lo + c - b, j2_hi = lo + c;
      Rational x1 = j2_lo;
      while (x1 < j2_hi) {
        Point z1{x1, a}, z2{x1 + b - c, 0}, z3{x1 + b, c + a - b}, z4{x1 + b, a - b},
            z5{x1 + b - a, a};
        trace.obligations.push_back(copy_obligation(place(z1), place(z2), place(z3), t,
                                                    "five-point chain z1z2z3" + note_level));
        trace.obligations.push_back(copy_obligation(place(z1), place(z2), place(z4), t,
                                                    "five-point chain z1z2z4" + note_level));
        trace.obligations.push_back(copy_obligation(place(z3), place(z4), place(z5), t,
                                                    "five-point chain z3z4z5" + note_level));
        Obligation contain;
        contain.kind = ObligationKind::Containment;
        contain.points = {place(z5)};
        contain.verified = (z5.x >= j2_lo && z5.x <= j2_hi) || (z5.x >= j1_lo && z5.x <= j1_hi);
        contain.note = "chain step lands inside the forced region" + note_level;
        trace.obligations.push_back(contain);
        x1 += b - a;
      }
      // Reflection about the previous segment's midpoint maps the direct
      // and chain parts onto the remaining left half.
      Rational mid2 = lo + hi;  // reflection is x -> mid2 - x
      Obligation refl1;
      refl1.kind = ObligationKind::Reflection;
      refl1.points = {place(Point{mid2 - j1_hi, a}), place(Point{mid2 - j1_lo, a}),
                      place(Point{lo + b - c, a}), place(Point{hi - c, a})};
      refl1.verified = (mid2 - j1_hi == lo + b - c) && (mid2 - j1_lo == hi - c);
      refl1.note = "direct part reflects onto the left outer part" + note_level;
      trace.obligations.push_back(refl1);
      Obligation refl2;
      refl2.kind = ObligationKind::Reflection;
      refl2.points = {place(Point{mid2 - j2_hi, a}), place(Point{mid2 - j2_lo, a}),
                      place(Point{hi - c, a}), place(Point{hi - c + b, a})};
      refl2.verified = (mid2 - j2_hi == hi - c) && (mid2 - j2_lo == hi - c + b);
      refl2.note = "chain part reflects onto the left inner part" + note_level;
      trace.obligations.push_back(refl2);
      Obligation cover;
      cover.kind = ObligationKind::Containment;
      cover.points = {place(Point{nlo, a}), place(Point{nhi, a})};
      // Four parts tile the new segment: the two reflected parts join the
      // two direct parts with overlap, spanning [nlo, nhi].
      cover.verified = (mid2 - j1_hi == nlo) && (j1_hi == nhi) && (hi - c + b >= j2_lo);
      cover.note = "four parts cover the extended segment" + note_level;
      trace.obligations.push_back(cover);
    }
    lo = nlo;
    hi = nhi;
  }
  return trace;
}

}  // namespace cheby
