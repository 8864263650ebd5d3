#include "cheby/geometry.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cheby/errors.hpp"

namespace cheby {

Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }

Rational linf_dist(const Point& p, const Point& q) {
  Rational dx = abs_rational(p.x - q.x);
  Rational dy = abs_rational(p.y - q.y);
  return dx > dy ? dx : dy;
}

Point Segment::other_end() const {
  return axis == Axis::Horizontal ? Point{anchor.x + length, anchor.y}
                                  : Point{anchor.x, anchor.y + length};
}

Point Segment::point_at(const Rational& t) const {
  return axis == Axis::Horizontal ? Point{anchor.x + t * length, anchor.y}
                                  : Point{anchor.x, anchor.y + t * length};
}

bool Segment::contains(const Point& p) const {
  if (axis == Axis::Horizontal)
    return p.y == anchor.y && p.x >= anchor.x && p.x <= anchor.x + length;
  return p.x == anchor.x && p.y >= anchor.y && p.y <= anchor.y + length;
}

Triangle Triangle::from_sides(const Rational& a, const Rational& b, const Rational& c) {
  std::array<Rational, 3> s = {a, b, c};
  for (const auto& v : s)
    if (v <= 0) throw Error(ErrorCode::NonPositiveSide, "side must be positive, got " + to_string(v));
  std::sort(s.begin(), s.end());
  if (s[2] > s[0] + s[1])
    throw Error(ErrorCode::TriangleInequalityViolated,
                "longest side " + to_string(s[2]) + " exceeds " + to_string(s[0] + s[1]));
  Triangle t;
  t.a_ = s[0];
  t.b_ = s[1];
  t.c_ = s[2];
  t.degenerate_ = (s[2] == s[0] + s[1]);
  return t;
}

std::array<Rational, 3> Triangle::diag_set() const {
  std::array<Rational, 3> d = {a_ + b_ - c_, c_ + a_ - b_, b_ + c_ - a_};
  std::sort(d.begin(), d.end());
  return d;
}

Triangle Triangle::scaled(const Rational& lambda) const {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveScale, "scale must be positive");
  return from_sides(a_ * lambda, b_ * lambda, c_ * lambda);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end())
    throw Error(ErrorCode::DuplicatePoint,
                "duplicate point (" + to_string(dup->x) + ", " + to_string(dup->y) + ")");
}

bool is_copy(const Point& z1, const Point& z2, const Point& z3, const Triangle& t) {
  std::array<Rational, 3> d = {linf_dist(z1, z2), linf_dist(z2, z3), linf_dist(z3, z1)};
  std::sort(d.begin(), d.end());
  return d[0] == t.a() && d[1] == t.b() && d[2] == t.c();
}

namespace {

bool in_multiset3(const Rational& v, const std::array<Rational, 3>& s) {
  return v == s[0] || v == s[1] || v == s[2];
}

}  // namespace

bool lemma1_filter(const Point& z1, const Point& z2, const Point& z3, const Triangle& t) {
  if (t.degenerate())
    throw Error(ErrorCode::DegenerateTriangleUnsupported,
                "lemma1_filter requires a non-degenerate triangle");
  const auto sides = t.side_set();
  bool y_hit = in_multiset3(abs_rational(z1.y - z2.y), sides) ||
               in_multiset3(abs_rational(z2.y - z3.y), sides) ||
               in_multiset3(abs_rational(z3.y - z1.y), sides);
  if (!y_hit) return false;
  const auto diags = t.diag_set();
  Rational s1 = z1.x + z1.y, s2 = z2.x + z2.y, s3 = z3.x + z3.y;
  return in_multiset3(abs_rational(s1 - s2), diags) ||
         in_multiset3(abs_rational(s2 - s3), diags) ||
         in_multiset3(abs_rational(s3 - s1), diags);
}

std::vector<IndexTriple> enumerate_copies_reference(const PointSet& s, const Triangle& t) {
  std::vector<IndexTriple> out;
  const auto& pts = s.points();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (is_copy(pts[i], pts[j], pts[k], t)) out.push_back({i, j, k});
  return out;
}

std::vector<IndexTriple> enumerate_copies(const PointSet& s, const Triangle& t,
                                          const EnumerateOptions& opts) {
  const auto& pts = s.points();
  const std::size_t n = pts.size();
  if (n < 3) return {};
  const bool filter = opts.use_filter && !t.degenerate();
  const auto sides = t.side_set();

  // Pair prescreen: every edge of a copy realizes one of the sides.
  std::vector<uint8_t> pair_ok(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool ok = in_multiset3(linf_dist(pts[i], pts[j]), sides);
      pair_ok[i * n + j] = ok;
    }

  std::vector<std::vector<IndexTriple>> buckets(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
  for (long long li = 0; li < static_cast<long long>(n); ++li) {
    const std::size_t i = static_cast<std::size_t>(li);
    auto& local = buckets[i];
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      if (!pair_ok[i * n + j]) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!pair_ok[i * n + k] || !pair_ok[j * n + k]) continue;
        if (filter && !lemma1_filter(pts[i], pts[j], pts[k], t)) continue;
        if (is_copy(pts[i], pts[j], pts[k], t)) local.push_back({i, j, k});
      }
    }
  }
  std::vector<IndexTriple> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;  // per-i buckets concatenated in order: already lexicographic
}

std::pair<Triangle, PointSet> scale_instance(const Triangle& t, const PointSet& s,
                                             const Rational& lambda) {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveScale, "scale must be positive");
  std::vector<Point> pts;
  pts.reserve(s.size());
  for (const auto& p : s.points()) pts.push_back({p.x * lambda, p.y * lambda});
  return {t.scaled(lambda), PointSet(std::move(pts))};
}

namespace {

struct AxisSegment {
  // fixed coordinate value, varying range [lo, hi], axis = direction of variation
  Axis axis;
  Rational fixed;
  Rational lo, hi;
};

std::array<AxisSegment, 4> square_boundary(const Point& c, const Rational& r) {
  return {AxisSegment{Axis::Vertical, c.x + r, c.y - r, c.y + r},
          AxisSegment{Axis::Vertical, c.x - r, c.y - r, c.y + r},
          AxisSegment{Axis::Horizontal, c.y + r, c.x - r, c.x + r},
          AxisSegment{Axis::Horizontal, c.y - r, c.x - r, c.x + r}};
}

Point make_point(Axis axis, const Rational& fixed, const Rational& varying) {
  return axis == Axis::Vertical ? Point{fixed, varying} : Point{varying, fixed};
}

}  // namespace

CircleIntersection linf_circle_intersection(const Point& c1, const Rational& r1,
                                            const Point& c2, const Rational& r2) {
  CircleIntersection out;
  std::set<std::pair<Rational, Rational>> seen_points;
  auto add_point = [&](const Point& p) {
    if (seen_points.insert({p.x, p.y}).second) out.points.push_back(p);
  };
  const auto b1 = square_boundary(c1, r1);
  const auto b2 = square_boundary(c2, r2);
  for (const auto& s : b1)
    for (const auto& t : b2) {
      if (s.axis == t.axis) {
        if (s.fixed != t.fixed) continue;
        Rational lo = std::max(s.lo, t.lo), hi = std::min(s.hi, t.hi);
        if (lo > hi) continue;
        if (lo == hi) {
          add_point(make_point(s.axis, s.fixed, lo));
        } else {
          Segment seg;
          seg.axis = s.axis == Axis::Vertical ? Axis::Vertical : Axis::Horizontal;
          seg.anchor = make_point(s.axis, s.fixed, lo);
          seg.length = hi - lo;
          out.segments.push_back(seg);
        }
      } else {
        // s fixed on one axis, t on the other: at most one crossing.
        const AxisSegment& v = s.axis == Axis::Vertical ? s : t;
        const AxisSegment& h = s.axis == Axis::Vertical ? t : s;
        if (v.fixed >= h.lo && v.fixed <= h.hi && h.fixed >= v.lo && h.fixed <= v.hi)
          add_point({v.fixed, h.fixed});
      }
    }
  std::sort(out.points.begin(), out.points.end());
  std::sort(out.segments.begin(), out.segments.end(), [](const Segment& a, const Segment& b) {
    if (a.anchor != b.anchor) return a.anchor < b.anchor;
    return a.axis == Axis::Horizontal && b.axis == Axis::Vertical;
  });
  return out;
}

std::array<Point, 3> canonical_copy(const Triangle& t) {
  // (0,a) with (-c,0) and (b-c,0): distances c, a and b.
  return {Point{0, t.a()}, Point{-t.c(), 0}, Point{t.b() - t.c(), 0}};
}

}  // namespace cheby
