#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "cheby/rational.hpp"

namespace cheby {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  // Lexicographic by (x, y); the canonical order used everywhere.
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p, const Point& q);

// max(|dx|, |dy|), the Chebyshev distance.
Rational linf_dist(const Point& p, const Point& q);

enum class Axis { Horizontal, Vertical };

// Closed axis-parallel segment: anchor is the endpoint with the smaller
// free coordinate, the segment spans [anchor, anchor + length] along axis.
struct Segment {
  Axis axis = Axis::Horizontal;
  Point anchor;
  Rational length;  // >= 0

  Point other_end() const;
  Point point_at(const Rational& t) const;  // t in [0,1] along the segment
  bool contains(const Point& p) const;
};

// Sorted side triple 0 < a <= b <= c with c <= a+b. Degenerate means
// c == a+b exactly.
class Triangle {
public:
  // Accepts the three sides in any order; sorts and classifies.
  // Throws NonPositiveSide / TriangleInequalityViolated.
  static Triangle from_sides(const Rational& a, const Rational& b, const Rational& c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  bool degenerate() const { return degenerate_; }

  // {a, b, c} ascending (multiset).
  std::array<Rational, 3> side_set() const { return {a_, b_, c_}; }
  // {a+b-c, c+a-b, b+c-a} ascending; these are the distances realized on
  // the x+y axis by any copy.
  std::array<Rational, 3> diag_set() const;

  Triangle scaled(const Rational& lambda) const;

  bool operator==(const Triangle& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

private:
  Triangle() = default;
  Rational a_, b_, c_;
  bool degenerate_ = false;
};

// Finite set of distinct points kept in canonical (x, y)-lexicographic
// order. Duplicates are rejected, not merged.
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

private:
  std::vector<Point> points_;
};

using IndexTriple = std::array<std::size_t, 3>;

// True iff the pairwise distance multiset equals {a, b, c}.
bool is_copy(const Point& z1, const Point& z2, const Point& z3, const Triangle& t);

// Necessary condition for a copy of a non-degenerate triangle: some
// |y_i - y_j| lies in side_set and some |(x_i+y_i) - (x_j+y_j)| lies in
// diag_set. Throws DegenerateTriangleUnsupported for degenerate t.
bool lemma1_filter(const Point& z1, const Point& z2, const Point& z3, const Triangle& t);

struct EnumerateOptions {
  // Apply lemma1_filter before the full multiset check (non-degenerate
  // triangles only). Output is identical either way.
  bool use_filter = true;
  bool parallel = true;
};

// All index triples {i < j < k} forming copies of t, in lexicographic
// order. Deterministic for any worker count.
std::vector<IndexTriple> enumerate_copies(const PointSet& s, const Triangle& t,
                                          const EnumerateOptions& opts = {});

// Plain triple scan without filtering or parallelism; reference
// implementation the fast path is tested against.
std::vector<IndexTriple> enumerate_copies_reference(const PointSet& s, const Triangle& t);

// Multiplies every side and coordinate by lambda > 0. Copy structure is
// preserved. Throws NonPositiveScale.
std::pair<Triangle, PointSet> scale_instance(const Triangle& t, const PointSet& s,
                                             const Rational& lambda);

// Intersection of two Chebyshev circles (boundaries of axis-aligned
// squares). The result can contain whole segments when square sides
// overlap; isolated crossings are returned as points.
struct CircleIntersection {
  std::vector<Point> points;     // isolated intersection points
  std::vector<Segment> segments; // overlapping boundary pieces (length > 0)
};

CircleIntersection linf_circle_intersection(const Point& center1, const Rational& r1,
                                            const Point& center2, const Rational& r2);

// A concrete copy of t anchored at the origin: {(0,a), (-c,0), (b-c,0)}.
// Valid for every triangle with positive sides.
std::array<Point, 3> canonical_copy(const Triangle& t);

}  // namespace cheby
