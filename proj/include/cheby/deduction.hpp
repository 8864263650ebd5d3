#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheby/geometry.hpp"
#include "cheby/plane_coloring.hpp"

namespace cheby {

// The deduction layer replays the forcing arguments on concrete rational
// instances. Every geometric claim it makes is emitted as an obligation
// and checked by exact arithmetic; nothing is trusted symbolically.

enum class ObligationKind { Copy, Reflection, Containment };

struct Obligation {
  ObligationKind kind = ObligationKind::Copy;
  std::vector<Point> points;  // the copy triple, or the endpoints involved
  bool verified = false;
  std::string note;
};

// One of the twelve shift vectors whose failure to be an anti-period
// forces a monochromatic axis-parallel segment. part 1/2/3 forces length
// b+c-a / c+a-b / a+b-c respectively.
struct AntiperiodCase {
  int part = 0;
  ShiftVector vector;      // the vector as listed
  ShiftVector pair_delta;  // canonical z2 - z1 the segment formula assumes
  Segment segment_at_origin;  // forced segment for a pair anchored at (0,0)
};

std::array<AntiperiodCase, 12> antiperiod_cases(const Triangle& t);

struct ForcedSegmentResult {
  Segment segment;
  Rational length;
  std::vector<Obligation> obligations;  // sampled points, each a copy with the pair
};

// Given two same-colored points whose difference matches the case vector
// (either sign), returns the axis-parallel segment forced onto the other
// color. Throws PairDoesNotMatchCase / DegenerateTriangleUnsupported.
ForcedSegmentResult forced_segment(const Point& p1, const Point& p2, const ShiftVector& case_vector,
                                   const Triangle& t);

// A derived period written as a signed sum of derived anti-periods.
struct PeriodDecomposition {
  ShiftVector period;
  std::vector<std::pair<int, ShiftVector>> terms;  // (+1|-1, anti-period)
};

struct AntiperiodReport {
  std::string hypothesis;
  std::vector<ShiftVector> anti_periods;          // the eight forced vectors
  std::vector<PeriodDecomposition> periods;       // the six forced periods
  std::int64_t search_bound = 0;
  std::optional<std::array<std::int64_t, 3>> certificate;  // (n, m, k)
  Rational certificate_value;                     // 2an + 2bm + 2ck when found
  std::vector<ShiftVector> extra_anti_periods;    // four more when certified
};

// Consequences of "no monochromatic axis-parallel segment of length
// c+a-b": eight anti-periods, six periods with recorded decompositions,
// and, when small integers n, m, k with 0 < 2an+2bm+2ck <= a+b-c exist in
// the search box, four extra anti-periods.
AntiperiodReport antiperiod_consequences(const Triangle& t, std::int64_t bound);

struct ForcedLinesReport {
  Rational hypothesis_line_y;                // 0, assumed monochromatic "red"
  std::vector<Rational> forced_lines;        // y-values forced to the other color
  std::int64_t search_bound = 0;
  std::optional<std::array<std::int64_t, 2>> certificate;  // (n, m), n+m even
  Rational certificate_value;                // a n + b m when found
  std::vector<Obligation> obligations;
};

// Under "line y=0 monochromatic": lines y=a and y=b are forced; y=c too
// when an even-sum pair (n, m) with c-b <= an+bm <= a exists in the box.
// Obligations are instantiated at x0 = 0.
ForcedLinesReport forced_lines(const Triangle& t, std::int64_t bound);

struct TraceStep {
  int level = 0;    // 0 is the hypothesis segment
  int color = 0;    // 0 alternates with 1 level by level
  Segment segment;  // horizontal, on the line y = segment.anchor.y
};

struct DeductionTrace {
  bool isosceles = false;  // b == c branch
  Rational base_length;    // level-0 length
  Rational growth;         // per-level half-increment: lengths grow by 2*growth
  std::vector<TraceStep> steps;
  std::vector<Obligation> obligations;
};

// Replays the alternating segment-extension argument: a monochromatic
// horizontal segment forces an oppositely colored longer one on a
// neighboring line, back and forth, lengths growing by 2*growth per
// level. Requires a < b (HypothesisViolated) and a non-degenerate
// triangle (DegenerateTriangleUnsupported).
DeductionTrace segment_extension_trace(const Triangle& t, int depth);

}  // namespace cheby
