#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheby/geometry.hpp"
#include "cheby/line_coloring.hpp"

namespace cheby {

enum class LiftAxis { Horizontal, Diagonal };

// Doubly periodic coloring given by rectangle cells: cell (ix, iy) covers
// [xbreaks[ix], xbreaks[ix+1]) x [ybreaks[iy], ybreaks[iy+1]) inside the
// fundamental rectangle [0, px) x [0, py).
struct GridSpec {
  Rational px, py;
  std::vector<Rational> xbreaks;
  std::vector<Rational> ybreaks;
  std::vector<std::vector<int>> table;  // table[iy][ix]
};

// One of the three representable plane colorings: a horizontal lift
// (color(x,y) = line(y)), a diagonal lift (color(x,y) = line(x+y)), or a
// grid-periodic table. Exact decisions (certification, shift parity) are
// only offered for these.
class PlaneColoring {
public:
  enum class Kind { HorizontalLift, DiagonalLift, GridPeriodic };

  static PlaneColoring horizontal_lift(LineColoring line);
  static PlaneColoring diagonal_lift(LineColoring line);
  static PlaneColoring grid_periodic(GridSpec spec);

  Kind kind() const { return kind_; }
  bool is_lift() const { return kind_ != Kind::GridPeriodic; }
  const LineColoring& line() const { return *line_; }
  const GridSpec& grid() const { return *grid_; }
  int color_count() const { return color_count_; }

  int eval(const Point& p) const;

private:
  PlaneColoring() = default;
  Kind kind_ = Kind::HorizontalLift;
  std::optional<LineColoring> line_;
  std::optional<GridSpec> grid_;
  int color_count_ = 0;
};

PlaneColoring lift(const LineColoring& line, LiftAxis axis);

struct LiftCertificate {
  bool certified = false;
  LiftAxis route = LiftAxis::Horizontal;
  DistanceSet distances;                       // the 1D set that was checked
  std::optional<AvoidanceVerdict> verdict;     // embedded 1D verdict
  std::string reason;                          // set when not certified
};

// Horizontal lifts are certified against side_set, diagonal lifts against
// diag_set. Throws DegenerateDiagonalRoute when the diagonal route is
// inapplicable (0 in diag_set). Non-lift colorings yield not-certified.
LiftCertificate certify_lift(const PlaneColoring& p, const Triangle& t);

struct SampleVerdict {
  bool counterexample_found = false;
  std::optional<std::array<Point, 3>> witness;  // lexicographically smallest
  std::int64_t grid_side = 0;                   // points per axis - 1
  bool vacuous = false;  // no copy of t is realizable on the grid at all
  // A clean sweep is evidence, never a certificate.
  std::string note;
};

// Scans every copy of t with vertices in (step Z)^2 intersected with
// [0, window]^2 and reports the lexicographically smallest monochromatic
// one, independent of worker count. Throws EmptyGrid when window or step
// is nonpositive.
SampleVerdict sample_verify(const PlaneColoring& p, const Triangle& t, const Rational& window,
                            const Rational& step, bool parallel = true);

struct ShiftVector {
  Rational dx, dy;
};

enum class ParityValue { Period, AntiPeriod, Neither };

struct ShiftParity {
  ParityValue value = ParityValue::Neither;
  // For Neither: a point whose color is preserved by the shift and one
  // whose color changes, together contradicting both labels.
  std::optional<Point> same_witness;
  std::optional<Point> diff_witness;
};

// Exact decision for the representable colorings.
ShiftParity shift_parity(const PlaneColoring& p, const ShiftVector& v);

enum class ParityLabel { Period, AntiPeriod };

struct LabeledShift {
  ShiftVector vector;
  ParityLabel label;
};

enum class ShiftOp { Add, Subtract };

// Sign algebra: combining equal labels yields a period, mixed labels an
// anti-period; subtraction behaves like addition of the negated vector.
LabeledShift combine_shifts(const LabeledShift& s1, const LabeledShift& s2,
                            ShiftOp op = ShiftOp::Add);

struct PlaneChiRoute {
  LiftAxis axis = LiftAxis::Horizontal;
  bool applicable = false;
  ChromaticResult line_result;
};

struct PlaneChiResult {
  int lower = 2;  // one monochromatic-forbidden copy always exists
  std::array<Point, 3> lower_witness;
  std::optional<int> upper;         // min over applicable routes
  std::optional<LiftAxis> upper_route;
  PlaneChiRoute side_route;         // horizontal lift vs side_set
  PlaneChiRoute diag_route;         // diagonal lift vs diag_set
  bool exact = false;
};

// Two-sided bounds for coloring the whole plane against copies of t,
// assembled from the 1D engine through the two lift routes.
PlaneChiResult plane_chi(const Triangle& t, std::size_t window, std::int64_t max_period);

}  // namespace cheby
