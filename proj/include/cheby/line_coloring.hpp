#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheby/rational.hpp"

namespace cheby {

// Periodic piecewise-constant coloring of the real line. Interval i covers
// [breaks[i], breaks[i+1]) with breaks[0] == 0 and the last interval
// wrapping at the period. Half-open semantics everywhere.
class LineColoring {
public:
  // Throws Error{BadColoring} unless: period > 0, breaks strictly
  // increasing in [0, period) starting at 0, one color per interval,
  // color indices contiguous from 0, and no two cyclically adjacent
  // intervals share a color unless allow_adjacent_same is set.
  LineColoring(Rational period, std::vector<Rational> breaks, std::vector<int> colors,
               bool allow_adjacent_same = false);

  const Rational& period() const { return period_; }
  const std::vector<Rational>& breaks() const { return breaks_; }
  const std::vector<int>& colors() const { return colors_; }
  int color_count() const { return color_count_; }

  // Color of the interval containing x mod period.
  int eval(const Rational& x) const;

  // Merges runs of equal adjacent colors (the wrap join stays split when
  // merging it would move the 0 breakpoint; such colorings carry the
  // intentional-adjacency flag instead).
  LineColoring normalized() const;

  LineColoring scaled(const Rational& lambda) const;

  bool operator==(const LineColoring& o) const {
    return period_ == o.period_ && breaks_ == o.breaks_ && colors_ == o.colors_;
  }

private:
  Rational period_;
  std::vector<Rational> breaks_;
  std::vector<int> colors_;
  int color_count_ = 0;
};

// Finite set of forbidden distances, deduplicated and ascending.
class DistanceSet {
public:
  DistanceSet() = default;
  explicit DistanceSet(std::vector<Rational> distances);

  const std::vector<Rational>& values() const { return values_; }
  bool contains_zero() const { return !values_.empty() && values_.front() == 0; }
  std::size_t size() const { return values_.size(); }

private:
  std::vector<Rational> values_;
};

struct DistanceViolation {
  Rational x;  // color(x) == color(x + d)
  Rational d;
};

struct AvoidanceVerdict {
  bool avoids = false;
  std::optional<DistanceViolation> violation;  // set iff !avoids
};

// Exact decision by finite interval-pair analysis: "avoids" iff no two
// same-colored reals lie at any distance in d. The witness, when present,
// is the first violation in (distance, interval-pair) scan order.
// Throws Error{ZeroDistanceWithNonemptyColoring} when 0 is in d.
AvoidanceVerdict avoids_distances(const LineColoring& coloring, const DistanceSet& d);

struct IntegerDistanceSet {
  std::vector<std::int64_t> values;  // ascending, positive
  Rational scale;                    // lcm of input denominators
  std::int64_t gcd = 1;              // gcd of the scaled values (metadata)
};

// Scales a positive rational distance set to integers by the lcm of the
// denominators. Avoidance problems are equivalent under this scaling.
// Throws Error{ZeroDistance} on nonpositive input.
IntegerDistanceSet rational_distance_reduction(const DistanceSet& d);

struct ChiLowerResult {
  int chi = 1;                 // exact chromatic number of the window graph
  std::size_t window = 0;      // vertices {0..window}
  std::vector<int> witness;    // a proper chi-coloring of the window
  // Exhausted-search attestation per k < chi: nodes visited proving
  // k-infeasibility.
  std::vector<std::pair<int, std::uint64_t>> refuted;
};

// Exact chromatic number of the graph on {0..window} with edges |i-j| in
// d; a valid lower bound for coloring the whole line against d.
ChiLowerResult chi_line_lower(const std::vector<std::int64_t>& d, std::size_t window);

struct ChiUpperResult {
  bool found = false;
  int colors = 0;                        // smallest k found, or best k tried
  std::optional<LineColoring> witness;   // periodic witness when found
  std::int64_t max_period = 0;
};

// Smallest k admitting a periodic residue-class coloring with period <= max_period
// avoiding every distance in d. The witness is the lexicographically
// smallest valid color word over all (k, period) in search order.
// Searches only integer-breakpoint colorings; this is complete for the
// searched family, not for all measurable colorings.
ChiUpperResult chi_line_upper(const std::vector<std::int64_t>& d, std::int64_t max_period,
                              int max_colors = 0);

enum class BoundStatus { Exact, Bounds };

struct ChromaticResult {
  ChiLowerResult lower;
  ChiUpperResult upper;
  BoundStatus status = BoundStatus::Bounds;
};

// Runs reduction + both bounds and reconciles them.
ChromaticResult chi_line(const DistanceSet& d, std::size_t window, std::int64_t max_period);

}  // namespace cheby
