#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cheby/rational.hpp"

namespace cheby {

// Integer-lattice copy enumeration. All heavy scans (coloring
// falsification sweeps, torus constraint generation, patch hypergraphs)
// reduce to an integer grid first and run here on plain int64.

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const GridPoint& o) const { return x < o.x || (x == o.x && y < o.y); }
};

using GridTriple = std::array<GridPoint, 3>;

// Sorted integer sides 0 < a <= b <= c.
struct IntSides {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

std::int64_t linf_dist(const GridPoint& p, const GridPoint& q);

bool is_grid_copy(const GridPoint& p, const GridPoint& q, const GridPoint& r,
                  const IntSides& sides);

// Lattice offsets at Chebyshev distance exactly r, lexicographically
// sorted. 8r offsets for r >= 1.
std::vector<GridPoint> ring_offsets(std::int64_t r);

// Distinct permutations of (a, b, c) as (d12, d13, d23) assignments;
// duplicates collapse for isosceles/equilateral sides.
std::vector<std::array<std::int64_t, 3>> distinct_side_assignments(const IntSides& sides);

// All copies with every vertex in [0..mx] x [0..my], as triples
// z1 < z2 < z3 in lexicographic order of (z1, z2, z3).
std::vector<GridTriple> grid_copies_window(std::int64_t mx, std::int64_t my,
                                           const IntSides& sides, bool parallel = true);

// Cubic-time scan used as the testing oracle; only sensible for tiny
// windows.
std::vector<GridTriple> grid_copies_window_reference(std::int64_t mx, std::int64_t my,
                                                     const IntSides& sides);

// Copies whose lexicographically smallest vertex lies in
// [0, nx) x [0, ny); the other vertices range over all of Z^2. This is
// the complete copy list of an (nx, ny)-periodic set up to period
// translations.
std::vector<GridTriple> grid_copies_torus_base(std::int64_t nx, std::int64_t ny,
                                               const IntSides& sides);

// Lexicographically smallest monochromatic copy in the window under the
// given color table (row-major, colors[y * (mx+1) + x]), or nullopt.
// Result is independent of the worker count.
std::optional<GridTriple> find_monochromatic_grid_copy(std::int64_t mx, std::int64_t my,
                                                       const IntSides& sides,
                                                       const std::vector<int>& colors,
                                                       bool parallel = true);

}  // namespace cheby
