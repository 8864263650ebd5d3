#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cheby/geometry.hpp"
#include "cheby/grid_scan.hpp"
#include "cheby/hypergraph.hpp"

namespace cheby {

// Two-sided bounds on the maximum asymptotic density of a copy-free
// subset of the integer grid. Lower bounds come from wraparound-periodic
// sets (valid infinite constructions); upper bounds from patch
// independence numbers (averaging argument). The two are never conflated.

struct TorusDims {
  int dimension = 1;  // 1 or 2
  std::int64_t nx = 1;
  std::int64_t ny = 1;  // 1 in the 1D case
};

struct DensityLowerBound {
  TorusDims dims;
  std::vector<GridPoint> cells;  // witness inside [0,nx) x [0,ny), lex sorted
  Rational value;                // |cells| / (nx * ny)
  std::uint64_t nodes = 0;
};

struct DensityUpperBound {
  TorusDims dims;  // patch dims, no wraparound
  std::size_t alpha = 0;
  std::vector<GridPoint> witness;  // an alpha-sized copy-free patch subset
  Rational value;                  // alpha / (nx * ny)
  std::uint64_t nodes = 0;
};

// Requires integer sides (scale first); throws NonIntegralSides.
IntSides integral_sides(const Triangle& t);

// The complete copy constraint system of the (nx, ny)-periodic extension,
// with vertices the torus cells; edges can have fewer than three cells
// when copy vertices coincide modulo the period.
MixedHypergraph torus_constraints(const Triangle& t, const TorusDims& dims);

// Best periodic construction on the given torus.
DensityLowerBound density_lower_torus(const Triangle& t, const TorusDims& dims);

// alpha(patch) / patch size; a valid upper bound for the asymptotic
// density.
DensityUpperBound density_upper_patch(const Triangle& t, const TorusDims& dims);

// Independent wrap-aware check of a periodic set; reports the first
// violating copy if any.
bool torus_set_copy_free(const Triangle& t, const TorusDims& dims,
                         const std::vector<GridPoint>& cells,
                         GridTriple* violation = nullptr);

// S1 x S1 on the (n, n) torus from a 1D witness; the product is
// re-verified copy-free, not assumed. Throws ProductNotCopyFree with the
// violating copy in the message when verification fails.
DensityLowerBound product_construction(const DensityLowerBound& one_dimensional,
                                       const Triangle& t);

}  // namespace cheby
