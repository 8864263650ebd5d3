#include "cheby/density.hpp"

#include <algorithm>
#include <set>

#include "cheby/errors.hpp"

namespace cheby {

IntSides integral_sides(const Triangle& t) {
  if (!is_integral(t.a()) || !is_integral(t.b()) || !is_integral(t.c()))
    throw Error(ErrorCode::NonIntegralSides,
                "sides must be integers; scale the instance first");
  return IntSides{to_int64(t.a()), to_int64(t.b()), to_int64(t.c())};
}

namespace {

std::int64_t wrap(std::int64_t v, std::int64_t n) { return ((v % n) + n) % n; }

// Copies living on the integer line: three collinear points realize
// {a, b, c} only when c = a + b, as {x, x+a, x+c} or {x, x+b, x+c}.
std::vector<std::array<std::int64_t, 3>> line_copies_from(std::int64_t x, const IntSides& s) {
  std::vector<std::array<std::int64_t, 3>> out;
  if (s.c != s.a + s.b) return out;
  out.push_back({x, x + s.a, x + s.c});
  if (s.b != s.a) out.push_back({x, x + s.b, x + s.c});
  return out;
}

std::vector<std::size_t> cells_of_line_copy(const std::array<std::int64_t, 3>& copy,
                                            std::int64_t n) {
  std::set<std::int64_t> cells;
  for (std::int64_t v : copy) cells.insert(wrap(v, n));
  return std::vector<std::size_t>(cells.begin(), cells.end());
}

std::vector<std::size_t> cells_of_grid_copy(const GridTriple& copy, std::int64_t nx,
                                            std::int64_t ny) {
  std::set<std::pair<std::int64_t, std::int64_t>> cells;
  for (const auto& p : copy) cells.insert({wrap(p.x, nx), wrap(p.y, ny)});
  std::vector<std::size_t> out;
  for (const auto& [x, y] : cells)
    out.push_back(static_cast<std::size_t>(x * ny + y));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MixedHypergraph torus_constraints(const Triangle& t, const TorusDims& dims) {
  const IntSides sides = integral_sides(t);
  MixedHypergraph h;
  std::set<std::vector<std::size_t>> edges;
  if (dims.dimension == 1) {
    h.n = static_cast<std::size_t>(dims.nx);
    for (std::int64_t x = 0; x < dims.nx; ++x)
      for (const auto& copy : line_copies_from(x, sides))
        edges.insert(cells_of_line_copy(copy, dims.nx));
  } else {
    h.n = static_cast<std::size_t>(dims.nx * dims.ny);
    for (const auto& copy : grid_copies_torus_base(dims.nx, dims.ny, sides))
      edges.insert(cells_of_grid_copy(copy, dims.nx, dims.ny));
  }
  h.edges.assign(edges.begin(), edges.end());
  return h;
}

bool torus_set_copy_free(const Triangle& t, const TorusDims& dims,
                         const std::vector<GridPoint>& cells, GridTriple* violation) {
  const IntSides sides = integral_sides(t);
  std::set<std::pair<std::int64_t, std::int64_t>> in_set;
  for (const auto& c : cells) in_set.insert({c.x, c.y});
  auto contains = [&](std::int64_t x, std::int64_t y) {
    return in_set.count({wrap(x, dims.nx), wrap(y, dims.ny)}) > 0;
  };
  if (dims.dimension == 1) {
    for (std::int64_t x = 0; x < dims.nx; ++x)
      for (const auto& copy : line_copies_from(x, sides)) {
        if (contains(copy[0], 0) && contains(copy[1], 0) && contains(copy[2], 0)) {
          if (violation)
            *violation = {GridPoint{copy[0], 0}, GridPoint{copy[1], 0}, GridPoint{copy[2], 0}};
          return false;
        }
      }
    return true;
  }
  for (const auto& copy : grid_copies_torus_base(dims.nx, dims.ny, sides)) {
    if (contains(copy[0].x, copy[0].y) && contains(copy[1].x, copy[1].y) &&
        contains(copy[2].x, copy[2].y)) {
      if (violation) *violation = copy;
      return false;
    }
  }
  return true;
}

namespace {

std::vector<GridPoint> ids_to_cells(const std::vector<std::size_t>& ids, std::int64_t ny) {
  std::vector<GridPoint> out;
  out.reserve(ids.size());
  for (std::size_t id : ids)
    out.push_back(GridPoint{static_cast<std::int64_t>(id) / ny,
                            static_cast<std::int64_t>(id) % ny});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DensityLowerBound density_lower_torus(const Triangle& t, const TorusDims& dims) {
  if (dims.nx < 1 || dims.ny < 1)
    throw Error(ErrorCode::EmptyGrid, "torus dimensions must be at least 1");
  MixedHypergraph constraints = torus_constraints(t, dims);
  SubsetSolve solve = max_independent_subset(constraints);
  DensityLowerBound res;
  res.dims = dims;
  res.cells = ids_to_cells(solve.witness, dims.ny);
  res.value = Rational(static_cast<long>(solve.alpha),
                       static_cast<long>(dims.nx * dims.ny));
  res.value.canonicalize();
  res.nodes = solve.nodes;
  GridTriple violation;
  if (!torus_set_copy_free(t, dims, res.cells, &violation))
    throw Error(ErrorCode::ProductNotCopyFree,
                "internal error: torus witness failed the independent re-check");
  return res;
}

DensityUpperBound density_upper_patch(const Triangle& t, const TorusDims& dims) {
  if (dims.nx < 1 || dims.ny < 1)
    throw Error(ErrorCode::EmptyGrid, "patch dimensions must be at least 1");
  integral_sides(t);
  std::vector<Point> pts;
  for (std::int64_t x = 0; x < dims.nx; ++x) {
    if (dims.dimension == 1) {
      pts.push_back(Point{Rational(static_cast<long>(x)), 0});
    } else {
      for (std::int64_t y = 0; y < dims.ny; ++y)
        pts.push_back(Point{Rational(static_cast<long>(x)), Rational(static_cast<long>(y))});
    }
  }
  PointSet patch(std::move(pts));
  CopyHypergraph h = build_copy_hypergraph(patch, t);
  SubsetSolve solve = max_copy_free_subset(h);
  DensityUpperBound res;
  res.dims = dims;
  res.alpha = solve.alpha;
  for (std::size_t idx : solve.witness) {
    const Point& p = patch[idx];
    res.witness.push_back(GridPoint{to_int64(p.x), to_int64(p.y)});
  }
  res.value = Rational(static_cast<long>(solve.alpha),
                       static_cast<long>(dims.nx * dims.ny));
  res.value.canonicalize();
  res.nodes = solve.nodes;
  return res;
}

DensityLowerBound product_construction(const DensityLowerBound& one_dimensional,
                                       const Triangle& t) {
  if (one_dimensional.dims.dimension != 1)
    throw Error(ErrorCode::EmptyGrid, "product construction starts from a 1D witness");
  const std::int64_t n = one_dimensional.dims.nx;
  DensityLowerBound res;
  res.dims = TorusDims{2, n, n};
  for (const auto& cx : one_dimensional.cells)
    for (const auto& cy : one_dimensional.cells)
      res.cells.push_back(GridPoint{cx.x, cy.x});
  std::sort(res.cells.begin(), res.cells.end());
  res.value = one_dimensional.value * one_dimensional.value;
  GridTriple violation;
  if (!torus_set_copy_free(t, res.dims, res.cells, &violation)) {
    std::string msg = "product set admits a copy:";
    for (const auto& p : violation)
      msg += " (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    throw Error(ErrorCode::ProductNotCopyFree, msg);
  }
  return res;
}

}  // namespace cheby
