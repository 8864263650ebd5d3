#include "cheby/grid_scan.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cheby {

std::int64_t linf_dist(const GridPoint& p, const GridPoint& q) {
  return std::max(std::llabs(p.x - q.x), std::llabs(p.y - q.y));
}

bool is_grid_copy(const GridPoint& p, const GridPoint& q, const GridPoint& r,
                  const IntSides& sides) {
  std::array<std::int64_t, 3> d = {linf_dist(p, q), linf_dist(q, r), linf_dist(r, p)};
  std::sort(d.begin(), d.end());
  return d[0] == sides.a && d[1] == sides.b && d[2] == sides.c;
}

std::vector<GridPoint> ring_offsets(std::int64_t r) {
  std::vector<GridPoint> out;
  if (r <= 0) {
    if (r == 0) out.push_back({0, 0});
    return out;
  }
  out.reserve(static_cast<std::size_t>(8 * r));
  for (std::int64_t x = -r; x <= r; ++x) {
    if (x == -r || x == r) {
      for (std::int64_t y = -r; y <= r; ++y) out.push_back({x, y});
    } else {
      out.push_back({x, -r});
      out.push_back({x, r});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<std::int64_t, 3>> distinct_side_assignments(const IntSides& sides) {
  std::array<std::int64_t, 3> v = {sides.a, sides.b, sides.c};
  std::vector<std::array<std::int64_t, 3>> out;
  std::sort(v.begin(), v.end());
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

struct Assignment {
  std::vector<GridPoint> ring2;  // offsets for z2, filtered to > (0,0)
  std::vector<GridPoint> ring3;  // offsets for z3 (z3 > z2 enforced at scan time)
  std::int64_t d23 = 0;
};

std::vector<Assignment> build_assignments(const IntSides& sides) {
  std::vector<Assignment> out;
  for (const auto& [d12, d13, d23] : distinct_side_assignments(sides)) {
    Assignment a;
    for (const auto& o : ring_offsets(d12))
      if (GridPoint{0, 0} < o) a.ring2.push_back(o);
    a.ring3 = ring_offsets(d13);
    a.d23 = d23;
    out.push_back(std::move(a));
  }
  return out;
}

// Scans all copies with lexicographically smallest vertex z1; z2/z3
// bounds are left to the caller-provided predicate.
template <typename InBounds, typename Visit>
void scan_from(const GridPoint& z1, const std::vector<Assignment>& assignments,
               InBounds&& in_bounds, Visit&& visit) {
  for (const auto& asg : assignments) {
    for (const auto& o2 : asg.ring2) {
      GridPoint z2{z1.x + o2.x, z1.y + o2.y};
      if (!in_bounds(z2)) continue;
      // z3 offsets must exceed o2 lexicographically so z1 < z2 < z3.
      auto it = std::upper_bound(asg.ring3.begin(), asg.ring3.end(), o2);
      for (; it != asg.ring3.end(); ++it) {
        if (std::max(std::llabs(it->x - o2.x), std::llabs(it->y - o2.y)) != asg.d23) continue;
        GridPoint z3{z1.x + it->x, z1.y + it->y};
        if (!in_bounds(z3)) continue;
        visit(z2, z3);
      }
    }
  }
}

}  // namespace

std::vector<GridTriple> grid_copies_window(std::int64_t mx, std::int64_t my,
                                           const IntSides& sides, bool parallel) {
  std::vector<GridTriple> out;
  if (mx < 0 || my < 0) return out;
  const auto assignments = build_assignments(sides);
  auto in_window = [&](const GridPoint& p) {
    return p.x >= 0 && p.x <= mx && p.y >= 0 && p.y <= my;
  };
  const std::int64_t rows = mx + 1;
  std::vector<std::vector<GridTriple>> buckets(static_cast<std::size_t>(rows));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::int64_t x = 0; x < rows; ++x) {
    auto& local = buckets[static_cast<std::size_t>(x)];
    for (std::int64_t y = 0; y <= my; ++y) {
      GridPoint z1{x, y};
      std::vector<GridTriple> found;
      scan_from(z1, assignments, in_window,
                [&](const GridPoint& z2, const GridPoint& z3) { found.push_back({z1, z2, z3}); });
      std::sort(found.begin(), found.end());
      local.insert(local.end(), found.begin(), found.end());
    }
  }
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<GridTriple> grid_copies_window_reference(std::int64_t mx, std::int64_t my,
                                                     const IntSides& sides) {
  std::vector<GridPoint> pts;
  for (std::int64_t x = 0; x <= mx; ++x)
    for (std::int64_t y = 0; y <= my; ++y) pts.push_back({x, y});
  std::sort(pts.begin(), pts.end());
  std::vector<GridTriple> out;
  for (std::size_t i = 0; i + 2 < pts.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (is_grid_copy(pts[i], pts[j], pts[k], sides)) out.push_back({pts[i], pts[j], pts[k]});
  return out;
}

std::vector<GridTriple> grid_copies_torus_base(std::int64_t nx, std::int64_t ny,
                                               const IntSides& sides) {
  std::vector<GridTriple> out;
  if (nx <= 0 || ny <= 0) return out;
  const auto assignments = build_assignments(sides);
  auto everywhere = [](const GridPoint&) { return true; };
  for (std::int64_t x = 0; x < nx; ++x)
    for (std::int64_t y = 0; y < ny; ++y) {
      GridPoint z1{x, y};
      std::vector<GridTriple> found;
      scan_from(z1, assignments, everywhere,
                [&](const GridPoint& z2, const GridPoint& z3) { found.push_back({z1, z2, z3}); });
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    }
  return out;
}

std::optional<GridTriple> find_monochromatic_grid_copy(std::int64_t mx, std::int64_t my,
                                                       const IntSides& sides,
                                                       const std::vector<int>& colors,
                                                       bool parallel) {
  if (mx < 0 || my < 0) return std::nullopt;
  const auto assignments = build_assignments(sides);
  const std::int64_t width = mx + 1;
  auto color_at = [&](const GridPoint& p) {
    return colors[static_cast<std::size_t>(p.y * width + p.x)];
  };
  auto in_window = [&](const GridPoint& p) {
    return p.x >= 0 && p.x <= mx && p.y >= 0 && p.y <= my;
  };

  const std::int64_t rows = mx + 1;
  std::vector<std::optional<GridTriple>> row_best(static_cast<std::size_t>(rows));
  // Rows past a row that already produced a triple cannot improve the
  // lexicographic minimum; they are skipped once a hit is published.
  std::int64_t found_row = rows;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel) shared(found_row)
#endif
  for (std::int64_t x = 0; x < rows; ++x) {
    std::int64_t limit;
#ifdef _OPENMP
#pragma omp atomic read
    limit = found_row;
#else
    limit = found_row;
#endif
    if (x > limit) continue;
    std::optional<GridTriple> best;
    for (std::int64_t y = 0; y <= my && !best; ++y) {
      GridPoint z1{x, y};
      const int c1 = color_at(z1);
      std::vector<GridTriple> found;
      scan_from(z1, assignments, in_window, [&](const GridPoint& z2, const GridPoint& z3) {
        if (color_at(z2) == c1 && color_at(z3) == c1) found.push_back({z1, z2, z3});
      });
      if (!found.empty()) best = *std::min_element(found.begin(), found.end());
    }
    if (best) {
      row_best[static_cast<std::size_t>(x)] = best;
#ifdef _OPENMP
#pragma omp critical(mono_found_row)
      {
        if (x < found_row) found_row = x;
      }
#else
      found_row = std::min(found_row, x);
#endif
    }
  }
  for (const auto& b : row_best)
    if (b) return b;
  return std::nullopt;
}

}  // namespace cheby
