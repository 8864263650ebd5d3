#include "cheby/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "cheby/errors.hpp"
#include "cheby/grid_scan.hpp"

namespace cheby {

CopyHypergraph build_copy_hypergraph(const PointSet& s, const Triangle& t) {
  CopyHypergraph h;
  h.vertex_count = s.size();
  h.edges = enumerate_copies(s, t);
  h.points = s;
  h.triangle = t;
  return h;
}

namespace {

std::vector<std::size_t> degree_order(std::size_t n, const std::vector<IndexTriple>& edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges)
    for (std::size_t v : e) ++degree[v];
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t u, std::size_t v) { return degree[u] > degree[v]; });
  return order;
}

// Backtracking k-colorability; rejects a color that would complete a
// monochromatic edge (the third vertex of a two-same-colored edge).
std::optional<std::vector<int>> color_hypergraph(std::size_t n,
                                                 const std::vector<IndexTriple>& edges, int k,
                                                 std::uint64_t& nodes) {
  if (n == 0) return std::vector<int>{};
  const auto order = degree_order(n, edges);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t v : edges[e]) incident[v].push_back(e);

  std::vector<int> color(n, -1);
  std::vector<int> next_try(n, 0);
  std::vector<int> max_used_at(n + 1, -1);
  std::size_t pos = 0;
  while (true) {
    if (pos == n) return color;
    std::size_t v = order[pos];
    bool advanced = false;
    const int cap = std::min(k - 1, max_used_at[pos] + 1);
    for (int c = next_try[pos]; c <= cap; ++c) {
      ++nodes;
      bool ok = true;
      for (std::size_t e : incident[v]) {
        int same = 0, colored = 0;
        for (std::size_t u : edges[e]) {
          if (u == v) continue;
          if (color[u] >= 0) {
            ++colored;
            if (color[u] == c) ++same;
          }
        }
        if (colored == 2 && same == 2) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[v] = c;
        next_try[pos] = c + 1;
        max_used_at[pos + 1] = std::max(max_used_at[pos], c);
        ++pos;
        if (pos < n) next_try[pos] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (pos == 0) return std::nullopt;
      color[v] = -1;
      next_try[pos] = 0;
      --pos;
      color[order[pos]] = -1;
    }
  }
}

}  // namespace

ChromaticSolve hypergraph_chromatic(const CopyHypergraph& h, int k_max) {
  ChromaticSolve res;
  for (int k = 1; k <= k_max; ++k) {
    std::uint64_t nodes = 0;
    if (auto coloring = color_hypergraph(h.vertex_count, h.edges, k, nodes)) {
      res.chi = k;
      res.coloring = *coloring;
      res.nodes = nodes;
      return res;
    }
    res.refuted.emplace_back(k, nodes);
  }
  res.exceeded = true;
  return res;
}

namespace {

// Working instance for the independence solver. Vertices keep their
// original labels (16-bit); edges are sorted label sets of size 1..3
// stored as PODs so instances copy cheaply.
struct SmallEdge {
  std::uint8_t size = 0;
  std::array<std::uint16_t, 3> v = {0, 0, 0};

  bool operator==(const SmallEdge& o) const { return size == o.size && v == o.v; }
  bool operator<(const SmallEdge& o) const {
    if (v != o.v) return v < o.v;
    return size < o.size;
  }
  bool contains(std::uint16_t u) const {
    for (std::uint8_t i = 0; i < size; ++i)
      if (v[i] == u) return true;
    return false;
  }
};

struct Instance {
  std::vector<std::uint16_t> verts;  // ascending
  std::vector<SmallEdge> edges;
};

void normalize_edges(Instance& inst) {
  for (auto& e : inst.edges) {
    std::sort(e.v.begin(), e.v.begin() + e.size);
    for (std::uint8_t i = e.size; i < 3; ++i) e.v[i] = 0xffff;
  }
  std::sort(inst.edges.begin(), inst.edges.end());
  inst.edges.erase(std::unique(inst.edges.begin(), inst.edges.end()), inst.edges.end());
  // A pair edge subsumes any triple containing it.
  std::set<std::pair<std::uint16_t, std::uint16_t>> pairs;
  for (const auto& e : inst.edges)
    if (e.size == 2) pairs.insert({e.v[0], e.v[1]});
  if (!pairs.empty()) {
    std::erase_if(inst.edges, [&](const SmallEdge& e) {
      return e.size == 3 &&
             (pairs.count({e.v[0], e.v[1]}) || pairs.count({e.v[0], e.v[2]}) ||
              pairs.count({e.v[1], e.v[2]}));
    });
  }
}

// nullopt when v cannot be included (a unit edge {v}).
std::optional<Instance> include_vertex(const Instance& inst, std::uint16_t v) {
  Instance out;
  out.verts.reserve(inst.verts.size() - 1);
  for (std::uint16_t u : inst.verts)
    if (u != v) out.verts.push_back(u);
  out.edges.reserve(inst.edges.size());
  for (const auto& e : inst.edges) {
    if (!e.contains(v)) {
      out.edges.push_back(e);
      continue;
    }
    if (e.size == 1) return std::nullopt;
    SmallEdge reduced;
    for (std::uint8_t i = 0; i < e.size; ++i)
      if (e.v[i] != v) reduced.v[reduced.size++] = e.v[i];
    out.edges.push_back(reduced);
  }
  normalize_edges(out);
  return out;
}

Instance exclude_vertex(const Instance& inst, std::uint16_t v) {
  Instance out;
  out.verts.reserve(inst.verts.size() - 1);
  for (std::uint16_t u : inst.verts)
    if (u != v) out.verts.push_back(u);
  out.edges.reserve(inst.edges.size());
  for (const auto& e : inst.edges)
    if (!e.contains(v)) out.edges.push_back(e);
  return out;
}

struct IndependenceSolver {
  std::uint64_t nodes = 0;
  std::unordered_map<std::string, std::size_t> memo;
  std::vector<std::uint16_t> rank_scratch;

  // Relabels vertices by rank so translated copies of the same
  // sub-instance share a memo entry.
  std::string canonical_key(const Instance& inst) {
    if (rank_scratch.size() <= inst.verts.back()) rank_scratch.resize(inst.verts.back() + 1);
    for (std::size_t i = 0; i < inst.verts.size(); ++i)
      rank_scratch[inst.verts[i]] = static_cast<std::uint16_t>(i);
    std::string key;
    key.reserve(inst.edges.size() * 7 + 2);
    auto push16 = [&key](std::uint16_t v) {
      key.push_back(static_cast<char>(v & 0xff));
      key.push_back(static_cast<char>(v >> 8));
    };
    push16(static_cast<std::uint16_t>(inst.verts.size()));
    for (const auto& e : inst.edges) {
      key.push_back(static_cast<char>(e.size));
      for (std::uint8_t i = 0; i < e.size; ++i) push16(rank_scratch[e.v[i]]);
    }
    return key;
  }

  // Greedy disjoint-edge matching: every matched edge forces at least one
  // exclusion, so alpha <= |verts| - matched.
  static std::size_t upper_bound(const Instance& inst) {
    std::vector<std::uint16_t> used;
    std::size_t matched = 0;
    for (const auto& e : inst.edges) {
      bool free = true;
      for (std::uint8_t i = 0; i < e.size; ++i)
        if (std::find(used.begin(), used.end(), e.v[i]) != used.end()) {
          free = false;
          break;
        }
      if (free) {
        ++matched;
        for (std::uint8_t i = 0; i < e.size; ++i) used.push_back(e.v[i]);
      }
    }
    return inst.verts.size() - matched;
  }

  std::size_t solve(Instance inst) {
    ++nodes;
    std::size_t base = 0;
    // Unit edges force exclusions.
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& e : inst.edges)
        if (e.size == 1) {
          inst = exclude_vertex(inst, e.v[0]);
          changed = true;
          break;
        }
    }
    // Vertices in no edge are free.
    {
      std::vector<bool> covered(inst.verts.empty() ? 0 : inst.verts.back() + 1, false);
      for (const auto& e : inst.edges)
        for (std::uint8_t i = 0; i < e.size; ++i) covered[e.v[i]] = true;
      std::vector<std::uint16_t> kept;
      kept.reserve(inst.verts.size());
      for (std::uint16_t v : inst.verts) {
        if (covered[v])
          kept.push_back(v);
        else
          ++base;
      }
      inst.verts = std::move(kept);
    }
    if (inst.verts.empty()) return base;

    // Split independent components.
    {
      const std::size_t m = inst.verts.size();
      std::vector<std::uint16_t> idx(inst.verts.back() + 1);
      for (std::size_t i = 0; i < m; ++i) idx[inst.verts[i]] = static_cast<std::uint16_t>(i);
      std::vector<std::uint16_t> parent(m);
      for (std::size_t i = 0; i < m; ++i) parent[i] = static_cast<std::uint16_t>(i);
      auto find = [&](std::uint16_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (const auto& e : inst.edges)
        for (std::uint8_t i = 1; i < e.size; ++i)
          parent[find(idx[e.v[i]])] = find(idx[e.v[0]]);
      std::size_t roots = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (find(static_cast<std::uint16_t>(i)) == i) ++roots;
      if (roots > 1) {
        std::map<std::uint16_t, Instance> comps;
        for (std::uint16_t v : inst.verts) comps[find(idx[v])].verts.push_back(v);
        for (const auto& e : inst.edges) comps[find(idx[e.v[0]])].edges.push_back(e);
        std::size_t total = base;
        for (auto& [root, comp] : comps) total += solve(std::move(comp));
        return total;
      }
    }

    std::string key = canonical_key(inst);
    if (auto it = memo.find(key); it != memo.end()) return base + it->second;

    // Branch on the lowest-labeled vertex, include first. Sweeping in
    // label order makes decided regions peel off as components whose
    // canonical forms recur, so the memo acts like a profile DP on
    // structured instances.
    std::uint16_t branch_v = inst.verts.front();
    std::size_t best = 0;
    if (auto inc = include_vertex(inst, branch_v)) best = 1 + solve(std::move(*inc));
    Instance exc = exclude_vertex(inst, branch_v);
    if (upper_bound(exc) > best) best = std::max(best, solve(std::move(exc)));
    memo[key] = best;
    return base + best;
  }
};

}  // namespace

bool subset_is_copy_free(const MixedHypergraph& h, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(h.n, false);
  for (std::size_t v : subset) in[v] = true;
  for (const auto& e : h.edges) {
    bool all = !e.empty();
    for (std::size_t v : e)
      if (!in[v]) {
        all = false;
        break;
      }
    if (all) return false;
  }
  return true;
}

SubsetSolve max_independent_subset(const MixedHypergraph& h) {
  if (h.n > 0xffff) throw Error(ErrorCode::Overflow, "independence solver caps at 65535 vertices");
  Instance root;
  root.verts.resize(h.n);
  for (std::size_t i = 0; i < h.n; ++i) root.verts[i] = static_cast<std::uint16_t>(i);
  for (const auto& e : h.edges) {
    if (e.empty() || e.size() > 3)
      throw Error(ErrorCode::Overflow, "edges must have one to three vertices");
    SmallEdge se;
    for (std::size_t v : e) se.v[se.size++] = static_cast<std::uint16_t>(v);
    root.edges.push_back(se);
  }
  normalize_edges(root);

  IndependenceSolver solver;
  SubsetSolve res;
  res.alpha = solver.solve(root);

  // Lexicographically smallest optimum: include each vertex in index
  // order exactly when doing so still reaches alpha.
  Instance work = root;
  std::size_t remaining = res.alpha;
  for (std::size_t v = 0; v < h.n && remaining > 0; ++v) {
    const std::uint16_t vv = static_cast<std::uint16_t>(v);
    if (!std::binary_search(work.verts.begin(), work.verts.end(), vv)) continue;
    auto inc = include_vertex(work, vv);
    if (inc && 1 + solver.solve(*inc) == remaining) {
      res.witness.push_back(v);
      work = std::move(*inc);
      --remaining;
    } else {
      work = exclude_vertex(work, vv);
    }
  }
  res.nodes = solver.nodes;
  return res;
}

SubsetSolve max_copy_free_subset(const CopyHypergraph& h) {
  MixedHypergraph m;
  m.n = h.vertex_count;
  for (const auto& e : h.edges) m.edges.push_back({e[0], e[1], e[2]});
  return max_independent_subset(m);
}

namespace {

PointSet grid_points_to_set(const std::vector<GridPoint>& pts, std::int64_t q) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts)
    out.push_back(Point{Rational(static_cast<long>(p.x), static_cast<long>(q)),
                        Rational(static_cast<long>(p.y), static_cast<long>(q))});
  return PointSet(std::move(out));
}

int chi_of_grid_points(const std::vector<GridPoint>& pts, std::int64_t q, const Triangle& t,
                       int k_cap) {
  PointSet s = grid_points_to_set(pts, q);
  CopyHypergraph h = build_copy_hypergraph(s, t);
  ChromaticSolve solve = hypergraph_chromatic(h, k_cap);
  return solve.exceeded ? k_cap + 1 : solve.chi;
}

}  // namespace

WitnessSearchResult witness_search(const Triangle& t, int k, std::int64_t q, std::int64_t span,
                                   std::uint64_t budget, std::uint64_t seed) {
  WitnessSearchResult res;
  if (k < 2) {
    res.found = true;
    res.best_chi = 1;
    res.note = "a single point needs one color";
    res.witness = PointSet({Point{0, 0}});
    return res;
  }
  // Scale to the integer grid [0, span*q]^2; sides must scale to integers
  // for any copy to exist on the grid.
  IntSides sides;
  {
    Rational qa = t.a() * static_cast<long>(q), qb = t.b() * static_cast<long>(q),
             qc = t.c() * static_cast<long>(q);
    if (!is_integral(qa) || !is_integral(qb) || !is_integral(qc)) {
      res.note = "no copy of the triangle is realizable on the search grid";
      return res;
    }
    sides = IntSides{to_int64(qa), to_int64(qb), to_int64(qc)};
  }
  const std::int64_t m = span * q;
  auto copies = grid_copies_window(m, m, sides);
  if (copies.empty()) {
    res.note = "search window contains no copy of the triangle";
    return res;
  }
  if (k == 2) {
    res.found = true;
    res.best_chi = 2;
    res.witness = grid_points_to_set({copies[0][0], copies[0][1], copies[0][2]}, q);
    res.sets_examined = 1;
    res.note = "any single copy forces two colors";
    return res;
  }

  std::mt19937_64 rng(seed);
  std::vector<GridPoint> all_points;
  for (std::int64_t x = 0; x <= m; ++x)
    for (std::int64_t y = 0; y <= m; ++y) all_points.push_back({x, y});

  int best_chi = 1;
  const std::size_t max_growth = 40;
  while (res.sets_examined < budget) {
    // Seed a restart from a random copy.
    const auto& start = copies[rng() % copies.size()];
    std::vector<GridPoint> current(start.begin(), start.end());
    std::sort(current.begin(), current.end());
    for (std::size_t step = 0; step < max_growth && res.sets_examined < budget; ++step) {
      ++res.sets_examined;
      int chi = chi_of_grid_points(current, q, t, k - 1);
      best_chi = std::max(best_chi, chi);
      if (chi >= k) {
        // Prune to an inclusion-minimal witness.
        for (std::size_t i = 0; i < current.size();) {
          std::vector<GridPoint> reduced = current;
          reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
          ++res.sets_examined;
          if (reduced.size() >= 3 && chi_of_grid_points(reduced, q, t, k - 1) >= k) {
            current = std::move(reduced);
          } else {
            ++i;
          }
        }
        res.found = true;
        res.best_chi = k;
        res.witness = grid_points_to_set(current, q);
        res.note = "size-minimal within budget, not globally minimal";
        return res;
      }
      // Grow: add the candidate point completing the most new copies with
      // the current set; ties to the lexicographically smallest point.
      GridPoint best_p{-1, -1};
      std::size_t best_score = 0;
      std::vector<bool> in_set(static_cast<std::size_t>((m + 1) * (m + 1)), false);
      for (const auto& p : current) in_set[static_cast<std::size_t>(p.x * (m + 1) + p.y)] = true;
      for (const auto& p : all_points) {
        if (in_set[static_cast<std::size_t>(p.x * (m + 1) + p.y)]) continue;
        std::size_t score = 0;
        for (std::size_t i = 0; i < current.size(); ++i)
          for (std::size_t j = i + 1; j < current.size(); ++j)
            if (is_grid_copy(p, current[i], current[j], sides)) ++score;
        if (score > best_score) {
          best_score = score;
          best_p = p;
        }
      }
      if (best_score == 0) {
        // No point extends the structure; add a random copy's fresh vertex.
        const auto& extra = copies[rng() % copies.size()];
        bool added = false;
        for (const auto& p : extra)
          if (!std::binary_search(current.begin(), current.end(), p)) {
            current.push_back(p);
            added = true;
            break;
          }
        if (!added) break;
      } else {
        current.push_back(best_p);
      }
      std::sort(current.begin(), current.end());
    }
  }
  res.best_chi = best_chi;
  res.note = "budget exhausted; largest chromatic number observed is " + std::to_string(best_chi);
  return res;
}

}  // namespace cheby
