#include "cheby/line_coloring.hpp"

#include <algorithm>
#include <numeric>

#include "cheby/errors.hpp"

namespace cheby {

LineColoring::LineColoring(Rational period, std::vector<Rational> breaks, std::vector<int> colors,
                           bool allow_adjacent_same)
    : period_(std::move(period)), breaks_(std::move(breaks)), colors_(std::move(colors)) {
  if (period_ <= 0) throw Error(ErrorCode::BadColoring, "period must be positive");
  if (breaks_.empty() || breaks_.front() != 0)
    throw Error(ErrorCode::BadColoring, "first breakpoint must be 0");
  if (breaks_.size() != colors_.size())
    throw Error(ErrorCode::BadColoring, "one color per interval required");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (breaks_[i] >= period_) throw Error(ErrorCode::BadColoring, "breakpoint beyond period");
    if (i > 0 && breaks_[i] <= breaks_[i - 1])
      throw Error(ErrorCode::BadColoring, "breakpoints must be strictly increasing");
  }
  int max_color = 0;
  std::vector<bool> used;
  for (int c : colors_) {
    if (c < 0) throw Error(ErrorCode::BadColoring, "negative color index");
    max_color = std::max(max_color, c);
  }
  used.assign(static_cast<std::size_t>(max_color) + 1, false);
  for (int c : colors_) used[static_cast<std::size_t>(c)] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(ErrorCode::BadColoring, "color indices must be contiguous from 0");
  color_count_ = max_color + 1;
  if (!allow_adjacent_same && colors_.size() > 1) {
    for (std::size_t i = 0; i < colors_.size(); ++i)
      if (colors_[i] == colors_[(i + 1) % colors_.size()])
        throw Error(ErrorCode::BadColoring,
                    "cyclically adjacent intervals share a color (pass the intentional flag)");
  }
}

int LineColoring::eval(const Rational& x) const {
  Rational r = mod_rational(x, period_);
  // Last breakpoint b with b <= r.
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), r);
  std::size_t idx = static_cast<std::size_t>(it - breaks_.begin()) - 1;
  return colors_[idx];
}

LineColoring LineColoring::normalized() const {
  std::vector<Rational> nb;
  std::vector<int> nc;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (!nc.empty() && nc.back() == colors_[i]) continue;
    nb.push_back(breaks_[i]);
    nc.push_back(colors_[i]);
  }
  bool wrap_same = nc.size() > 1 && nc.back() == nc.front();
  return LineColoring(period_, std::move(nb), std::move(nc), wrap_same);
}

LineColoring LineColoring::scaled(const Rational& lambda) const {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveScale, "scale must be positive");
  std::vector<Rational> nb;
  nb.reserve(breaks_.size());
  for (const auto& b : breaks_) nb.push_back(b * lambda);
  return LineColoring(period_ * lambda, std::move(nb), colors_, true);
}

DistanceSet::DistanceSet(std::vector<Rational> distances) : values_(std::move(distances)) {
  for (const auto& d : values_)
    if (d < 0) throw Error(ErrorCode::ZeroDistance, "negative distance " + to_string(d));
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

AvoidanceVerdict avoids_distances(const LineColoring& coloring, const DistanceSet& d) {
  if (d.contains_zero())
    throw Error(ErrorCode::ZeroDistanceWithNonemptyColoring,
                "distance 0 is violated by every point of a nonempty coloring");
  const auto& breaks = coloring.breaks();
  const auto& colors = coloring.colors();
  const Rational& p = coloring.period();
  const std::size_t n = breaks.size();
  auto interval_end = [&](std::size_t i) { return i + 1 < n ? breaks[i + 1] : p; };

  for (const auto& dist : d.values()) {
    Rational r = mod_rational(dist, p);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (colors[s] != colors[t]) continue;
        // x in I_s with (x + r) mod p in I_t  <=>  x in I_s intersect (I_t - r).
        Rational start = mod_rational(breaks[t] - r, p);
        Rational len = interval_end(t) - breaks[t];
        // Up to two arcs after wrapping.
        std::pair<Rational, Rational> arcs[2];
        int arc_count = 0;
        if (start + len <= p) {
          arcs[arc_count++] = {start, start + len};
        } else {
          arcs[arc_count++] = {start, p};
          arcs[arc_count++] = {Rational(0), start + len - p};
        }
        for (int a = 0; a < arc_count; ++a) {
          Rational lo = std::max(arcs[a].first, breaks[s]);
          Rational hi = std::min(arcs[a].second, interval_end(s));
          if (lo < hi) return {false, DistanceViolation{lo, dist}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

IntegerDistanceSet rational_distance_reduction(const DistanceSet& d) {
  for (const auto& v : d.values())
    if (v <= 0) throw Error(ErrorCode::ZeroDistance, "distances must be positive");
  Integer lambda = denominator_lcm(d.values());
  IntegerDistanceSet out;
  out.scale = Rational(lambda);
  Integer g = 0;
  for (const auto& v : d.values()) {
    Rational scaled = v * Rational(lambda);
    out.values.push_back(to_int64(scaled));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  std::sort(out.values.begin(), out.values.end());
  out.gcd = d.size() ? to_int64(g) : 1;
  return out;
}

namespace {

struct WindowGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> adj;
};

WindowGraph window_graph(const std::vector<std::int64_t>& d, std::size_t window) {
  WindowGraph g;
  g.n = window + 1;
  g.adj.assign(g.n, {});
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::int64_t dist : d) {
      std::size_t j = i + static_cast<std::size_t>(dist);
      if (dist > 0 && j < g.n) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
    }
  return g;
}

// Backtracking k-colorability with canonical color-first symmetry
// breaking. Returns the coloring if one exists; counts search nodes.
std::optional<std::vector<int>> color_graph(const WindowGraph& g, int k, std::uint64_t& nodes) {
  std::vector<int> color(g.n, -1);
  // Iterative DFS over vertices in index order.
  std::vector<int> next_try(g.n, 0);
  std::size_t v = 0;
  int max_used = -1;
  std::vector<int> max_used_at(g.n + 1, -1);
  max_used_at[0] = -1;
  while (true) {
    if (v == g.n) return color;
    bool advanced = false;
    int cap = std::min(k - 1, max_used_at[v] + 1);  // first use of a new color is canonical
    for (int c = next_try[v]; c <= cap; ++c) {
      ++nodes;
      bool ok = true;
      for (std::size_t u : g.adj[v])
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (ok) {
        color[v] = c;
        next_try[v] = c + 1;
        max_used_at[v + 1] = std::max(max_used_at[v], c);
        ++v;
        if (v < g.n) next_try[v] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (v == 0) return std::nullopt;
      color[v] = -1;
      next_try[v] = 0;
      --v;
      color[v] = -1;
    }
  }
}

}  // namespace

ChiLowerResult chi_line_lower(const std::vector<std::int64_t>& d, std::size_t window) {
  WindowGraph g = window_graph(d, window);
  ChiLowerResult res;
  res.window = window;
  for (int k = 1;; ++k) {
    std::uint64_t nodes = 0;
    if (auto coloring = color_graph(g, k, nodes)) {
      res.chi = k;
      res.witness = *coloring;
      return res;
    }
    res.refuted.emplace_back(k, nodes);
  }
}

namespace {

// DFS over period-p color words with k colors; returns the
// lexicographically smallest word avoiding all distances, if any.
std::optional<std::vector<int>> search_word(std::int64_t p, int k,
                                            const std::vector<std::int64_t>& d) {
  std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(p));
  for (std::int64_t dist : d) {
    std::int64_t r = dist % p;
    if (r == 0) return std::nullopt;  // a point conflicts with itself
    for (std::int64_t i = 0; i < p; ++i) {
      adj[static_cast<std::size_t>(i)].push_back((i + r) % p);
      adj[static_cast<std::size_t>(i)].push_back((i - r % p + p) % p);
    }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  std::vector<int> word(static_cast<std::size_t>(p), -1);
  std::vector<int> next_try(static_cast<std::size_t>(p), 0);
  std::int64_t v = 0;
  while (true) {
    if (v == p) return word;
    bool advanced = false;
    auto& w = word[static_cast<std::size_t>(v)];
    for (int c = next_try[static_cast<std::size_t>(v)]; c < k; ++c) {
      bool ok = true;
      for (std::int64_t u : adj[static_cast<std::size_t>(v)])
        if (word[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (ok) {
        w = c;
        next_try[static_cast<std::size_t>(v)] = c + 1;
        ++v;
        if (v < p) next_try[static_cast<std::size_t>(v)] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (v == 0) return std::nullopt;
      w = -1;
      next_try[static_cast<std::size_t>(v)] = 0;
      --v;
      word[static_cast<std::size_t>(v)] = -1;
    }
  }
}

LineColoring word_to_coloring(const std::vector<int>& word, std::int64_t p) {
  std::vector<Rational> breaks;
  std::vector<int> colors;
  for (std::int64_t i = 0; i < p; ++i) {
    int c = word[static_cast<std::size_t>(i)];
    if (!colors.empty() && colors.back() == c) continue;
    breaks.push_back(Rational(static_cast<long>(i)));
    colors.push_back(c);
  }
  bool wrap_same = colors.size() > 1 && colors.back() == colors.front();
  return LineColoring(Rational(static_cast<long>(p)), std::move(breaks), std::move(colors),
                      wrap_same);
}

}  // namespace

ChiUpperResult chi_line_upper(const std::vector<std::int64_t>& d, std::int64_t max_period,
                              int max_colors) {
  ChiUpperResult res;
  res.max_period = max_period;
  // k = |d| + 1 always admits a (possibly long-period) coloring; beyond
  // that the family search cannot do better.
  int cap = max_colors > 0 ? max_colors : static_cast<int>(d.size()) + 1;
  for (int k = 1; k <= cap; ++k) {
    res.colors = k;
    for (std::int64_t p = 1; p <= max_period; ++p) {
      if (auto word = search_word(p, k, d)) {
        res.found = true;
        res.witness = word_to_coloring(*word, p);
        return res;
      }
    }
  }
  res.found = false;
  return res;
}

ChromaticResult chi_line(const DistanceSet& d, std::size_t window, std::int64_t max_period) {
  IntegerDistanceSet reduced = rational_distance_reduction(d);
  ChromaticResult res;
  res.lower = chi_line_lower(reduced.values, window);
  res.upper = chi_line_upper(reduced.values, max_period);
  res.status = (res.upper.found && res.lower.chi == res.upper.colors) ? BoundStatus::Exact
                                                                      : BoundStatus::Bounds;
  if (res.upper.found && res.upper.witness && reduced.scale != 1) {
    // Map the witness back to the original (rational) distance scale.
    res.upper.witness = res.upper.witness->scaled(Rational(1) / reduced.scale);
  }
  return res;
}

}  // namespace cheby
