#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheby/geometry.hpp"

namespace cheby {

// 3-uniform hypergraph of forbidden monochromatic triples over a finite
// point set. Edges are strictly increasing index triples in
// lexicographic order; each is a genuine copy by construction.
struct CopyHypergraph {
  std::size_t vertex_count = 0;
  std::vector<IndexTriple> edges;
  PointSet points;    // provenance
  Triangle triangle;  // provenance

  CopyHypergraph() : triangle(Triangle::from_sides(1, 1, 1)) {}
};

CopyHypergraph build_copy_hypergraph(const PointSet& s, const Triangle& t);

struct ChromaticSolve {
  bool exceeded = false;  // chromatic number > k_max
  int chi = 0;            // valid when !exceeded
  std::vector<int> coloring;
  // Exhausted-search node counts for each refuted k.
  std::vector<std::pair<int, std::uint64_t>> refuted;
  std::uint64_t nodes = 0;  // nodes of the successful search
  bool deterministic = true;
};

// Smallest k <= k_max with a coloring having no monochromatic edge, by
// exact backtracking: vertices in descending edge-degree order, first
// color canonical, and two-same-colors-force-the-third propagation.
ChromaticSolve hypergraph_chromatic(const CopyHypergraph& h, int k_max);

struct SubsetSolve {
  std::size_t alpha = 0;
  std::vector<std::size_t> witness;  // lexicographically smallest optimum
  std::uint64_t nodes = 0;
  bool deterministic = true;
};

// Maximum subset containing no complete edge, by branch and bound with a
// disjoint-edge matching bound.
SubsetSolve max_copy_free_subset(const CopyHypergraph& h);

// Internal form shared with the density module: edges of size 1 to 3
// (congruent vertices can collapse a torus edge).
struct MixedHypergraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> edges;
};

SubsetSolve max_independent_subset(const MixedHypergraph& h);

// True iff the subset contains no complete edge.
bool subset_is_copy_free(const MixedHypergraph& h, const std::vector<std::size_t>& subset);

struct WitnessSearchResult {
  bool found = false;
  PointSet witness;  // chromatic number >= k when found
  int best_chi = 1;  // chromatic number of the returned/best set seen
  std::uint64_t sets_examined = 0;
  std::string note;

  WitnessSearchResult() = default;
};

// Greedy growth with seeded restarts over ((1/q)Z)^2 within [0, span]^2
// for a point set whose copy hypergraph needs at least k colors. Found
// witnesses are pruned to inclusion-minimal size; no global minimality is
// claimed. Deterministic for a fixed seed.
WitnessSearchResult witness_search(const Triangle& t, int k, std::int64_t q, std::int64_t span,
                                   std::uint64_t budget, std::uint64_t seed);

}  // namespace cheby
