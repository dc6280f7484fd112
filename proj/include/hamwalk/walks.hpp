#pragma once

#include <string>
#include <vector>

#include "hamwalk/embedding.hpp"

namespace hamwalk {

// A closed walk is a cyclic vertex sequence v_1 ... v_L; its L steps are the
// consecutive pairs plus the wrap-around (v_L, v_1).  L equals the number of
// edge traversals.
struct ClosedWalk {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

// Walk file format: a single line 'w <L> <v_1> ... <v_L>', '#' comments.
ClosedWalk parse_walk(const std::string& text);
std::string serialize_walk(const ClosedWalk& w);

struct WalkStats {
  int length = 0;
  std::vector<int> multiplicities;  // index v-1 holds visits(v) - 1
  long long repeats = 0;            // rho = sum of multiplicities
  bool spanning = false;
  std::vector<int> missing;
};

// Pure counting over the sequence: multiplicities, repeats, spanning flag.
// Checks vertex ids against 1..n but not adjacency.
WalkStats walk_stats(const ClosedWalk& w, int n);

// walk_stats plus the adjacency check on every step, including the closure.
WalkStats validate_walk(const PlanarEmbedding& g, const ClosedWalk& w);

// Rejects stats whose walk skipped vertices (contexts that need a spanning
// walk call this after validate_walk).
void require_spanning(const WalkStats& stats);

struct CyclicOrdering {
  std::vector<int> vertices;  // starts at vertex 1
  long long cost = 0;         // sum of consecutive shortest-path distances
};

struct SolveResult {
  long long h = 0;
  CyclicOrdering ordering;
  ClosedWalk walk;
  std::vector<std::string> warnings;
};

// Exact Hamiltonian number by dynamic programming over vertex subsets on the
// BFS metric closure: h is the cheapest cyclic ordering, and expanding each
// leg along shortest paths yields a closed spanning walk of that length.
// Ties break toward the lexicographically smallest ordering rooted at vertex
// 1, and path expansion steps to the lowest-numbered vertex that stays on a
// shortest path.  Graphs beyond the limit are refused.
SolveResult hamiltonian_number_exact(const PlanarEmbedding& g, int limit = 20);

// All distinct cyclic-ordering costs, ascending, by full enumeration with
// rotation and reflection quotiented out.
std::vector<long long> hamiltonian_spectrum(const PlanarEmbedding& g, int limit = 9);

// Depth-first tour of the lowest-neighbor-first spanning tree: every tree
// edge is walked down and back up, giving a closed spanning walk of length
// 2(n-1).
ClosedWalk spanning_tree_walk(const PlanarEmbedding& g);

}  // namespace hamwalk
