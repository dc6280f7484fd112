#pragma once

#include <string>
#include <vector>

#include "hamwalk/embedding.hpp"

namespace hamwalk {

// The Grinberg set of a face-length vector (l_1, ..., l_N) collects the
// values |sum_i eps_i * (l_i - 2)| over all non-constant sign vectors
// eps in {-1,+1}^N.  Its minimum is the Grinberg number g.  For a vector
// derived from an embedding every member is even, and any closed spanning
// walk of the graph must repeat vertices at least g/2 times.
struct GrinbergSet {
  std::vector<long long> values;  // ascending, distinct, non-empty
  long long number() const { return values.front(); }
  bool contains(long long f) const;
};

// Computed by subset-sum reachability over the contributions c_i = l_i - 2:
// a sign vector with plus-set S gives |2*sum(S) - T| where T = sum(c_i), and
// S ranges over proper non-empty subsets.  When every c_i is positive the
// sums 0 and T are reachable only by the empty and full subsets and are
// excluded; once some c_i = 0 every reachable sum survives.
GrinbergSet grinberg_set(const std::vector<int>& face_lengths);

long long grinberg_number(const GrinbergSet& s);

// g/2; a Grinberg number of odd parity signals broken input (face-length
// vectors of embeddings always have an even total).
long long repeat_lower_bound(long long grinberg_num);

struct GrinbergAnalysis {
  std::vector<int> lengths;  // in face id order
  GrinbergSet set;
  std::vector<int> bridge_edges;
  std::vector<std::string> warnings;
};

// Grinberg data straight from an embedding's traced faces.  Bridges make the
// face count collapse (a tree has a single face), so their presence draws a
// warning naming the edges; double_all_edges is the standard recourse.
GrinbergAnalysis analyze_embedding(const PlanarEmbedding& g);

// n + g/2, the walk-length floor implied by the repeat bound.
long long hamiltonian_lower_bound(const PlanarEmbedding& g);

// All repeat counts f/2 + 2k reachable from some member f, capped inclusive.
std::vector<long long> feasible_repeat_counts(const GrinbergSet& s, long long cap);

// Hamiltonian graphs need 0 in the set, i.e. g = 0.
bool hamiltonicity_necessary_condition(const PlanarEmbedding& g);

}  // namespace hamwalk
