#include "hamwalk/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamwalk/errors.hpp"

namespace hamwalk {

GoodmanHedetniemiBound goodman_hedetniemi_bound(const PlanarEmbedding& g) {
  const int n = g.num_vertices();
  if (n < 2) fail("BadParams", "bound needs at least two vertices");
  GoodmanHedetniemiBound b;
  b.connectivity = vertex_connectivity(g);
  b.diam = diameter(g);
  b.value = 2LL * (n - 1) - static_cast<long long>(b.connectivity / 2) * (2 * b.diam - 2);
  return b;
}

BermondBound bermond_bound(const PlanarEmbedding& g) {
  const int n = g.num_vertices();
  if (n < 2) fail("BadParams", "bound needs at least two vertices");
  std::vector<std::vector<int>> adj = neighbor_lists(g);
  BermondBound b;
  int c = n;  // complete graphs take c = n
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (std::binary_search(adj[u].begin(), adj[u].end(), v)) continue;
      c = std::min(c, static_cast<int>(adj[u].size() + adj[v].size()));
    }
  }
  b.c = std::min(c, n);
  b.value = 2LL * n - b.c;
  return b;
}

long long BoundsReport::min_upper() const {
  long long best = upper_elementary;
  if (upper_gh) best = std::min(best, *upper_gh);
  if (upper_bermond) best = std::min(best, *upper_bermond);
  return best;
}

BoundsReport bounds_report(const PlanarEmbedding& g, bool solve, int solve_limit,
                           const ClosedWalk* witness) {
  const int n = g.num_vertices();
  if (n < 2) fail("BadParams", "bounds need at least two vertices");

  BoundsReport r;
  r.n = n;
  r.lower_trivial = n;
  r.upper_elementary = 2LL * (n - 1);

  std::vector<int> cut_edges = bridges(g);
  GrinbergAnalysis ga;
  if (cut_edges.empty()) {
    ga = analyze_embedding(g);
  } else {
    ga = analyze_embedding(double_all_edges(g));
    r.grinberg_on_doubled = true;
    std::string ids;
    for (size_t i = 0; i < cut_edges.size(); ++i) {
      if (i) ids += ", ";
      ids += std::to_string(cut_edges[i]);
    }
    r.warnings.push_back("bridges (edges " + ids + ") collapse the face structure; Grinberg lower bound taken from the doubled graph");
  }
  for (const std::string& w : ga.warnings) r.warnings.push_back(w);
  r.lower_grinberg = n + repeat_lower_bound(ga.set.number());

  if (n >= 3) {
    GoodmanHedetniemiBound gh = goodman_hedetniemi_bound(g);
    r.upper_gh = gh.value;
    r.gh_connectivity = gh.connectivity;
    r.gh_diameter = gh.diam;
    BermondBound bb = bermond_bound(g);
    r.upper_bermond = bb.value;
    r.bermond_c = bb.c;
  }

  if (solve) {
    SolveResult sr = hamiltonian_number_exact(g, solve_limit);
    for (const std::string& w : sr.warnings) r.warnings.push_back(w);
    r.exact = sr.h;
  }
  if (witness) {
    WalkStats st = validate_walk(g, *witness);
    require_spanning(st);
    r.witness_length = st.length;
  }
  if (!r.exact) {
    if (r.lower_grinberg == r.min_upper()) {
      r.exact = r.lower_grinberg;
    } else if (r.witness_length && *r.witness_length == r.lower_grinberg) {
      r.exact = r.lower_grinberg;
    }
  }
  r.certified = r.exact.has_value();

  // These orderings are theorems; a violation means a computation bug.
  if (r.lower_grinberg < r.lower_trivial || r.lower_grinberg > r.min_upper()) {
    throw std::logic_error("bound ordering violated");
  }
  if (r.exact && (*r.exact < r.lower_grinberg || *r.exact > r.min_upper())) {
    throw std::logic_error("exact value escapes its bounds");
  }
  return r;
}

}  // namespace hamwalk
