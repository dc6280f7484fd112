#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamwalk/embedding.hpp"
#include "hamwalk/grinberg.hpp"
#include "hamwalk/walks.hpp"

namespace hamwalk {

// h(G) depends only on the underlying simple graph, so all bounds here are
// evaluated on it (multigraph inputs contribute their support).

struct GoodmanHedetniemiBound {
  long long value = 0;  // 2(n-1) - floor(k/2) * (2d-2)
  int connectivity = 0;
  int diam = 0;
};

struct BermondBound {
  long long value = 0;  // 2n - c
  int c = 0;            // min degree sum over non-adjacent pairs, clamped to n
};

GoodmanHedetniemiBound goodman_hedetniemi_bound(const PlanarEmbedding& g);
BermondBound bermond_bound(const PlanarEmbedding& g);

struct BoundsReport {
  int n = 0;
  long long lower_trivial = 0;    // n
  long long lower_grinberg = 0;   // n + g/2
  bool grinberg_on_doubled = false;
  long long upper_elementary = 0;  // 2(n-1)
  std::optional<long long> upper_gh;       // absent below n = 3
  std::optional<long long> upper_bermond;  // absent below n = 3
  int gh_connectivity = 0, gh_diameter = 0, bermond_c = 0;
  std::optional<long long> exact;
  bool certified = false;
  std::optional<long long> witness_length;
  std::vector<std::string> warnings;

  long long min_upper() const;
};

// Assembles every bound.  Bridged graphs get their Grinberg lower bound from
// the doubled graph (walk lengths are unaffected, and a tree on its own has
// a single face).  exact is filled by the solver when solve is set, else by
// a lower bound meeting the best upper bound, else by a witness walk whose
// length meets the lower bound.
BoundsReport bounds_report(const PlanarEmbedding& g, bool solve = false, int solve_limit = 20,
                           const ClosedWalk* witness = nullptr);

}  // namespace hamwalk
