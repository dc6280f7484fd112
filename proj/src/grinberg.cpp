#include "hamwalk/grinberg.hpp"

#include <algorithm>
#include <set>

#include "hamwalk/errors.hpp"

namespace hamwalk {

bool GrinbergSet::contains(long long f) const {
  return std::binary_search(values.begin(), values.end(), f);
}

GrinbergSet grinberg_set(const std::vector<int>& face_lengths) {
  const int N = static_cast<int>(face_lengths.size());
  if (N < 2) {
    fail("TooFewFaces", "need at least two faces, got " + std::to_string(N) +
                            " (double_all_edges turns a tree into a usable host)");
  }
  long long total = 0;
  bool has_zero = false;
  std::vector<long long> contrib;
  contrib.reserve(N);
  for (int len : face_lengths) {
    if (len < 2) fail("BadParams", "face length " + std::to_string(len) + " below 2");
    contrib.push_back(len - 2);
    total += len - 2;
    if (len == 2) has_zero = true;
  }
  if (total > 64'000'000) {
    fail("TooLarge", "face-length total " + std::to_string(total) + " exceeds the subset-sum budget");
  }

  std::vector<char> reachable(total + 1, 0);
  reachable[0] = 1;
  for (long long c : contrib) {
    for (long long s = total - c; s >= 0; --s) {
      if (reachable[s]) reachable[s + c] = 1;
    }
  }

  const bool drop_ends = !has_zero;  // 0 and T reachable only trivially then
  std::set<long long> vals;
  for (long long s = 0; s <= total; ++s) {
    if (!reachable[s]) continue;
    if (drop_ends && (s == 0 || s == total)) continue;
    vals.insert(std::abs(2 * s - total));
  }
  GrinbergSet out;
  out.values.assign(vals.begin(), vals.end());
  return out;
}

long long grinberg_number(const GrinbergSet& s) { return s.number(); }

long long repeat_lower_bound(long long grinberg_num) {
  if (grinberg_num < 0 || grinberg_num % 2 != 0) {
    fail("OddGrinbergNumber", "Grinberg number " + std::to_string(grinberg_num) +
                                  " is not a non-negative even integer");
  }
  return grinberg_num / 2;
}

GrinbergAnalysis analyze_embedding(const PlanarEmbedding& g) {
  GrinbergAnalysis a;
  a.lengths = face_lengths(trace_faces(g));
  a.bridge_edges = bridges(g);
  if (!a.bridge_edges.empty()) {
    std::string ids;
    for (size_t i = 0; i < a.bridge_edges.size(); ++i) {
      if (i) ids += ", ";
      ids += std::to_string(a.bridge_edges[i]);
    }
    a.warnings.push_back("graph has bridge edges " + ids +
                         "; face boundaries traverse them twice, and double_all_edges is the usual recourse");
  }
  a.set = grinberg_set(a.lengths);
  return a;
}

long long hamiltonian_lower_bound(const PlanarEmbedding& g) {
  GrinbergAnalysis a = analyze_embedding(g);
  return g.num_vertices() + repeat_lower_bound(a.set.number());
}

std::vector<long long> feasible_repeat_counts(const GrinbergSet& s, long long cap) {
  std::set<long long> counts;
  for (long long f : s.values) {
    long long base = repeat_lower_bound(f);
    for (long long r = base; r <= cap; r += 2) counts.insert(r);
  }
  return {counts.begin(), counts.end()};
}

bool hamiltonicity_necessary_condition(const PlanarEmbedding& g) {
  return analyze_embedding(g).set.number() == 0;
}

}  // namespace hamwalk
