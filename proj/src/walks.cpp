#include "hamwalk/walks.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

#include "hamwalk/errors.hpp"

namespace hamwalk {

namespace {

constexpr int kSolverHardCap = 23;  // subset table memory wall
constexpr uint16_t kInf16 = 0xFFFF;

long long to_int(const std::string& tok, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail("SyntaxError", std::string("expected integer for ") + what + ", got '" + tok + "'");
  }
  return value;
}

}  // namespace

ClosedWalk parse_walk(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ClosedWalk walk;
  bool have_walk = false;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] != "w") fail("SyntaxError", "unknown line type '" + toks[0] + "' in walk file");
    if (have_walk) fail("SyntaxError", "walk file holds more than one walk");
    have_walk = true;
    if (toks.size() < 2) fail("SyntaxError", "walk line must read 'w <L> <vertices...>'");
    long long L = to_int(toks[1], "walk length");
    if (L < 1) fail("SyntaxError", "walk length must be at least 1");
    if (L != static_cast<long long>(toks.size()) - 2) {
      fail("SyntaxError", "walk announces " + std::to_string(L) + " vertices but lists " +
                              std::to_string(toks.size() - 2));
    }
    for (size_t i = 2; i < toks.size(); ++i) {
      walk.vertices.push_back(static_cast<int>(to_int(toks[i], "walk vertex")));
    }
  }
  if (!have_walk) fail("SyntaxError", "walk file holds no 'w' line");
  return walk;
}

std::string serialize_walk(const ClosedWalk& w) {
  std::ostringstream out;
  out << "w " << w.vertices.size();
  for (int v : w.vertices) out << ' ' << v;
  out << '\n';
  return out.str();
}

WalkStats walk_stats(const ClosedWalk& w, int n) {
  WalkStats st;
  st.length = w.length();
  if (st.length < 1) fail("SyntaxError", "closed walk needs at least one vertex");
  std::vector<int> visits(n, 0);
  for (int v : w.vertices) {
    if (v < 1 || v > n) {
      fail("UnknownVertex", "walk visits vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    ++visits[v - 1];
  }
  st.multiplicities.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (visits[i] == 0) {
      st.missing.push_back(i + 1);
    } else {
      st.multiplicities[i] = visits[i] - 1;
      st.repeats += visits[i] - 1;
    }
  }
  st.spanning = st.missing.empty();
  return st;
}

WalkStats validate_walk(const PlanarEmbedding& g, const ClosedWalk& w) {
  WalkStats st = walk_stats(w, g.num_vertices());
  std::vector<std::vector<int>> adj = neighbor_lists(g);
  const int L = st.length;
  for (int i = 0; i < L; ++i) {
    int a = w.vertices[i];
    int b = w.vertices[(i + 1) % L];
    if (!std::binary_search(adj[a].begin(), adj[a].end(), b)) {
      fail("NonAdjacentStep", "step " + std::to_string(i + 1) + ": vertices " + std::to_string(a) +
                                  " and " + std::to_string(b) + " share no edge");
    }
  }
  return st;
}

void require_spanning(const WalkStats& stats) {
  if (stats.spanning) return;
  std::string ids;
  for (size_t i = 0; i < stats.missing.size(); ++i) {
    if (i) ids += ", ";
    ids += std::to_string(stats.missing[i]);
  }
  fail("NotSpanning", "walk never visits " + ids);
}

SolveResult hamiltonian_number_exact(const PlanarEmbedding& g, int limit) {
  const int n = g.num_vertices();
  if (n > limit || n > kSolverHardCap) {
    fail("TooLarge", "n=" + std::to_string(n) + " exceeds the solver limit " +
                         std::to_string(std::min(limit, kSolverHardCap)));
  }
  SolveResult res;
  if (n == 1) {
    res.h = 0;
    res.ordering.vertices = {1};
    res.warnings.push_back("cyclic orderings are undefined on a single vertex; reporting 0 by convention");
    return res;
  }

  DistanceMatrix D = shortest_path_matrix(g);

  // C[S][j]: cheapest path from j through every vertex of S, ending at
  // vertex 0.  S ranges over subsets of {1..n-1} (bit v-1 for vertex index
  // v); j never lies in S.  h = C[full][0].
  const int nb = n - 1;
  const uint32_t full = (1u << nb) - 1;
  std::vector<uint16_t> C((static_cast<size_t>(full) + 1) * n, kInf16);
  for (int j = 0; j < n; ++j) C[static_cast<size_t>(0) * n + j] = static_cast<uint16_t>(D[j][0]);
  for (uint32_t S = 1; S <= full; ++S) {
    const size_t base = static_cast<size_t>(S) * n;
    for (int j = 0; j < n; ++j) {
      if (j > 0 && (S >> (j - 1) & 1u)) continue;
      uint32_t best = kInf16;
      for (uint32_t rest = S; rest;) {
        const int kb = std::countr_zero(rest);
        rest &= rest - 1;
        const int k = kb + 1;
        const uint32_t cand = D[j][k] + C[static_cast<size_t>(S ^ (1u << kb)) * n + k];
        best = std::min(best, cand);
      }
      C[base + j] = static_cast<uint16_t>(best);
    }
  }
  res.h = C[static_cast<size_t>(full) * n + 0];

  // Forward reconstruction with the exact completion costs picks the
  // lexicographically smallest optimal ordering.
  res.ordering.vertices = {1};
  res.ordering.cost = res.h;
  uint32_t R = full;
  int prev = 0;
  while (R) {
    const uint32_t target = C[static_cast<size_t>(R) * n + prev];
    for (uint32_t rest = R; rest;) {
      const int kb = std::countr_zero(rest);
      rest &= rest - 1;
      const int k = kb + 1;
      if (static_cast<uint32_t>(D[prev][k]) + C[static_cast<size_t>(R ^ (1u << kb)) * n + k] ==
          target) {
        res.ordering.vertices.push_back(k + 1);
        R ^= 1u << kb;
        prev = k;
        break;
      }
    }
  }

  // Expand each leg along a shortest path, stepping to the lowest-numbered
  // vertex that keeps the remaining distance shrinking.
  std::vector<std::vector<int>> adj = neighbor_lists(g);
  const int cnt = static_cast<int>(res.ordering.vertices.size());
  for (int i = 0; i < cnt; ++i) {
    int a = res.ordering.vertices[i];
    int b = res.ordering.vertices[(i + 1) % cnt];
    int cur = a;
    while (cur != b) {
      res.walk.vertices.push_back(cur);
      for (int w : adj[cur]) {
        if (D[w - 1][b - 1] == D[cur - 1][b - 1] - 1) {
          cur = w;
          break;
        }
      }
    }
  }
  return res;
}

std::vector<long long> hamiltonian_spectrum(const PlanarEmbedding& g, int limit) {
  const int n = g.num_vertices();
  if (n > limit) {
    fail("TooLarge", "n=" + std::to_string(n) + " exceeds the spectrum limit " + std::to_string(limit));
  }
  if (n == 1) return {0};
  DistanceMatrix D = shortest_path_matrix(g);
  if (n == 2) return {static_cast<long long>(D[0][1]) * 2};

  std::vector<int> perm(n - 1);
  for (int i = 0; i < n - 1; ++i) perm[i] = i + 1;
  std::set<long long> costs;
  do {
    if (perm.front() > perm.back()) continue;  // reflection twin
    long long c = D[0][perm.front()] + D[perm.back()][0];
    for (int i = 0; i + 1 < n - 1; ++i) c += D[perm[i]][perm[i + 1]];
    costs.insert(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {costs.begin(), costs.end()};
}

ClosedWalk spanning_tree_walk(const PlanarEmbedding& g) {
  const int n = g.num_vertices();
  if (n < 2) fail("BadParams", "spanning-tree walk needs at least two vertices");
  std::vector<std::vector<int>> adj = neighbor_lists(g);
  std::vector<char> visited(n + 1, 0);
  struct Frame {
    int v;
    size_t idx = 0;
  };
  std::vector<Frame> stack;
  ClosedWalk walk;
  visited[1] = 1;
  walk.vertices.push_back(1);
  stack.push_back({1});
  while (!stack.empty()) {
    Frame& fr = stack.back();
    if (fr.idx < adj[fr.v].size()) {
      int w = adj[fr.v][fr.idx++];
      if (!visited[w]) {
        visited[w] = 1;
        walk.vertices.push_back(w);
        stack.push_back({w});
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) walk.vertices.push_back(stack.back().v);
    }
  }
  walk.vertices.pop_back();  // drop the duplicated root; the wrap-around closes it
  return walk;
}

}  // namespace hamwalk
