#include "hamwalk/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "hamwalk/errors.hpp"

namespace hamwalk {

namespace {

long long to_int(const std::string& tok, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail("SyntaxError", std::string("expected integer for ") + what + ", got '" + tok + "'");
  }
  return value;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

void PlanarEmbedding::finalize() {
  const int m = num_edges();
  if (n_ < 1) fail("SyntaxError", "vertex count must be at least 1");
  for (int id = 1; id <= m; ++id) {
    const EdgeRec& e = edges_[id - 1];
    if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) {
      fail("SyntaxError", "edge " + std::to_string(id) + " has endpoint outside 1.." + std::to_string(n_));
    }
    if (e.u == e.v) {
      fail("LoopEdge", "edge " + std::to_string(id) + " is a loop at vertex " + std::to_string(e.u));
    }
  }

  // Every dart must sit in the rotation of its own endpoint, exactly once.
  std::vector<int> seen(2 * m, 0);
  for (int v = 1; v <= n_; ++v) {
    for (int d : rotations_[v - 1]) {
      if (dart_vertex(d) != v) {
        fail("DanglingDart", "edge " + std::to_string(dart_edge(d)) + " listed at vertex " +
                                 std::to_string(v) + " which is not its endpoint");
      }
      if (++seen[d] > 1) {
        fail("DanglingDart", "edge " + std::to_string(dart_edge(d)) + " appears twice in the rotation at vertex " +
                                 std::to_string(v));
      }
    }
  }
  for (int d = 0; d < 2 * m; ++d) {
    if (!seen[d]) {
      fail("DanglingDart", "edge " + std::to_string(dart_edge(d)) + " missing from the rotation at vertex " +
                               std::to_string(dart_vertex(d)));
    }
  }

  succ_.assign(2 * m, 0);
  for (int v = 1; v <= n_; ++v) {
    const std::vector<int>& rot = rotations_[v - 1];
    const int k = static_cast<int>(rot.size());
    for (int i = 0; i < k; ++i) succ_[rot[i]] = rot[(i + 1) % k];
  }

  // Connectivity.
  std::vector<char> reached(n_ + 1, 0);
  std::queue<int> q;
  q.push(1);
  reached[1] = 1;
  int nreached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int d : rotations_[v - 1]) {
      int w = dart_head(d);
      if (!reached[w]) {
        reached[w] = 1;
        ++nreached;
        q.push(w);
      }
    }
  }
  if (nreached != n_) {
    fail("Disconnected", "only " + std::to_string(nreached) + " of " + std::to_string(n_) +
                             " vertices reachable from vertex 1");
  }

  // Euler check: orbit count of the face permutation.  An edge-free graph
  // (K1 only, given connectivity) has one face by convention.
  int nfaces = 0;
  if (m == 0) {
    nfaces = 1;
  } else {
    std::vector<char> visited(2 * m, 0);
    for (int d0 = 0; d0 < 2 * m; ++d0) {
      if (visited[d0]) continue;
      ++nfaces;
      int d = d0;
      do {
        visited[d] = 1;
        d = face_next(d);
      } while (d != d0);
    }
  }
  if (n_ - m + nfaces != 2) {
    fail("NonPlanarEmbedding", "rotation system yields " + std::to_string(nfaces) +
                                   " faces; a sphere embedding of a connected graph with n=" +
                                   std::to_string(n_) + ", m=" + std::to_string(m) + " needs " +
                                   std::to_string(2 - n_ + m));
  }
}

PlanarEmbedding PlanarEmbedding::build(int n, std::vector<EdgeRec> edges,
                                       const std::vector<std::vector<int>>& rotation_edge_ids) {
  PlanarEmbedding g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  const int m = g.num_edges();
  if (static_cast<int>(rotation_edge_ids.size()) != n) {
    fail("SyntaxError", "need one rotation list per vertex");
  }
  for (int id = 1; id <= m; ++id) {
    const EdgeRec& e = g.edges_[id - 1];
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      fail("SyntaxError", "edge " + std::to_string(id) + " endpoint out of range");
    }
  }
  g.rotations_.assign(n, {});
  for (int v = 1; v <= n; ++v) {
    for (int id : rotation_edge_ids[v - 1]) {
      if (id < 1 || id > m) {
        fail("SyntaxError", "rotation at vertex " + std::to_string(v) + " references unknown edge " +
                                std::to_string(id));
      }
      const EdgeRec& e = g.edges_[id - 1];
      int side;
      if (e.u == v) {
        side = 0;
      } else if (e.v == v) {
        side = 1;
      } else {
        fail("DanglingDart", "edge " + std::to_string(id) + " listed at vertex " + std::to_string(v) +
                                 " which is not its endpoint");
      }
      g.rotations_[v - 1].push_back(dart_of(id, side));
    }
  }
  g.finalize();
  return g;
}

PlanarEmbedding PlanarEmbedding::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<EdgeRec> edges;
  std::vector<char> edge_defined;
  std::vector<std::vector<int>> rot_ids;
  std::vector<char> rot_defined;

  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "p") {
      if (have_header) fail("SyntaxError", "duplicate header line");
      if (toks.size() != 4 || toks[1] != "planar") fail("SyntaxError", "header must read 'p planar <n> <m>'");
      n = static_cast<int>(to_int(toks[2], "vertex count"));
      m = static_cast<int>(to_int(toks[3], "edge count"));
      if (n < 1 || m < 0) fail("SyntaxError", "header counts out of range");
      edges.assign(m, EdgeRec{});
      edge_defined.assign(m, 0);
      rot_ids.assign(n, {});
      rot_defined.assign(n, 0);
      have_header = true;
    } else if (toks[0] == "e") {
      if (!have_header) fail("SyntaxError", "edge line before header");
      if (toks.size() != 4) fail("SyntaxError", "edge line must read 'e <id> <u> <v>'");
      int id = static_cast<int>(to_int(toks[1], "edge id"));
      if (id < 1 || id > m) fail("SyntaxError", "edge id " + std::to_string(id) + " outside 1.." + std::to_string(m));
      if (edge_defined[id - 1]) fail("SyntaxError", "edge " + std::to_string(id) + " defined twice");
      edge_defined[id - 1] = 1;
      edges[id - 1].u = static_cast<int>(to_int(toks[2], "edge endpoint"));
      edges[id - 1].v = static_cast<int>(to_int(toks[3], "edge endpoint"));
    } else if (toks[0] == "r") {
      if (!have_header) fail("SyntaxError", "rotation line before header");
      if (toks.size() < 3) fail("SyntaxError", "rotation line must read 'r <v> <k> <darts...>'");
      int v = static_cast<int>(to_int(toks[1], "vertex id"));
      if (v < 1 || v > n) fail("SyntaxError", "rotation for unknown vertex " + std::to_string(v));
      if (rot_defined[v - 1]) fail("SyntaxError", "vertex " + std::to_string(v) + " has two rotation lines");
      rot_defined[v - 1] = 1;
      int k = static_cast<int>(to_int(toks[2], "rotation length"));
      if (k != static_cast<int>(toks.size()) - 3) {
        fail("SyntaxError", "rotation at vertex " + std::to_string(v) + " announces " + std::to_string(k) +
                                " darts but lists " + std::to_string(toks.size() - 3));
      }
      for (int i = 0; i < k; ++i) {
        rot_ids[v - 1].push_back(static_cast<int>(to_int(toks[3 + i], "rotation entry")));
      }
    } else {
      fail("SyntaxError", "unknown line type '" + toks[0] + "'");
    }
  }

  if (!have_header) fail("SyntaxError", "missing 'p planar' header");
  for (int id = 1; id <= m; ++id) {
    if (!edge_defined[id - 1]) fail("SyntaxError", "edge " + std::to_string(id) + " never defined");
  }
  return build(n, std::move(edges), rot_ids);
}

std::string PlanarEmbedding::serialize() const {
  std::ostringstream out;
  out << "p planar " << n_ << ' ' << num_edges() << '\n';
  for (int id = 1; id <= num_edges(); ++id) {
    out << "e " << id << ' ' << edge_u(id) << ' ' << edge_v(id) << '\n';
  }
  for (int v = 1; v <= n_; ++v) {
    const std::vector<int>& rot = rotations_[v - 1];
    if (rot.empty()) continue;
    out << "r " << v << ' ' << rot.size();
    for (int d : rot) out << ' ' << dart_edge(d);
    out << '\n';
  }
  return out.str();
}

bool PlanarEmbedding::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (int id = 1; id <= num_edges(); ++id) {
    int a = std::min(edge_u(id), edge_v(id));
    int b = std::max(edge_u(id), edge_v(id));
    if (!seen.insert({a, b}).second) return false;
  }
  return true;
}

bool PlanarEmbedding::same_structure(const PlanarEmbedding& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return rotations_ == other.rotations_;
}

FaceSet trace_faces(const PlanarEmbedding& g) {
  FaceSet fs;
  const int nd = g.num_darts();
  fs.face_of_dart.assign(nd, 0);
  if (nd == 0) {
    fs.faces.push_back(Face{1, {}});
    return fs;
  }
  for (int d0 = 0; d0 < nd; ++d0) {
    if (fs.face_of_dart[d0]) continue;
    Face f;
    f.id = static_cast<int>(fs.faces.size()) + 1;
    int d = d0;
    do {
      fs.face_of_dart[d] = f.id;
      f.darts.push_back(d);
      d = g.face_next(d);
    } while (d != d0);
    fs.faces.push_back(std::move(f));
  }
  return fs;
}

std::vector<int> face_lengths(const FaceSet& fs) {
  std::vector<int> lens;
  lens.reserve(fs.faces.size());
  for (const Face& f : fs.faces) lens.push_back(f.length());
  return lens;
}

std::vector<int> face_vertex_cycle(const PlanarEmbedding& g, const Face& f) {
  std::vector<int> cycle;
  cycle.reserve(f.darts.size());
  for (int d : f.darts) cycle.push_back(g.dart_vertex(d));
  return cycle;
}

std::vector<std::vector<int>> neighbor_lists(const PlanarEmbedding& g) {
  std::vector<std::set<int>> adj(g.num_vertices() + 1);
  for (int id = 1; id <= g.num_edges(); ++id) {
    adj[g.edge_u(id)].insert(g.edge_v(id));
    adj[g.edge_v(id)].insert(g.edge_u(id));
  }
  std::vector<std::vector<int>> out(g.num_vertices() + 1);
  for (int v = 1; v <= g.num_vertices(); ++v) out[v].assign(adj[v].begin(), adj[v].end());
  return out;
}

DistanceMatrix shortest_path_matrix(const PlanarEmbedding& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj = neighbor_lists(g);
  DistanceMatrix dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::queue<int> q;
    q.push(s + 1);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (dist[s][w - 1] < 0) {
          dist[s][w - 1] = dist[s][v - 1] + 1;
          q.push(w);
        }
      }
    }
  }
  return dist;
}

int diameter(const PlanarEmbedding& g) {
  DistanceMatrix d = shortest_path_matrix(g);
  int best = 0;
  for (const auto& row : d)
    for (int x : row) best = std::max(best, x);
  return best;
}

namespace {

// Minimal BFS max-flow on a small residual network.
struct FlowNet {
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> arcs;
  explicit FlowNet(int nodes) : arcs(nodes) {}
  void add(int a, int b, int cap) {
    arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size())});
    arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
  }
  int max_flow(int s, int t) {
    int flow = 0;
    for (;;) {
      std::vector<int> prev_node(arcs.size(), -1), prev_arc(arcs.size(), -1);
      std::queue<int> q;
      q.push(s);
      prev_node[s] = s;
      while (!q.empty() && prev_node[t] < 0) {
        int v = q.front();
        q.pop();
        for (size_t i = 0; i < arcs[v].size(); ++i) {
          const Arc& a = arcs[v][i];
          if (a.cap > 0 && prev_node[a.to] < 0) {
            prev_node[a.to] = v;
            prev_arc[a.to] = static_cast<int>(i);
            q.push(a.to);
          }
        }
      }
      if (prev_node[t] < 0) return flow;
      int push = std::numeric_limits<int>::max();
      for (int v = t; v != s; v = prev_node[v]) push = std::min(push, arcs[prev_node[v]][prev_arc[v]].cap);
      for (int v = t; v != s; v = prev_node[v]) {
        Arc& a = arcs[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        arcs[a.to][a.rev].cap += push;
      }
      flow += push;
    }
  }
};

}  // namespace

int vertex_connectivity(const PlanarEmbedding& g) {
  const int n = g.num_vertices();
  if (n == 1) return 0;
  std::vector<std::vector<int>> adj = neighbor_lists(g);
  std::vector<std::vector<char>> adjacent(n + 1, std::vector<char>(n + 1, 0));
  for (int v = 1; v <= n; ++v)
    for (int w : adj[v]) adjacent[v][w] = 1;

  // A minimum cut separates some non-adjacent pair; complete graphs have none.
  const int big = n + 1;
  int best = n - 1;
  bool found_pair = false;
  for (int s = 1; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      if (adjacent[s][t]) continue;
      found_pair = true;
      // Split every vertex x into in=2x, out=2x+1 with unit capacity.
      FlowNet net(2 * (n + 1));
      for (int x = 1; x <= n; ++x) net.add(2 * x, 2 * x + 1, x == s || x == t ? big : 1);
      for (int id = 1; id <= g.num_edges(); ++id) {
        int a = g.edge_u(id), b = g.edge_v(id);
        net.add(2 * a + 1, 2 * b, big);
        net.add(2 * b + 1, 2 * a, big);
      }
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t));
    }
  }
  return found_pair ? best : n - 1;
}

PlanarEmbedding double_all_edges(const PlanarEmbedding& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<EdgeRec> edges;
  edges.reserve(2 * m);
  for (int id = 1; id <= m; ++id) edges.push_back({g.edge_u(id), g.edge_v(id)});
  for (int id = 1; id <= m; ++id) edges.push_back({g.edge_u(id), g.edge_v(id)});

  // The copy runs as a parallel track beside the original: entering the
  // rotation right after it at u and right before it at v keeps both sides
  // consistent with a planar drawing, and the strip between them becomes a
  // 2-gon face.
  std::vector<std::vector<int>> rot(n);
  for (int v = 1; v <= n; ++v) {
    for (int d : g.rotation(v)) {
      int e = g.dart_edge(d);
      if ((d & 1) == 0) {
        rot[v - 1].push_back(e);
        rot[v - 1].push_back(m + e);
      } else {
        rot[v - 1].push_back(m + e);
        rot[v - 1].push_back(e);
      }
    }
  }
  return PlanarEmbedding::build(n, std::move(edges), rot);
}

std::vector<int> bridges(const PlanarEmbedding& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n + 1, -1), low(n + 1, 0);
  std::vector<int> out;
  int timer = 0;

  struct Frame {
    int v;
    int entry_edge;  // edge id used to reach v, 0 at the root
    size_t idx = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({1, 0});
  disc[1] = low[1] = timer++;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const std::vector<int>& rot = g.rotation(fr.v);
    if (fr.idx < rot.size()) {
      int d = rot[fr.idx++];
      int e = g.dart_edge(d);
      int w = g.dart_head(d);
      if (e == fr.entry_edge) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, e});
      } else {
        low[fr.v] = std::min(low[fr.v], disc[w]);
      }
    } else {
      int v = fr.v, e = fr.entry_edge;
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) out.push_back(e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hamwalk
