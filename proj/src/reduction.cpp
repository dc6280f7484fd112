#include "hamwalk/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>

#include "hamwalk/errors.hpp"
#include "hamwalk/grinberg.hpp"

namespace hamwalk {

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ReducedGraph reduce_walk(const PlanarEmbedding& host, const ClosedWalk& walk) {
  if (!host.is_simple()) {
    fail("NotSimpleHost", "reduction is defined over simple hosts; merge parallel edges first");
  }
  ReducedGraph r;
  r.host = host;
  r.walk = walk;
  try {
    r.stats = validate_walk(host, walk);
    require_spanning(r.stats);
  } catch (const Error& e) {
    fail("InvalidWalk", std::string(e.name()) + ": " + e.what());
  }

  const int n = host.num_vertices();
  const int m = host.num_edges();
  std::map<std::pair<int, int>, int> edge_id;
  for (int id = 1; id <= m; ++id) {
    int a = std::min(host.edge_u(id), host.edge_v(id));
    int b = std::max(host.edge_u(id), host.edge_v(id));
    edge_id[{a, b}] = id;
  }
  r.traversals.assign(m, 0);
  const int L = walk.length();
  for (int i = 0; i < L; ++i) {
    int a = walk.vertices[i], b = walk.vertices[(i + 1) % L];
    ++r.traversals[edge_id.at({std::min(a, b), std::max(a, b)}) - 1];
  }
  for (int id = 1; id <= m; ++id) {
    if (r.traversals[id - 1] == 0) r.untraversed.push_back(id);
  }

  // Every visit enters and leaves, so in G' the degree of v is 2 m_v + 2.
  for (int v = 1; v <= n; ++v) {
    long long deg = 0;
    for (int id = 1; id <= m; ++id) {
      if (host.edge_u(id) == v || host.edge_v(id) == v) deg += r.traversals[id - 1];
    }
    if (deg != 2LL * (r.stats.multiplicities[v - 1] + 1)) {
      throw std::logic_error("walk graph degree bookkeeping failed");
    }
  }

  // Parallel tracks: copies of edge e stack outward from the original, each
  // new track entering the rotation after its predecessor at u and before it
  // at v, cutting one fresh 2-gon per copy.
  std::vector<EdgeRec> edges;
  for (int id = 1; id <= m; ++id) edges.push_back({host.edge_u(id), host.edge_v(id)});
  std::vector<std::vector<int>> copies(m);
  int next_id = m;
  for (int id = 1; id <= m; ++id) {
    for (int c = 1; c < std::max(1, r.traversals[id - 1]); ++c) {
      copies[id - 1].push_back(++next_id);
      edges.push_back({host.edge_u(id), host.edge_v(id)});
    }
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 1; v <= n; ++v) {
    for (int d : host.rotation(v)) {
      int e = host.dart_edge(d);
      const std::vector<int>& cp = copies[e - 1];
      if ((d & 1) == 0) {
        rot[v - 1].push_back(e);
        rot[v - 1].insert(rot[v - 1].end(), cp.begin(), cp.end());
      } else {
        rot[v - 1].insert(rot[v - 1].end(), cp.rbegin(), cp.rend());
        rot[v - 1].push_back(e);
      }
    }
  }
  r.derived = PlanarEmbedding::build(n, std::move(edges), rot);
  r.derived_faces = trace_faces(r.derived);
  r.host_faces = trace_faces(host);

  // Host faces persist in the derived embedding: the side of an edge whose
  // rotation kept the original stays on it, the other side slides to the
  // outermost track.  Original edge ids and therefore dart ids carry over.
  const int N = r.host_faces.count();
  r.host_face_image.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    const Face& hf = r.host_faces.faces[i];
    int image = 0;
    for (int d : hf.darts) {
      int e = host.dart_edge(d);
      int mapped = d;
      if ((d & 1) == 1 && !copies[e - 1].empty()) {
        mapped = PlanarEmbedding::dart_of(copies[e - 1].back(), 1);
      }
      int df = r.derived_faces.face_of_dart[mapped];
      if (image == 0) image = df;
      if (image != df) throw std::logic_error("host face tore while adding tracks");
    }
    if (r.derived_faces.faces[image - 1].length() != hf.length()) {
      throw std::logic_error("host face changed length while adding tracks");
    }
    r.host_face_image[i] = image;
  }

  // Deleting an untraversed edge merges the faces on its two sides.
  const int F = r.derived_faces.count();
  std::vector<int> parent(F + 1);
  for (int i = 0; i <= F; ++i) parent[i] = i;
  for (int e : r.untraversed) {
    int fa = r.derived_faces.face_of_dart[PlanarEmbedding::dart_of(e, 0)];
    int fb = r.derived_faces.face_of_dart[PlanarEmbedding::dart_of(e, 1)];
    parent[uf_find(parent, fa)] = uf_find(parent, fb);
  }
  std::vector<int> class_index(F + 1, -1);
  r.class_of_face.assign(F, -1);
  for (int fid = 1; fid <= F; ++fid) {
    int root = uf_find(parent, fid);
    if (class_index[root] < 0) {
      class_index[root] = r.num_classes++;
      r.class_length.push_back(0);
      r.class_is_bigon.push_back(1);
    }
    r.class_of_face[fid - 1] = class_index[root];
    r.class_length[class_index[root]] += r.derived_faces.faces[fid - 1].length();
  }
  for (int e : r.untraversed) {
    int fa = r.derived_faces.face_of_dart[PlanarEmbedding::dart_of(e, 0)];
    r.class_length[r.class_of_face[fa - 1]] -= 2;
  }
  for (int img : r.host_face_image) r.class_is_bigon[r.class_of_face[img - 1]] = 0;
  for (int ci = 0; ci < r.num_classes; ++ci) {
    if (r.class_is_bigon[ci] && r.class_length[ci] != 2) {
      throw std::logic_error("parallel track did not close into a 2-gon");
    }
  }
  r.class_sign.assign(r.num_classes, 0);
  return r;
}

void sign_faces(ReducedGraph& r, int plus_host_face) {
  if (plus_host_face < 1 || plus_host_face > r.host_faces.count()) {
    fail("BadParams", "host has no face " + std::to_string(plus_host_face));
  }
  // Faces of G' must alternate across every edge of G'; the edges of G' are
  // exactly the traversed instances in the derived embedding.
  std::vector<std::vector<int>> adj(r.num_classes);
  const int m = r.host.num_edges();
  for (int id = 1; id <= r.derived.num_edges(); ++id) {
    if (id <= m && r.traversals[id - 1] == 0) continue;
    int ca = r.class_of_face[r.derived_faces.face_of_dart[PlanarEmbedding::dart_of(id, 0)] - 1];
    int cb = r.class_of_face[r.derived_faces.face_of_dart[PlanarEmbedding::dart_of(id, 1)] - 1];
    if (ca == cb) {
      fail("OddDualCycle", "faces of the walk graph meet themselves across edge " + std::to_string(id));
    }
    adj[ca].push_back(cb);
    adj[cb].push_back(ca);
  }
  std::fill(r.class_sign.begin(), r.class_sign.end(), 0);
  const int start = r.class_of_host_face(plus_host_face);
  r.class_sign[start] = 1;
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int d : adj[c]) {
      if (r.class_sign[d] == 0) {
        r.class_sign[d] = -r.class_sign[c];
        q.push(d);
      } else if (r.class_sign[d] != -r.class_sign[c]) {
        fail("OddDualCycle", "face classes of the walk graph admit no 2-coloring");
      }
    }
  }
  for (int s : r.class_sign) {
    if (s == 0) throw std::logic_error("walk graph face adjacency came apart");
  }
}

ReductionReport reduction_report(const PlanarEmbedding& host, const ClosedWalk& walk,
                                 int plus_host_face) {
  // The theorem side needs the host Grinberg number; tree-like hosts with a
  // single face are rejected here, before any construction.
  GrinbergAnalysis ga = analyze_embedding(host);

  ReducedGraph r = reduce_walk(host, walk);
  sign_faces(r, plus_host_face);

  ReductionReport rep;
  rep.warnings = ga.warnings;
  rep.grinberg_num = ga.set.number();
  rep.phi = r.num_classes;
  rep.sum_m = r.stats.repeats;
  for (int ci = 0; ci < r.num_classes; ++ci) {
    (r.class_sign[ci] > 0 ? rep.n_plus : rep.n_minus)++;
  }
  rep.delta_abs = std::llabs(rep.n_minus - rep.n_plus);
  rep.nu = rep.n_minus - 1;
  rep.pi = rep.n_plus - 1;
  rep.f = 2 * rep.delta_abs;

  const int N = r.host_faces.count();
  rep.epsilon.resize(N);
  long long signed_sum = 0;
  bool all_plus = true, all_minus = true;
  for (int i = 0; i < N; ++i) {
    rep.epsilon[i] = r.class_sign[r.class_of_face[r.host_face_image[i] - 1]];
    signed_sum += static_cast<long long>(rep.epsilon[i]) * (r.host_faces.faces[i].length() - 2);
    (rep.epsilon[i] > 0 ? all_minus : all_plus) = false;
  }
  rep.epsilon_constant = all_plus || all_minus;
  rep.f_in_set = ga.set.contains(rep.f);

  long long plus_len = 0, minus_len = 0;
  for (int ci = 0; ci < r.num_classes; ++ci) {
    (r.class_sign[ci] > 0 ? plus_len : minus_len) += r.class_length[ci];
  }

  rep.eq1_ok = rep.phi == 2 + rep.sum_m;
  rep.balance_ok = plus_len == r.stats.length && minus_len == r.stats.length;
  rep.eq3_ok = std::llabs(signed_sum) == 2 * rep.delta_abs;
  rep.theorem_ok = rep.sum_m >= repeat_lower_bound(rep.grinberg_num);
  rep.rho_identity_ok = rep.sum_m == rep.delta_abs + 2 * std::min(rep.nu, rep.pi);
  return rep;
}

}  // namespace hamwalk
