#include "hamwalk/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "hamwalk/errors.hpp"

namespace hamwalk {

namespace {

int param_int(const std::vector<std::string>& params, size_t i, const char* what) {
  if (i >= params.size()) fail("BadParams", std::string("missing parameter: ") + what);
  int value = 0;
  const std::string& tok = params[i];
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail("BadParams", std::string(what) + " must be an integer, got '" + tok + "'");
  }
  return value;
}

void no_extra(const std::vector<std::string>& params, size_t used) {
  if (params.size() > used) fail("BadParams", "unexpected extra parameters");
}

Fixture make_cycle(int k) {
  if (k < 3) fail("BadParams", "cycle needs k >= 3");
  std::vector<EdgeRec> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({i, i % k + 1});
  std::vector<std::vector<int>> rot(k);
  for (int i = 1; i <= k; ++i) rot[i - 1] = {i, (i + k - 2) % k + 1};
  Fixture f;
  f.name = "cycle";
  f.embedding = PlanarEmbedding::build(k, std::move(edges), rot);
  f.known_set = {0};
  f.known_h = k;
  ClosedWalk w;
  for (int i = 1; i <= k; ++i) w.vertices.push_back(i);
  f.witness = w;
  return f;
}

Fixture make_star(int q) {
  if (q < 1) fail("BadParams", "star needs q >= 1");
  std::vector<EdgeRec> edges;
  for (int i = 1; i <= q; ++i) edges.push_back({1, i + 1});
  std::vector<std::vector<int>> rot(q + 1);
  for (int i = 1; i <= q; ++i) {
    rot[0].push_back(i);
    rot[i] = {i};
  }
  Fixture f;
  f.name = "star";
  f.embedding = PlanarEmbedding::build(q + 1, std::move(edges), rot);
  f.known_h = 2LL * q;
  return f;
}

Fixture make_path_tree(int q) {
  if (q < 1) fail("BadParams", "path_tree needs q >= 1");
  std::vector<EdgeRec> edges;
  for (int i = 1; i <= q; ++i) edges.push_back({i, i + 1});
  std::vector<std::vector<int>> rot(q + 1);
  rot[0] = {1};
  for (int i = 2; i <= q; ++i) rot[i - 1] = {i - 1, i};
  rot[q] = {q};
  Fixture f;
  f.name = "path_tree";
  f.embedding = PlanarEmbedding::build(q + 1, std::move(edges), rot);
  f.known_h = 2LL * q;
  return f;
}

Fixture make_grid(int r, int c) {
  if (r < 1 || c < 1 || r * c < 2) fail("BadParams", "grid needs r, c >= 1 and at least two vertices");
  const int n = r * c;
  auto vid = [c](int i, int j) { return i * c + j + 1; };
  std::vector<EdgeRec> edges;
  std::vector<std::vector<int>> east(r, std::vector<int>(c, 0)), south(r, std::vector<int>(c, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      if (j + 1 < c) {
        edges.push_back({vid(i, j), vid(i, j + 1)});
        east[i][j] = static_cast<int>(edges.size());
      }
      if (i + 1 < r) {
        edges.push_back({vid(i, j), vid(i + 1, j)});
        south[i][j] = static_cast<int>(edges.size());
      }
    }
  }
  // Rows grow downward, so counterclockwise around a vertex reads east,
  // north, west, south.
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      std::vector<int>& out = rot[vid(i, j) - 1];
      if (j + 1 < c) out.push_back(east[i][j]);
      if (i > 0) out.push_back(south[i - 1][j]);
      if (j > 0) out.push_back(east[i][j - 1]);
      if (i + 1 < r) out.push_back(south[i][j]);
    }
  }
  Fixture f;
  f.name = "grid";
  f.embedding = PlanarEmbedding::build(n, std::move(edges), rot);
  if (r == 3 && c == 3) {
    f.known_set = {2, 6, 10};
    f.known_h = 10;
    f.witness = ClosedWalk{{1, 2, 3, 6, 9, 8, 7, 4, 5, 2}};
  }
  return f;
}

// Five flat-top hexagon cells on the triangular lattice: the center plus its
// neighbors across boundary edges 1, 2, 4, 5 (edges numbered from the
// corner at angle 0, counterclockwise).  Corner coordinates are integers
// once y is measured in units of sqrt(3), so the rotations sort exactly.
Fixture make_hexcluster5() {
  const int corner[6][2] = {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}};
  const int center_off[6][2] = {{3, 1}, {0, 2}, {-3, 1}, {-3, -1}, {0, -2}, {3, -1}};
  const int dirs[4] = {1, 2, 4, 5};

  std::vector<std::pair<int, int>> centers = {{0, 0}};
  for (int d : dirs) centers.push_back({center_off[d][0], center_off[d][1]});

  std::map<std::pair<int, int>, int> vid;
  std::vector<std::pair<int, int>> pos;
  for (auto [cx, cy] : centers) {
    for (auto [dx, dy] : corner) vid[{cx + dx, cy + dy}] = 0;
  }
  for (auto& [p, id] : vid) {
    pos.push_back(p);
    id = static_cast<int>(pos.size());
  }

  std::map<std::pair<int, int>, int> eid;
  std::vector<EdgeRec> edges;
  for (auto [cx, cy] : centers) {
    for (int i = 0; i < 6; ++i) {
      int a = vid[{cx + corner[i][0], cy + corner[i][1]}];
      int b = vid[{cx + corner[(i + 1) % 6][0], cy + corner[(i + 1) % 6][1]}];
      auto key = std::minmax(a, b);
      if (eid.emplace(std::pair<int, int>(key.first, key.second), 0).second) {
        edges.push_back({key.first, key.second});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const EdgeRec& a, const EdgeRec& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (int id = 1; id <= static_cast<int>(edges.size()); ++id) {
    eid[{edges[id - 1].u, edges[id - 1].v}] = id;
  }

  const int n = static_cast<int>(pos.size());
  std::vector<std::vector<std::pair<std::pair<int, int>, int>>> incident(n);  // (direction, edge id)
  for (const EdgeRec& e : edges) {
    auto [ux, uy] = pos[e.u - 1];
    auto [vx, vy] = pos[e.v - 1];
    int id = eid[{e.u, e.v}];
    incident[e.u - 1].push_back({{vx - ux, vy - uy}, id});
    incident[e.v - 1].push_back({{ux - vx, uy - vy}, id});
  }
  // Counterclockwise by angle; directions never tie on this lattice.  The
  // cross product of the true vectors (dx, dy*sqrt(3)) has the sign of the
  // integer cross product.
  auto upper = [](std::pair<int, int> d) { return d.second > 0 || (d.second == 0 && d.first > 0); };
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::sort(incident[v].begin(), incident[v].end(),
              [&](const auto& a, const auto& b) {
                if (upper(a.first) != upper(b.first)) return upper(a.first);
                long long cross = static_cast<long long>(a.first.first) * b.first.second -
                                  static_cast<long long>(a.first.second) * b.first.first;
                return cross > 0;
              });
    for (const auto& [dir, id] : incident[v]) rot[v].push_back(id);
  }

  Fixture f;
  f.name = "hexcluster5";
  f.embedding = PlanarEmbedding::build(n, std::move(edges), rot);
  f.known_set = {4, 12, 20, 28};
  f.known_h = 22;
  return f;
}

// A 26-cycle through a, x, y (arcs of 10, 6, and 10 edges) with two interior
// 4-edge paths a-b-c-d-x and a-e-f-g-y.  The arc lengths force the interior
// faces to 14, 14, 14 against the outer 26.  Labels: a=1, x=11, y=17, the
// rest of the cycle in order, then b..d = 27..29 and e..g = 30..32.
Fixture make_fig5() {
  const int n = 32;
  std::vector<EdgeRec> edges;
  for (int i = 1; i <= 25; ++i) edges.push_back({i, i + 1});
  edges.push_back({26, 1});                       // 26
  edges.push_back({1, 27});                       // 27: a-b
  edges.push_back({27, 28});                      // 28: b-c
  edges.push_back({28, 29});                      // 29: c-d
  edges.push_back({29, 11});                      // 30: d-x
  edges.push_back({1, 30});                       // 31: a-e
  edges.push_back({30, 31});                      // 32: e-f
  edges.push_back({31, 32});                      // 33: f-g
  edges.push_back({32, 17});                      // 34: g-y

  std::vector<std::vector<int>> rot(n);
  rot[0] = {1, 27, 31, 26};  // a: toward 2, b, e, 26 (cycle drawn counterclockwise)
  for (int i = 2; i <= 26; ++i) rot[i - 1] = {i == 26 ? 26 : i, i - 1};
  rot[10] = {11, 30, 10};    // x: toward 12, d, 10
  rot[16] = {17, 34, 16};    // y: toward 18, g, 16
  rot[26] = {27, 28};        // b
  rot[27] = {28, 29};        // c
  rot[28] = {29, 30};        // d
  rot[29] = {31, 32};        // e
  rot[30] = {32, 33};        // f
  rot[31] = {33, 34};        // g

  Fixture f;
  f.name = "fig5";
  f.embedding = PlanarEmbedding::build(n, std::move(edges), rot);
  f.known_set = {12, 36};
  f.known_h = 38;
  ClosedWalk w;
  w.vertices = {1, 27, 28, 29, 28, 27, 1, 30, 31, 32, 31, 30};
  for (int i = 1; i <= 26; ++i) w.vertices.push_back(i);
  // Rotate so the outer tour leads: the sequence is cyclic, but keep the
  // excursion form of the source description: start at a.
  f.witness = w;
  return f;
}

Fixture make_k4() {
  std::vector<EdgeRec> edges = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  std::vector<std::vector<int>> rot = {{1, 3, 2}, {4, 5, 1}, {2, 6, 4}, {3, 5, 6}};
  Fixture f;
  f.name = "k4";
  f.embedding = PlanarEmbedding::build(4, std::move(edges), rot);
  f.known_set = {0, 2};
  f.known_h = 4;
  f.witness = ClosedWalk{{1, 2, 3, 4}};
  return f;
}

}  // namespace

Fixture fixture(const std::string& name, const std::vector<std::string>& params) {
  Fixture f;
  if (name == "cycle") {
    int k = param_int(params, 0, "k");
    no_extra(params, 1);
    f = make_cycle(k);
  } else if (name == "star") {
    int q = param_int(params, 0, "q");
    no_extra(params, 1);
    f = make_star(q);
  } else if (name == "path_tree") {
    int q = param_int(params, 0, "q");
    no_extra(params, 1);
    f = make_path_tree(q);
  } else if (name == "grid") {
    int r = param_int(params, 0, "r");
    int c = param_int(params, 1, "c");
    no_extra(params, 2);
    f = make_grid(r, c);
  } else if (name == "altered_tree") {
    Fixture base = params.empty()
                       ? fixture("path_tree", {"10"})
                       : fixture(params[0], {params.begin() + 1, params.end()});
    if (!base.embedding) fail("BadParams", "altered_tree base '" + base.name + "' has no embedding");
    f.name = "altered_tree";
    f.embedding = double_all_edges(*base.embedding);
    if (base.name == "path_tree" && base.embedding->num_vertices() == 11) {
      f.known_set = {18};
      f.known_h = 20;
    }
  } else if (name == "hexcluster5") {
    no_extra(params, 0);
    f = make_hexcluster5();
  } else if (name == "fig5") {
    no_extra(params, 0);
    f = make_fig5();
  } else if (name == "octagon_faces") {
    no_extra(params, 0);
    f.name = "octagon_faces";
    f.lengths = {8, 8, 8, 8, 8, 8, 8, 8, 20};
    f.known_set = {6, 18, 30, 42, 54};
    return f;
  } else if (name == "k4") {
    no_extra(params, 0);
    f = make_k4();
  } else {
    fail("UnknownFixture", "no fixture named '" + name + "'");
  }
  if (f.embedding) f.lengths = face_lengths(trace_faces(*f.embedding));
  return f;
}

std::vector<std::string> fixture_names() {
  return {"cycle", "star", "path_tree", "grid", "altered_tree", "hexcluster5", "fig5",
          "octagon_faces", "k4"};
}

}  // namespace hamwalk
