#pragma once

#include <string>
#include <vector>

namespace hamwalk {

// A combinatorial embedding of a connected planar multigraph on the sphere.
//
// Vertices are 1..n, edges are 1..m with recorded endpoints, and each vertex
// carries the counterclockwise cyclic order of its incident edge-ends.  An
// edge-end is a "dart": dart 2*(e-1) is edge e's end at u, dart 2*(e-1)+1 its
// end at v.  Viewed as a directed half-edge a dart points away from the
// vertex it is attached to.
//
// Face tracing: from dart d, directed into vertex w, the next boundary dart
// is the successor of twin(d) in the counterclockwise rotation at w.  Orbits
// of that permutation are the faces, and Euler's formula n - m + F = 2 must
// hold or the rotation system does not describe a sphere embedding.
struct EdgeRec {
  int u = 0, v = 0;
};

class PlanarEmbedding {
 public:
  // Empty placeholder; validated instances come from parse or build.
  PlanarEmbedding() = default;

  // Parses the graph file format:
  //   p planar <n> <m>
  //   e <id> <u> <v>
  //   r <v> <k> <edge-id> ... <edge-id>
  // '#' starts a comment.  Rotation entries are plain edge ids bound to the
  // endpoint whose rotation line they appear in; every edge id must appear in
  // exactly two rotation lines (its two endpoints), twice in neither.
  static PlanarEmbedding parse(const std::string& text);

  // Builds from explicit parts; rotations are per-vertex lists of edge ids in
  // counterclockwise order.  Runs the same validation as parse.
  static PlanarEmbedding build(int n, std::vector<EdgeRec> edges,
                               const std::vector<std::vector<int>>& rotation_edge_ids);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  int edge_u(int id) const { return edges_[id - 1].u; }
  int edge_v(int id) const { return edges_[id - 1].v; }

  static int twin(int d) { return d ^ 1; }
  static int dart_of(int edge_id, int side) { return 2 * (edge_id - 1) + side; }
  int dart_edge(int d) const { return d / 2 + 1; }
  // Vertex the dart is attached to (the tail when read as a directed edge).
  int dart_vertex(int d) const {
    const EdgeRec& e = edges_[d / 2];
    return (d & 1) ? e.v : e.u;
  }
  int dart_head(int d) const { return dart_vertex(twin(d)); }

  int rotation_succ(int d) const { return succ_[d]; }
  int face_next(int d) const { return succ_[twin(d)]; }

  // Counterclockwise dart order at v (1-based vertex id).
  const std::vector<int>& rotation(int v) const { return rotations_[v - 1]; }

  bool is_simple() const;
  std::string serialize() const;
  bool same_structure(const PlanarEmbedding& other) const;

 private:
  void finalize();  // validates and builds the successor table

  int n_ = 0;
  std::vector<EdgeRec> edges_;
  std::vector<std::vector<int>> rotations_;  // darts, per vertex
  std::vector<int> succ_;                    // next dart in rotation, per dart
};

struct Face {
  int id = 0;                // 1-based, in trace order
  std::vector<int> darts;    // boundary darts in trace order
  int length() const { return static_cast<int>(darts.size()); }
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;  // dart -> face id
  int count() const { return static_cast<int>(faces.size()); }
};

FaceSet trace_faces(const PlanarEmbedding& g);
std::vector<int> face_lengths(const FaceSet& fs);
std::vector<int> face_vertex_cycle(const PlanarEmbedding& g, const Face& f);

using DistanceMatrix = std::vector<std::vector<int>>;

// BFS hop distances between all vertex pairs; [i][j] is 0-based.
DistanceMatrix shortest_path_matrix(const PlanarEmbedding& g);
int diameter(const PlanarEmbedding& g);

// Minimum number of vertices whose removal disconnects the underlying simple
// graph (n-1 for complete graphs), via unit-capacity vertex flows.
int vertex_connectivity(const PlanarEmbedding& g);

// Adds a parallel copy of every edge, embedded immediately adjacent to the
// original at both endpoints, so each original edge bounds a new 2-gon face.
// Copy of edge i gets id m+i.
PlanarEmbedding double_all_edges(const PlanarEmbedding& g);

// Edge ids whose removal disconnects the graph.  Parallel edges never qualify.
std::vector<int> bridges(const PlanarEmbedding& g);

// Sorted, deduplicated adjacency lists of the underlying simple graph,
// indexed 1..n (entry 0 unused).
std::vector<std::vector<int>> neighbor_lists(const PlanarEmbedding& g);

}  // namespace hamwalk
