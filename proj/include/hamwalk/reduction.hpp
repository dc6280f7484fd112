#pragma once

#include <string>
#include <vector>

#include "hamwalk/embedding.hpp"
#include "hamwalk/walks.hpp"

namespace hamwalk {

// The reduction of a closed spanning walk on a simple embedded host: copy
// the host, give every edge traversed t >= 2 times t-1 parallel tracks, and
// treat untraversed edges as deleted.  Deletion is realised by classing the
// derived faces: the two faces beside an untraversed edge merge, and the
// classes are exactly the faces of the walk graph G'.
//
// G' is connected, spanning, and Eulerian (every vertex visited 1+m times
// has degree 2m+2), so its faces 2-color across its edges.  The class sizes
// and signs carry the walk's accounting: with Phi classes, n+ positive and
// n- negative, rho = Phi - 2 repeats, and the face-length sums of the two
// sides agree.  Worked example, 3x3 grid (row-major labels) with the walk
// 1,2,3,6,9,8,7,4,5,2: edge {1,2} doubles, edges {1,4},{5,6},{5,8} drop
// out, Phi = 3 (outer class, a class of three grid squares, the new 2-gon),
// the signing puts the corner square and the outer face positive, and
// |sum eps_i (len_i - 2)| = 2 = 2|n- - n+|.
struct ReducedGraph {
  PlanarEmbedding host;
  ClosedWalk walk;
  WalkStats stats;
  std::vector<int> traversals;  // per host edge id, index id-1
  std::vector<int> untraversed;  // host edge ids, ascending

  PlanarEmbedding derived;  // host plus parallel tracks; untraversed edges kept
  FaceSet derived_faces;
  FaceSet host_faces;
  std::vector<int> host_face_image;  // host face id -> derived face id

  int num_classes = 0;                 // Phi
  std::vector<int> class_of_face;      // derived face id -> class, 0-based
  std::vector<long long> class_length;  // boundary length in G'
  std::vector<char> class_is_bigon;
  std::vector<int> class_sign;  // +1/-1 once signed, else 0

  int class_of_host_face(int host_face_id) const {
    return class_of_face[host_face_image[host_face_id - 1] - 1];
  }
};

ReducedGraph reduce_walk(const PlanarEmbedding& host, const ClosedWalk& walk);

// 2-colors the classes across traversed edges; the class containing the
// given host face gets +1 (label choice only, the bipartition is forced).
void sign_faces(ReducedGraph& r, int plus_host_face = 1);

struct ReductionReport {
  long long phi = 0, sum_m = 0;
  long long n_plus = 0, n_minus = 0, delta_abs = 0;
  long long nu = 0, pi = 0;  // n_minus - 1 and n_plus - 1
  long long f = 0;           // 2 * delta_abs
  std::vector<int> epsilon;  // per host face, the sign of its containing class

  bool eq1_ok = false;       // Phi = 2 + sum m_i
  bool balance_ok = false;   // both sign sides bound |E(G')| edge sides
  bool eq3_ok = false;       // |sum eps_i (len_i - 2)| = 2 |Delta|
  bool theorem_ok = false;   // sum m_i >= g/2
  bool rho_identity_ok = false;  // sum m_i = f/2 + 2 min{nu, pi}

  bool epsilon_constant = false;
  bool f_in_set = false;  // guaranteed when epsilon is non-constant
  long long grinberg_num = 0;
  std::vector<std::string> warnings;

  bool all_ok() const { return eq1_ok && balance_ok && eq3_ok && theorem_ok && rho_identity_ok; }
};

ReductionReport reduction_report(const PlanarEmbedding& host, const ClosedWalk& walk,
                                 int plus_host_face = 1);

}  // namespace hamwalk
