#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "hamwalk/corpus.hpp"
#include "hamwalk/errors.hpp"
#include "hamwalk/grinberg.hpp"
#include "hamwalk/reduction.hpp"
#include "oracles.hpp"

using namespace hamwalk;
using hamwalk::testing::perturb_walk;
using hamwalk::testing::random_embedding;

namespace {

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_CASE("grid walk worked end to end") {
  Fixture f = fixture("grid", {"3", "3"});
  ReducedGraph r = reduce_walk(*f.embedding, *f.witness);

  CHECK(r.stats.length == 10);
  CHECK(r.stats.repeats == 1);
  // edge {1,2} doubles, edges {1,4}, {5,6}, {5,8} drop out
  std::vector<int> want(12, 1);
  want[0] = 2;
  want[1] = want[7] = want[8] = 0;
  CHECK(r.traversals == want);
  CHECK(r.untraversed == std::vector<int>{2, 8, 9});

  CHECK(r.derived.num_edges() == 13);
  CHECK(r.derived_faces.count() == 6);  // five host faces plus the new 2-gon
  CHECK(r.num_classes == 3);
  CHECK(std::count(r.class_is_bigon.begin(), r.class_is_bigon.end(), 1) == 1);

  // corner square and outer face merge across edge {1,4}; the other three
  // squares merge across {5,6} and {5,8}
  CHECK(r.class_of_host_face(1) == r.class_of_host_face(2));
  CHECK(r.class_of_host_face(3) == r.class_of_host_face(4));
  CHECK(r.class_of_host_face(4) == r.class_of_host_face(5));
  CHECK(r.class_of_host_face(1) != r.class_of_host_face(3));

  sign_faces(r);
  CHECK(r.class_sign[r.class_of_host_face(1)] == 1);
  CHECK(r.class_sign[r.class_of_host_face(3)] == -1);
}

TEST_CASE("grid walk report") {
  Fixture f = fixture("grid", {"3", "3"});
  ReductionReport rep = reduction_report(*f.embedding, *f.witness);
  CHECK(rep.phi == 3);
  CHECK(rep.sum_m == 1);
  CHECK(rep.n_plus == 1);
  CHECK(rep.n_minus == 2);
  CHECK(rep.delta_abs == 1);
  CHECK(rep.nu == 1);
  CHECK(rep.pi == 0);
  CHECK(rep.f == 2);
  CHECK(rep.grinberg_num == 2);
  CHECK(rep.epsilon == std::vector<int>{1, 1, -1, -1, -1});
  CHECK(!rep.epsilon_constant);
  CHECK(rep.f_in_set);
  CHECK(rep.eq1_ok);
  CHECK(rep.balance_ok);
  CHECK(rep.eq3_ok);
  CHECK(rep.theorem_ok);
  CHECK(rep.rho_identity_ok);
  CHECK(rep.all_ok());
}

TEST_CASE("interior-path walk report") {
  Fixture f = fixture("fig5");
  ReducedGraph r = reduce_walk(*f.embedding, *f.witness);
  CHECK(r.stats.length == 38);
  CHECK(r.stats.repeats == 6);
  CHECK(r.untraversed == std::vector<int>{30, 34});
  CHECK(std::count(r.class_is_bigon.begin(), r.class_is_bigon.end(), 1) == 6);

  ReductionReport rep = reduction_report(*f.embedding, *f.witness);
  CHECK(rep.phi == 8);
  CHECK(rep.sum_m == 6);
  CHECK(rep.n_plus == 7);
  CHECK(rep.n_minus == 1);
  CHECK(rep.delta_abs == 6);
  CHECK(rep.f == 12);
  CHECK(rep.grinberg_num == 12);
  CHECK(rep.f_in_set);
  CHECK(!rep.epsilon_constant);
  CHECK(rep.epsilon == std::vector<int>{1, -1, -1, -1});
  CHECK(rep.all_ok());
  // the repeat count meets the floor exactly
  CHECK(rep.sum_m == repeat_lower_bound(rep.grinberg_num));
}

TEST_CASE("sign reference face is a label choice only") {
  Fixture f = fixture("grid", {"3", "3"});
  ReductionReport a = reduction_report(*f.embedding, *f.witness, 1);
  ReductionReport b = reduction_report(*f.embedding, *f.witness, 3);
  // pinning a negative-side face flips every sign
  CHECK(b.epsilon == std::vector<int>{-1, -1, 1, 1, 1});
  CHECK(b.n_plus == a.n_minus);
  CHECK(b.n_minus == a.n_plus);
  CHECK(b.delta_abs == a.delta_abs);
  CHECK(b.f == a.f);
  CHECK(b.all_ok());
  // pinning a face in the same class changes nothing
  ReductionReport c = reduction_report(*f.embedding, *f.witness, 2);
  CHECK(c.epsilon == a.epsilon);
}

TEST_CASE("constant signs fall outside the set") {
  // a spanning-tree tour keeps every host face in one class: eps is constant
  // and the face difference equals the full total, not a set member
  Fixture f = fixture("grid", {"3", "3"});
  ClosedWalk tour = spanning_tree_walk(*f.embedding);
  ReductionReport rep = reduction_report(*f.embedding, tour);
  CHECK(rep.phi == 9);
  CHECK(rep.sum_m == 7);
  CHECK(rep.n_plus == 1);
  CHECK(rep.n_minus == 8);
  CHECK(rep.f == 14);  // the total sum of (len - 2), larger than max of the set
  CHECK(rep.epsilon == std::vector<int>(5, 1));
  CHECK(rep.epsilon_constant);
  CHECK(!rep.f_in_set);
  CHECK(rep.all_ok());

  // a cycle traversed twice: both host faces on one side, four 2-gons on the other
  PlanarEmbedding c4 = *fixture("cycle", {"4"}).embedding;
  ClosedWalk twice{{1, 2, 3, 4, 1, 2, 3, 4}};
  ReductionReport cy = reduction_report(c4, twice);
  CHECK(cy.phi == 6);
  CHECK(cy.sum_m == 4);
  CHECK(cy.epsilon_constant);
  CHECK(cy.f == 4);
  CHECK(!cy.f_in_set);  // the set is {0}
  CHECK(cy.all_ok());
}

TEST_CASE("host faces survive the track insertion") {
  Fixture f = fixture("grid", {"3", "3"});
  ReducedGraph r = reduce_walk(*f.embedding, *f.witness);
  for (int i = 0; i < r.host_faces.count(); ++i) {
    const Face& hf = r.host_faces.faces[i];
    const Face& df = r.derived_faces.faces[r.host_face_image[i] - 1];
    CHECK(hf.length() == df.length());
  }
}

TEST_CASE("class lengths balance between the sides") {
  Fixture f = fixture("fig5");
  ReducedGraph r = reduce_walk(*f.embedding, *f.witness);
  sign_faces(r);
  long long plus = 0, minus = 0;
  for (int ci = 0; ci < r.num_classes; ++ci) {
    (r.class_sign[ci] > 0 ? plus : minus) += r.class_length[ci];
  }
  CHECK(plus == 38);
  CHECK(minus == 38);
}

TEST_CASE("rejection paths") {
  Fixture grid = fixture("grid", {"3", "3"});

  // hosts must be simple
  PlanarEmbedding doubled = double_all_edges(*fixture("cycle", {"4"}).embedding);
  CHECK(error_name([&] { reduce_walk(doubled, ClosedWalk{{1, 2, 3, 4}}); }) == "NotSimpleHost");

  // walk defects come back wrapped, keeping the original name in the message
  try {
    reduce_walk(*grid.embedding, ClosedWalk{{1, 2, 3, 6, 9, 8, 7, 4, 5, 9}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.name() == "InvalidWalk");
    CHECK(std::string(e.what()).find("NonAdjacentStep") != std::string::npos);
  }
  try {
    reduce_walk(*grid.embedding, ClosedWalk{{1, 2, 5, 4}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.name() == "InvalidWalk");
    CHECK(std::string(e.what()).find("NotSpanning") != std::string::npos);
  }

  // tree hosts have one face and no usable set
  PlanarEmbedding path = *fixture("path_tree", {"3"}).embedding;
  CHECK(error_name([&] {
          reduction_report(path, ClosedWalk{{1, 2, 3, 4, 3, 2}});
        }) == "TooFewFaces");

  // the reference face must exist
  CHECK(error_name([&] {
          reduction_report(*grid.embedding, *grid.witness, 6);
        }) == "BadParams");
}

TEST_CASE("identities hold across random walks") {
  std::mt19937 rng(20240817);
  int checked = 0;
  for (int it = 0; it < 50; ++it) {
    int n = std::uniform_int_distribution<int>(3, 9)(rng);
    PlanarEmbedding g = random_embedding(rng, n, 2 * n);
    if (!bridges(g).empty()) continue;  // tree-ish hosts are rejected upstream
    GrinbergSet set = analyze_embedding(g).set;
    std::vector<ClosedWalk> walks;
    walks.push_back(spanning_tree_walk(g));
    walks.push_back(hamiltonian_number_exact(g).walk);
    walks.push_back(perturb_walk(rng, g, walks[0], 2));
    walks.push_back(perturb_walk(rng, g, walks[1], 3));
    for (const ClosedWalk& w : walks) {
      CAPTURE(g.serialize());
      CAPTURE(w.vertices);
      ReductionReport rep = reduction_report(g, w);
      CHECK(rep.all_ok());
      if (rep.epsilon_constant) {
        long long total = 0;
        for (int l : analyze_embedding(g).lengths) total += l - 2;
        CHECK(rep.f == total);
      } else {
        CHECK(rep.f_in_set);
        CHECK(set.contains(rep.f));
      }
      CHECK(rep.sum_m >= repeat_lower_bound(set.number()));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}
