#include <doctest.h>

#include <algorithm>
#include <functional>
#include <string>

#include "hamwalk/corpus.hpp"
#include "hamwalk/errors.hpp"
#include "hamwalk/grinberg.hpp"
#include "hamwalk/walks.hpp"
#include "oracles.hpp"

using namespace hamwalk;
using hamwalk::testing::brute_sign_values;

namespace {

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("every name accounted for") {
  CHECK(fixture_names() == std::vector<std::string>{"cycle", "star", "path_tree", "grid",
                                                    "altered_tree", "hexcluster5", "fig5",
                                                    "octagon_faces", "k4"});
}

TEST_CASE("stored sets match a fresh computation") {
  for (const std::string& name : fixture_names()) {
    std::vector<std::string> params;
    if (name == "cycle" || name == "star" || name == "path_tree") params = {"6"};
    if (name == "grid") params = {"3", "3"};
    Fixture f = fixture(name, params);
    CAPTURE(name);
    CHECK(!f.lengths.empty());
    if (f.embedding) CHECK(face_lengths(trace_faces(*f.embedding)) == f.lengths);
    if (!f.known_set.empty()) {
      CHECK(grinberg_set(f.lengths).values == f.known_set);
      CHECK(brute_sign_values(f.lengths) == f.known_set);
    }
  }
}

TEST_CASE("stored witnesses are valid and match the stored number") {
  for (const std::string& name : fixture_names()) {
    std::vector<std::string> params;
    if (name == "cycle" || name == "star" || name == "path_tree") params = {"7"};
    if (name == "grid") params = {"3", "3"};
    Fixture f = fixture(name, params);
    if (!f.witness) continue;
    CAPTURE(name);
    REQUIRE(f.embedding);
    WalkStats st = validate_walk(*f.embedding, *f.witness);
    require_spanning(st);
    if (f.known_h) CHECK(st.length == *f.known_h);
  }
}

TEST_CASE("basic families") {
  Fixture c = fixture("cycle", {"5"});
  CHECK(c.embedding->num_vertices() == 5);
  CHECK(c.embedding->num_edges() == 5);
  CHECK(sorted(c.lengths) == std::vector<int>{5, 5});
  CHECK(c.known_set == std::vector<long long>{0});

  Fixture s = fixture("star", {"4"});
  CHECK(s.embedding->num_vertices() == 5);
  CHECK(s.lengths == std::vector<int>{8});
  CHECK(s.known_h == 8);

  Fixture p = fixture("path_tree", {"10"});
  CHECK(p.embedding->num_vertices() == 11);
  CHECK(p.lengths == std::vector<int>{20});
  CHECK(p.known_h == 20);

  Fixture g = fixture("grid", {"3", "3"});
  CHECK(g.lengths == std::vector<int>{4, 8, 4, 4, 4});
  CHECK(g.known_set == std::vector<long long>{2, 6, 10});
  CHECK(g.known_h == 10);

  CHECK(fixture("grid", {"2", "2"}).lengths == std::vector<int>{4, 4});
  CHECK(fixture("grid", {"1", "5"}).lengths == std::vector<int>{8});
  CHECK(fixture("star", {"1"}).lengths == std::vector<int>{2});
}

TEST_CASE("grids carry the plane layout") {
  PlanarEmbedding g = *fixture("grid", {"4", "5"}).embedding;
  CHECK(g.num_vertices() == 20);
  CHECK(g.num_edges() == 31);
  std::vector<int> ls = sorted(face_lengths(trace_faces(g)));
  CHECK(std::count(ls.begin(), ls.end(), 4) == 12);
  CHECK(ls.back() == 14);
}

TEST_CASE("doubled trees") {
  Fixture f = fixture("altered_tree");
  CHECK(f.embedding->num_vertices() == 11);
  CHECK(f.embedding->num_edges() == 20);
  CHECK(!f.embedding->is_simple());
  CHECK(sorted(f.lengths) == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 20});
  CHECK(f.known_set == std::vector<long long>{18});
  CHECK(f.known_h == 20);

  Fixture st = fixture("altered_tree", {"star", "3"});
  CHECK(st.embedding->num_edges() == 6);
  CHECK(sorted(st.lengths) == std::vector<int>{2, 2, 2, 6});
  CHECK(st.known_set.empty());
  CHECK(grinberg_set(st.lengths).values == brute_sign_values(st.lengths));

  // a doubled non-default tree stores no expectations
  Fixture pp = fixture("altered_tree", {"path_tree", "4"});
  CHECK(pp.embedding->num_vertices() == 5);
  CHECK(pp.known_set.empty());
}

TEST_CASE("hexagon cluster") {
  Fixture f = fixture("hexcluster5");
  CHECK(f.embedding->num_vertices() == 20);
  CHECK(f.embedding->num_edges() == 24);
  CHECK(sorted(f.lengths) == std::vector<int>{6, 6, 6, 6, 6, 18});
  CHECK(f.known_set == std::vector<long long>{4, 12, 20, 28});
  CHECK(f.known_h == 22);
  CHECK(f.embedding->is_simple());
}

TEST_CASE("interior-path example") {
  Fixture f = fixture("fig5");
  CHECK(f.embedding->num_vertices() == 32);
  CHECK(f.embedding->num_edges() == 34);
  CHECK(f.lengths == std::vector<int>{26, 14, 14, 14});
  CHECK(f.known_set == std::vector<long long>{12, 36});
  CHECK(f.known_h == 38);
  REQUIRE(f.witness);
  CHECK(f.witness->length() == 38);
}

TEST_CASE("face vector without an embedding") {
  Fixture f = fixture("octagon_faces");
  CHECK(!f.embedding);
  CHECK(!f.witness);
  CHECK(f.lengths == std::vector<int>{8, 8, 8, 8, 8, 8, 8, 8, 20});
  CHECK(f.known_set == std::vector<long long>{6, 18, 30, 42, 54});
}

TEST_CASE("tetrahedron") {
  Fixture f = fixture("k4");
  CHECK(f.lengths == std::vector<int>{3, 3, 3, 3});
  CHECK(f.known_set == std::vector<long long>{0, 2});
  CHECK(f.known_h == 4);
  CHECK(f.witness->vertices == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("bad requests") {
  CHECK(error_name([] { fixture("moebius"); }) == "UnknownFixture");
  CHECK(error_name([] { fixture("cycle", {"2"}); }) == "BadParams");
  CHECK(error_name([] { fixture("cycle"); }) == "BadParams");
  CHECK(error_name([] { fixture("cycle", {"x"}); }) == "BadParams");
  CHECK(error_name([] { fixture("cycle", {"4", "4"}); }) == "BadParams");
  CHECK(error_name([] { fixture("star", {"0"}); }) == "BadParams");
  CHECK(error_name([] { fixture("grid", {"0", "3"}); }) == "BadParams");
  CHECK(error_name([] { fixture("grid", {"1", "1"}); }) == "BadParams");
  CHECK(error_name([] { fixture("altered_tree", {"octagon_faces"}); }) == "BadParams");
  CHECK(error_name([] { fixture("k4", {"4"}); }) == "BadParams");
  CHECK(error_name([] { fixture("altered_tree", {"moebius"}); }) == "UnknownFixture");
}
