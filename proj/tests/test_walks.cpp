#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "hamwalk/corpus.hpp"
#include "hamwalk/errors.hpp"
#include "hamwalk/walks.hpp"
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

TEST_CASE("walk files round trip") {
  ClosedWalk w = parse_walk("w 4 1 2 3 2\n");
  CHECK(w.vertices == std::vector<int>{1, 2, 3, 2});
  CHECK(w.length() == 4);
  CHECK(serialize_walk(w) == "w 4 1 2 3 2\n");
  CHECK(parse_walk("# note\n w 2 1 2 \n").vertices == std::vector<int>{1, 2});
}

TEST_CASE("walk files reject malformed input") {
  auto name_of = [](const std::string& text) {
    return error_name([&] { parse_walk(text); });
  };
  CHECK(name_of("") == "SyntaxError");
  CHECK(name_of("v 2 1 2\n") == "SyntaxError");
  CHECK(name_of("w 3 1 2\n") == "SyntaxError");    // count mismatch
  CHECK(name_of("w 2 1 2 3\n") == "SyntaxError");  // trailing vertex
  CHECK(name_of("w 2 1 x\n") == "SyntaxError");
  CHECK(name_of("w 0\n") == "SyntaxError");
  CHECK(name_of("w 2 1 2\nw 2 1 2\n") == "SyntaxError");  // one walk per file
}

TEST_CASE("walk stats count repeats") {
  WalkStats st = walk_stats(ClosedWalk{{1, 2, 3, 2, 4, 2}}, 4);
  CHECK(st.length == 6);
  CHECK(st.repeats == 2);
  CHECK(st.multiplicities == std::vector<int>{0, 2, 0, 0});
  CHECK(st.spanning);
  CHECK(st.missing.empty());

  WalkStats part = walk_stats(ClosedWalk{{1, 3}}, 4);
  CHECK(!part.spanning);
  CHECK(part.missing == std::vector<int>{2, 4});
  CHECK(error_name([&] { require_spanning(part); }) == "NotSpanning");

  CHECK(error_name([&] { walk_stats(ClosedWalk{{1, 5}}, 4); }) == "UnknownVertex");
  CHECK(error_name([&] { walk_stats(ClosedWalk{{0, 1}}, 4); }) == "UnknownVertex");
}

TEST_CASE("validation checks every step including the wrap") {
  PlanarEmbedding grid = *fixture("grid", {"3", "3"}).embedding;
  WalkStats st = validate_walk(grid, ClosedWalk{{1, 2, 3, 6, 9, 8, 7, 4, 5, 2}});
  CHECK(st.length == 10);
  CHECK(st.repeats == 1);
  CHECK(st.spanning);

  // step 3 jumps across the grid
  CHECK(error_name([&] { validate_walk(grid, ClosedWalk{{1, 2, 9, 8}}); }) == "NonAdjacentStep");
  // the closing step 4 -> 1 is two apart on a path
  PlanarEmbedding path = *fixture("path_tree", {"3"}).embedding;
  try {
    validate_walk(path, ClosedWalk{{1, 2, 3, 4}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.name() == "NonAdjacentStep");
    CHECK(std::string(e.what()).find("step 4") != std::string::npos);
  }
}

TEST_CASE("pinned exact numbers") {
  CHECK(hamiltonian_number_exact(*fixture("grid", {"3", "3"}).embedding).h == 10);
  CHECK(hamiltonian_number_exact(*fixture("star", {"4"}).embedding).h == 8);
  CHECK(hamiltonian_number_exact(*fixture("cycle", {"6"}).embedding).h == 6);
  CHECK(hamiltonian_number_exact(*fixture("k4").embedding).h == 4);
  CHECK(hamiltonian_number_exact(*fixture("path_tree", {"10"}).embedding).h == 20);
}

TEST_CASE("solver output is a consistent certificate") {
  for (const char* name : {"grid", "k4", "star", "cycle"}) {
    std::vector<std::string> params;
    if (name == std::string("grid")) params = {"3", "3"};
    if (name == std::string("star")) params = {"4"};
    if (name == std::string("cycle")) params = {"6"};
    PlanarEmbedding g = *fixture(name, params).embedding;
    SolveResult r = hamiltonian_number_exact(g);
    CHECK(r.ordering.vertices.front() == 1);
    CHECK(static_cast<int>(r.ordering.vertices.size()) == g.num_vertices());
    CHECK(r.ordering.cost == r.h);
    WalkStats st = validate_walk(g, r.walk);
    require_spanning(st);
    CHECK(st.length == r.h);
  }
}

TEST_CASE("solver ties break to the smallest ordering") {
  SolveResult r = hamiltonian_number_exact(*fixture("cycle", {"5"}).embedding);
  CHECK(r.ordering.vertices == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r.walk.vertices == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("solver edge cases") {
  SolveResult one = hamiltonian_number_exact(PlanarEmbedding::parse("p planar 1 0\n"));
  CHECK(one.h == 0);
  CHECK(one.ordering.vertices == std::vector<int>{1});
  CHECK(one.walk.vertices.empty());
  CHECK(!one.warnings.empty());

  SolveResult two =
      hamiltonian_number_exact(PlanarEmbedding::parse("p planar 2 1\ne 1 1 2\nr 1 1 1\nr 2 1 1\n"));
  CHECK(two.h == 2);
  CHECK(two.walk.vertices == std::vector<int>{1, 2});

  CHECK(error_name([] {
          hamiltonian_number_exact(*fixture("grid", {"3", "3"}).embedding, 8);
        }) == "TooLarge");
  // the hard cap holds even if the caller asks for more
  CHECK(error_name([] {
          hamiltonian_number_exact(*fixture("grid", {"5", "5"}).embedding, 99);
        }) == "TooLarge");
}

TEST_CASE("pinned spectra") {
  CHECK(hamiltonian_spectrum(*fixture("cycle", {"4"}).embedding) ==
        std::vector<long long>{4, 6});
  CHECK(hamiltonian_spectrum(*fixture("k4").embedding) == std::vector<long long>{4});
  CHECK(hamiltonian_spectrum(*fixture("star", {"3"}).embedding) ==
        std::vector<long long>{6});
  CHECK(hamiltonian_spectrum(PlanarEmbedding::parse("p planar 1 0\n")) ==
        std::vector<long long>{0});
  CHECK(hamiltonian_spectrum(PlanarEmbedding::parse("p planar 2 1\ne 1 1 2\nr 1 1 1\nr 2 1 1\n")) ==
        std::vector<long long>{2});
  CHECK(error_name([] { hamiltonian_spectrum(*fixture("grid", {"5", "5"}).embedding); }) ==
        "TooLarge");
}

TEST_CASE("spectrum minimum agrees with the solver") {
  std::mt19937 rng(1234);
  for (int it = 0; it < 40; ++it) {
    int n = std::uniform_int_distribution<int>(3, 7)(rng);
    PlanarEmbedding g = random_embedding(rng, n, 2 * n);
    CAPTURE(g.serialize());
    std::vector<long long> spec = hamiltonian_spectrum(g);
    CHECK(spec.front() == hamiltonian_number_exact(g).h);
    CHECK(std::is_sorted(spec.begin(), spec.end()));
    CHECK(std::adjacent_find(spec.begin(), spec.end()) == spec.end());
  }
}

TEST_CASE("tree tour walk") {
  PlanarEmbedding grid = *fixture("grid", {"3", "3"}).embedding;
  ClosedWalk w = spanning_tree_walk(grid);
  CHECK(w.length() == 16);
  WalkStats st = validate_walk(grid, w);
  require_spanning(st);
  CHECK(st.repeats == 7);

  ClosedWalk k2 = spanning_tree_walk(
      PlanarEmbedding::parse("p planar 2 1\ne 1 1 2\nr 1 1 1\nr 2 1 1\n"));
  CHECK(k2.vertices == std::vector<int>{1, 2});

  CHECK(error_name([] { spanning_tree_walk(PlanarEmbedding::parse("p planar 1 0\n")); }) ==
        "BadParams");
}

TEST_CASE("tree tour stays valid on random graphs") {
  std::mt19937 rng(555);
  for (int it = 0; it < 30; ++it) {
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    PlanarEmbedding g = random_embedding(rng, n, n);
    ClosedWalk w = spanning_tree_walk(g);
    CHECK(w.length() == 2 * (n - 1));
    require_spanning(validate_walk(g, w));
  }
}

TEST_CASE("spliced detours keep walks valid") {
  std::mt19937 rng(808);
  PlanarEmbedding grid = *fixture("grid", {"3", "3"}).embedding;
  ClosedWalk base = *fixture("grid", {"3", "3"}).witness;
  for (int s = 1; s <= 5; ++s) {
    ClosedWalk w = perturb_walk(rng, grid, base, s);
    CHECK(w.length() == base.length() + 2 * s);
    WalkStats st = validate_walk(grid, w);
    require_spanning(st);
    CHECK(st.repeats == 1 + 2 * s);
  }
}
