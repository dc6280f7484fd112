#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamwalk/embedding.hpp"
#include "hamwalk/walks.hpp"

namespace hamwalk {

// Named example graphs with pinned embeddings, face vectors, and, where a
// good walk is known, a witness.  Stored expectations are re-derived by the
// test suite, never trusted.
struct Fixture {
  std::string name;
  std::optional<PlanarEmbedding> embedding;
  std::vector<int> lengths;  // face-length vector
  std::optional<ClosedWalk> witness;
  std::vector<long long> known_set;  // expected Grinberg set, empty when unstated
  std::optional<long long> known_h;
};

// Names: cycle k | star q | path_tree q | grid r c | altered_tree [base...]
// | hexcluster5 | fig5 | octagon_faces | k4.  altered_tree doubles the edges
// of its base fixture (default path_tree 10).
Fixture fixture(const std::string& name, const std::vector<std::string>& params = {});

std::vector<std::string> fixture_names();

}  // namespace hamwalk
