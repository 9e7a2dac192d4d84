#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "rotorkit/digraph.hpp"

namespace rotorkit {

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Digraph directed_cycle(int n);

// Each undirected edge {a, b} becomes the antiparallel pair a -> b, b -> a.
// Rotor order at every vertex follows the listing order of the input edges.
Digraph bidirected(int n, const std::vector<std::pair<int, int>>& edges);

// Random Hamiltonian cycle plus extra_edges uniformly random non-loop edges.
// Strongly connected by construction and fully determined by the seed (the
// sampler is self-contained, so results do not depend on the C++ runtime).
Digraph random_digraph(int n, int extra_edges, std::uint64_t seed);

// Named test fixtures used throughout:
//   G1  directed 2-cycle
//   G2  directed 3-cycle
//   G3  edges 0->1, 1->0, 1->2, 2->0; rotor order at 1 = (->0, ->2)
//   G4  bidirected triangle
Digraph fixture(std::string_view name);
const std::vector<std::string_view>& fixture_names();

}  // namespace rotorkit
