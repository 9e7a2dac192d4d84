#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rotorkit/digraph.hpp"
#include "rotorkit/errors.hpp"

namespace rotorkit {

// A chip position together with one rotor (out-edge index) per vertex.
// Ordering is lexicographic on (chip, rotors); that order fixes canonical
// orbit representatives and all deterministic output.
struct ChipRotorState {
    int chip = 0;
    std::vector<int> rotors;

    friend auto operator<=>(const ChipRotorState&, const ChipRotorState&) = default;
};

void validate_state(const Digraph& d, const ChipRotorState& s);

// One rotor-router move: the rotor at the chip's vertex advances to the next
// edge in cyclic order, then the chip walks along that new rotor edge.
ChipRotorState step(const Digraph& d, const ChipRotorState& s);

// True iff the rotor edges contain exactly one directed cycle and the chip
// sits on it. Every vertex has rotor out-degree one, so the number of cycles
// equals the number of weakly connected components of the rotor graph.
bool is_unicycle(const Digraph& d, const ChipRotorState& s);

enum class Recurrence { recurrent, transient };

struct ClassifyResult {
    Recurrence kind;
    std::int64_t steps;  // steps taken until the first repeated state
};

// Iterates `step`, recording visited states, and stops at the first
// repetition; recurrent iff the repeated state is the start.
ClassifyResult classify_by_simulation(const Digraph& d, const ChipRotorState& s,
                                      std::size_t cap = kDefaultCap);

// Counts from one full period of the rotor walk.
struct OrbitSummary {
    std::int64_t length = 0;                          // total steps
    std::vector<std::int64_t> visits;                 // times the chip left each vertex
    std::vector<std::int64_t> turns;                  // full rotor turns per vertex
    std::vector<std::vector<std::int64_t>> edge_flow; // traversals per (tail, index)
};

// Runs the walk from a unicycle until it recurs. The returned counts are
// checked against the period vector (visits = period * out_degree, turns =
// period, every edge flow = period of its tail); a mismatch throws, since the
// walk and the algebra may not disagree.
OrbitSummary run_period(const Digraph& d, const ChipRotorState& s, std::size_t cap = kDefaultCap);

// All unicycles in lexicographic (chip, rotors) order. Throws CapExceeded if
// the full state space n * prod(out_degree) is larger than `cap`.
std::vector<ChipRotorState> enumerate_unicycles(const Digraph& d, std::size_t cap = kDefaultCap);

// Partition of the unicycles into rotor-router orbits. Each orbit starts at
// its lexicographically smallest state and follows the walk; orbits are
// sorted by representative.
std::vector<std::vector<ChipRotorState>> orbit_partition(const Digraph& d,
                                                         std::size_t cap = kDefaultCap);

// One chosen out-edge per non-root vertex whose union forms a spanning
// in-arborescence; edge_index[root] is -1.
struct Arborescence {
    int root = 0;
    std::vector<int> edge_index;

    friend auto operator<=>(const Arborescence&, const Arborescence&) = default;
};

bool is_arborescence(const Digraph& d, const Arborescence& a);

// Backtracking enumeration over all edge choices, in lexicographic order of
// the edge-index vector.
std::vector<Arborescence> enumerate_arborescences(const Digraph& d, int root,
                                                  std::size_t cap = kDefaultCap);

// Bijection behind the orbit count: adding out-edge k at the root of an
// arborescence and placing the chip there yields a unicycle; stripping the
// root's rotor from a unicycle whose chip is at `root` yields the
// arborescence back.
ChipRotorState arborescence_to_unicycle(const Digraph& d, const Arborescence& a, int k);
std::pair<Arborescence, int> unicycle_to_arborescence(const Digraph& d, const ChipRotorState& s,
                                                      int root);

// "chip@v rotors=i0,i1,..."
std::string format_state(const ChipRotorState& s);
// "i0,i1,..." -> indices; bounds are NOT checked here
std::vector<int> parse_rotor_indices(std::string_view text);

// DOT export: all edges gray, rotor edges solid black, chip vertex
// double-circled.
std::string to_dot(const Digraph& d, const ChipRotorState& s);

}  // namespace rotorkit
