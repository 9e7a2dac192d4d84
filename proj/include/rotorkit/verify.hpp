#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotorkit/digraph.hpp"
#include "rotorkit/errors.hpp"

namespace rotorkit {

// Outcome of one theorem check on one graph. Counterexamples carry the
// serialized instance so a failure can be replayed directly.
struct CheckResult {
    std::string check;
    std::string graph_id;
    bool pass = false;
    std::string details;
    std::vector<std::string> counterexamples;
};

// "PASS|FAIL <check-name> <graph-id> <details>"
std::string format_report_line(const CheckResult& r);

// Each check computes its combinatorial side (exhaustive simulation or
// enumeration) and its algebraic side (determinants, Smith form) separately
// and compares; nothing is shared between the two routes, so a single bug
// cannot confirm itself.

// every chip-and-rotor state is recurrent iff it is a unicycle
CheckResult check_recurrence_theorem(const Digraph& d, const std::string& graph_id,
                                     std::size_t cap = kDefaultCap);

// one simulated period per orbit matches period(v)*out_degree(v) visits,
// period(v) turns, period(tail) flow on every edge, and the total length
CheckResult check_period_theorem(const Digraph& d, const std::string& graph_id,
                                 std::size_t cap = kDefaultCap);

// brute-force orbit count = arborescence_count(w)/period(w) for every w
// = gcd of the arborescence counts
CheckResult check_orbit_count(const Digraph& d, const std::string& graph_id,
                              std::size_t cap = kDefaultCap);

// per-root unicycle counts = arborescence_count(w)*out_degree(w), and each
// orbit holds period(w)*out_degree(w) states with the chip at w
CheckResult check_unicycle_census(const Digraph& d, const std::string& graph_id,
                                  std::size_t cap = kDefaultCap);

// Smith-form group order = brute-force orbit count
CheckResult check_picard_match(const Digraph& d, const std::string& graph_id,
                               std::size_t cap = kDefaultCap);

// reduced divisors at `root`: arborescence-count many, in Picard-order many
// classes of size period(root)
CheckResult check_reduced_census(const Digraph& d, int root, const std::string& graph_id,
                                 std::size_t cap = kDefaultCap);

// rotor-period edge flows aggregated by (tail, head) equal
// period(tail)*multiplicity, and firing the period vector moves nothing
CheckResult check_chip_firing_correspondence(const Digraph& d, const std::string& graph_id,
                                             std::size_t cap = kDefaultCap);

// All checks above; reduced census runs once per root.
std::vector<CheckResult> run_all_checks(const Digraph& d, const std::string& graph_id,
                                        std::size_t cap = kDefaultCap);

struct CorpusEntry {
    std::string id;
    Digraph graph;
};

// The G1-G4 fixtures plus `random_count` seeded random digraphs on a fixed
// schedule: n cycles through 2..5, extra edges through 0..4, seeds ascending
// from seed0.
std::vector<CorpusEntry> verification_corpus(int random_count, std::uint64_t seed0);

}  // namespace rotorkit
