#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotorkit/algebra.hpp"
#include "rotorkit/bigint.hpp"
#include "rotorkit/digraph.hpp"
#include "rotorkit/errors.hpp"

namespace rotorkit {

// Integer chip assignment on the vertices.
using Divisor = std::vector<Int>;

Int degree(const Divisor& x);

// x + L*f: firing v once removes out_degree(v) chips from v and sends one
// chip along each of its out-edges. f may have negative entries.
Divisor apply_firing(const Digraph& d, const Divisor& x, const std::vector<Int>& firing);

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<std::vector<Int>> witness;  // z with x == y + L*z, verified
};

// Divisor equivalence modulo the Laplacian image, decided by solvability in
// the Smith basis of the class lattice. Degrees must match.
EquivalenceResult equivalent(const Digraph& d, const Divisor& x, const Divisor& y);

// Quantifier convention for the firing vectors f tested in the reduced-divisor
// condition: which nonzero f with 0 <= f <= period are admissible.
//
// Taking literally all of them is vacuous: f = period gives L*f = 0 and can
// never drive a coordinate negative, so nothing would ever be reduced.
// zero_at_root (the default) fixes f(root) = 0, the directed analogue of
// firing vertex sets that avoid the root; it reproduces the expected census
// (arborescence count many reduced divisors per root) and the verify checks
// guard it. exclude_full_period merely drops f = period and is kept for
// comparison; it fails the census.
enum class FiringQuantifier { zero_at_root, exclude_full_period };

// True iff x is nonnegative off the root and every admissible firing vector
// drives some non-root coordinate negative. Exhaustive over the f-box.
bool is_w_reduced(const Digraph& d, const Divisor& x, int root,
                  FiringQuantifier quantifier = FiringQuantifier::zero_at_root);

// All root-reduced divisors, ascending. Candidates live in the finite box
// 0 <= x(v) <= out_degree(v)-1 for v != root (forced by unit firings), with
// x(root) making the degree zero. Under the default quantifier the census is
// verified before returning: count = arborescence count at the root, classes
// of size period(root) each, class count = Picard order.
std::vector<Divisor> enumerate_w_reduced(const Digraph& d, int root, std::size_t cap = kDefaultCap,
                                         FiringQuantifier quantifier = FiringQuantifier::zero_at_root);

// Unique label of the divisor class of a degree-zero divisor: coordinates in
// the basis {e_i - e_n}, mapped through the Smith row transform of the class
// lattice and reduced modulo the invariant factors. Two divisors are
// equivalent iff their canonical forms are equal.
std::vector<Int> canonical_form(const Digraph& d, const Divisor& x);

// space-separated values
std::string format_divisor(const Divisor& x);
Divisor parse_divisor(std::string_view text, int n);

}  // namespace rotorkit
