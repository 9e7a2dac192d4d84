#pragma once

#include <vector>

#include "rotorkit/bigint.hpp"
#include "rotorkit/digraph.hpp"
#include "rotorkit/matrix.hpp"

namespace rotorkit {

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_exact(const IntegerMatrix& m);

// Number of spanning in-arborescences rooted at `root`, by the directed
// matrix-tree theorem: determinant of -L^T with row and column `root`
// deleted. Positive for strongly connected digraphs.
Int arborescence_count(const Digraph& d, int root);

// The primitive positive kernel vector of the Laplacian. Computed from
// arborescence counts divided by their gcd; the kernel property L*per = 0,
// positivity and primitivity are re-checked and a violation throws (it would
// mean a bug, not bad input).
using PeriodVector = std::vector<Int>;
PeriodVector period_vector(const Digraph& d);

// Rotor walk length of one full period, sum of period(v) * out_degree(v).
Int period_length(const Digraph& d);

// gcd over v of the arborescence counts; equals count(w)/period(w) for every
// w, which is asserted.
Int pham_index(const Digraph& d);

struct SmithDecomposition {
    IntegerMatrix u;  // rows x rows, |det| = 1
    IntegerMatrix s;  // diagonal form, entries s1 | s2 | ..., all >= 0
    IntegerMatrix v;  // cols x cols, |det| = 1

    std::vector<Int> diagonal() const { return s.diagonal(); }
};

// u * m * v == s, verified by multiplication before returning.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Laplacian with its last row deleted: the (n-1) x n matrix whose column
// span inside Z^(n-1) is the divisor class lattice in the basis
// {e_i - e_n : i < n} of the degree-zero sublattice.
IntegerMatrix class_lattice_matrix(const Digraph& d);

struct PicardSummary {
    std::vector<Int> invariant_factors;  // factors > 1, trailing 1s omitted
    Int order;                           // product of all invariant factors
};

// Order and invariant factors of the degree-zero divisor class group,
// via the Smith normal form of class_lattice_matrix. Cross-checked against
// pham_index before returning.
PicardSummary picard_summary(const Digraph& d);

}  // namespace rotorkit
