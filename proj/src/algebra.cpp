#include "rotorkit/algebra.hpp"

#include <stdexcept>
#include <string>

namespace rotorkit {

Int det_exact(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    IntegerMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int pivot_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    pivot_row = i;
                    break;
                }
            if (pivot_row == -1) return 0;
            a.swap_rows(k, pivot_row);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // exact division is guaranteed by the Bareiss identity
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Int arborescence_count(const Digraph& d, int root) {
    const int n = d.vertex_count();
    if (root < 0 || root >= n) throw std::out_of_range("root out of range");
    // out-degree Laplacian = -L^T: out_degree(i) on the diagonal, -mult(i,j) off it
    IntegerMatrix neg_lt = laplacian(d).transposed();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) neg_lt(i, j) = -neg_lt(i, j);
    Int count = det_exact(neg_lt.minor_matrix(root, root));
    if (count < 1)
        throw std::logic_error("arborescence count " + count.get_str() +
                               " is not positive for a strongly connected digraph");
    return count;
}

PeriodVector period_vector(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<Int> counts(std::size_t(n));
    Int g = 0;
    for (int v = 0; v < n; ++v) {
        counts[std::size_t(v)] = arborescence_count(d, v);
        g = gcd(g, counts[std::size_t(v)]);
    }
    PeriodVector period(std::size_t(n));
    for (int v = 0; v < n; ++v) period[std::size_t(v)] = counts[std::size_t(v)] / g;

    // independent consistency check against the defining kernel property
    std::vector<Int> image = laplacian(d) * period;
    Int primitive_gcd = 0;
    for (int v = 0; v < n; ++v) {
        if (image[std::size_t(v)] != 0)
            throw std::logic_error("period vector is not in the Laplacian kernel");
        if (period[std::size_t(v)] < 1) throw std::logic_error("period vector entry not positive");
        primitive_gcd = gcd(primitive_gcd, period[std::size_t(v)]);
    }
    if (primitive_gcd != 1) throw std::logic_error("period vector is not primitive");
    return period;
}

Int period_length(const Digraph& d) {
    PeriodVector period = period_vector(d);
    Int total = 0;
    for (int v = 0; v < d.vertex_count(); ++v) total += period[std::size_t(v)] * d.out_degree(v);
    return total;
}

Int pham_index(const Digraph& d) {
    const int n = d.vertex_count();
    PeriodVector period = period_vector(d);
    Int g = 0;
    for (int v = 0; v < n; ++v) g = gcd(g, arborescence_count(d, v));
    for (int v = 0; v < n; ++v) {
        Int count = arborescence_count(d, v);
        if (count % period[std::size_t(v)] != 0 || count / period[std::size_t(v)] != g)
            throw std::logic_error("arborescence count / period disagrees with the gcd at vertex " +
                                   std::to_string(v));
    }
    return g;
}

namespace {

// location of the smallest nonzero |entry| in the submatrix at (t.., t..),
// or (-1, -1) if it is all zero
std::pair<int, int> smallest_nonzero(const IntegerMatrix& s, int t) {
    int bi = -1, bj = -1;
    Int best;
    for (int i = t; i < s.rows(); ++i)
        for (int j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs(s(i, j));
            if (bi == -1 || a < best) {
                best = a;
                bi = i;
                bj = j;
            }
        }
    return {bi, bj};
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    SmithDecomposition dec{IntegerMatrix::identity(rows), m, IntegerMatrix::identity(cols)};
    IntegerMatrix& s = dec.s;
    IntegerMatrix& u = dec.u;
    IntegerMatrix& v = dec.v;

    const int pivots = rows < cols ? rows : cols;
    for (int t = 0; t < pivots; ++t) {
        for (;;) {
            auto [pi, pj] = smallest_nonzero(s, t);
            if (pi == -1) break;  // rest of the matrix is zero
            if (pi != t) {
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }

            bool reduced = true;
            for (int i = t + 1; i < rows; ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);
                if (q != 0) {
                    s.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (s(i, t) != 0) reduced = false;  // remainder, smaller pivot next round
            }
            for (int j = t + 1; j < cols; ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                if (q != 0) {
                    s.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (s(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // pivot must divide the remaining submatrix for the chain to hold
            bool divides = true;
            for (int i = t + 1; i < rows && divides; ++i)
                for (int j = t + 1; j < cols && divides; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    if (u * m * v != s) throw std::logic_error("smith normal form reconstruction failed");
    return dec;
}

IntegerMatrix class_lattice_matrix(const Digraph& d) {
    // dropping the last row is an arbitrary but fixed choice; any row works
    // because the columns sum to zero
    return laplacian(d).minor_matrix(d.vertex_count() - 1, -1);
}

PicardSummary picard_summary(const Digraph& d) {
    SmithDecomposition dec = smith_normal_form(class_lattice_matrix(d));
    std::vector<Int> diag = dec.diagonal();

    PicardSummary summary;
    summary.order = 1;
    for (const Int& factor : diag) {
        if (factor == 0)
            throw std::logic_error("class lattice has rank below n-1; the digraph cannot be strongly connected");
        summary.order *= factor;
        if (factor > 1) summary.invariant_factors.push_back(factor);
    }
    if (summary.order != pham_index(d))
        throw std::logic_error("Picard order disagrees with the arborescence-count gcd");
    return summary;
}

}  // namespace rotorkit
