#include "rotorkit/divisors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rotorkit {

Int degree(const Divisor& x) {
    Int sum = 0;
    for (const Int& v : x) sum += v;
    return sum;
}

Divisor apply_firing(const Digraph& d, const Divisor& x, const std::vector<Int>& firing) {
    const int n = d.vertex_count();
    if (int(x.size()) != n || int(firing.size()) != n)
        throw std::invalid_argument("divisor or firing vector has wrong length");
    IntegerMatrix l = laplacian(d);
    Divisor result = x;
    std::vector<Int> moved = l * firing;
    for (int v = 0; v < n; ++v) result[std::size_t(v)] += moved[std::size_t(v)];
    return result;
}

EquivalenceResult equivalent(const Digraph& d, const Divisor& x, const Divisor& y) {
    const int n = d.vertex_count();
    if (int(x.size()) != n || int(y.size()) != n)
        throw std::invalid_argument("divisor has wrong length");
    if (degree(x) != degree(y)) throw std::invalid_argument("divisors differ in degree");

    // Solve M*z = (x - y) restricted to the first n-1 coordinates, where M is
    // the class lattice matrix. The dropped coordinate follows automatically:
    // both sides sum over all n coordinates to the same value.
    SmithDecomposition dec = smith_normal_form(class_lattice_matrix(d));
    std::vector<Int> b(std::size_t(n - 1));
    for (int i = 0; i + 1 < n; ++i) b[std::size_t(i)] = x[std::size_t(i)] - y[std::size_t(i)];
    std::vector<Int> c = dec.u * b;

    std::vector<Int> t(std::size_t(n), 0);  // solution in the Smith basis, free coordinate 0
    for (int i = 0; i + 1 < n; ++i) {
        const Int s = dec.s(i, i);
        if (s == 0) {
            if (c[std::size_t(i)] != 0) return {false, std::nullopt};
            continue;
        }
        if (c[std::size_t(i)] % s != 0) return {false, std::nullopt};
        t[std::size_t(i)] = c[std::size_t(i)] / s;
    }
    std::vector<Int> z = dec.v * t;

    if (apply_firing(d, y, z) != x)
        throw std::logic_error("equivalence witness failed verification");
    return {true, std::move(z)};
}

bool is_w_reduced(const Digraph& d, const Divisor& x, int root, FiringQuantifier quantifier) {
    const int n = d.vertex_count();
    if (root < 0 || root >= n) throw std::out_of_range("root out of range");
    if (int(x.size()) != n) throw std::invalid_argument("divisor has wrong length");

    for (int v = 0; v < n; ++v)
        if (v != root && x[std::size_t(v)] < 0) return false;

    const PeriodVector period = period_vector(d);
    const IntegerMatrix l = laplacian(d);
    std::vector<Int> bound(std::size_t(n));
    for (int v = 0; v < n; ++v)
        bound[std::size_t(v)] =
            (quantifier == FiringQuantifier::zero_at_root && v == root) ? Int(0) : period[std::size_t(v)];

    // mixed-radix odometer over all f in the box, keeping y = x + L*f updated
    // incrementally; starts at f = 0, so the first advance is the first
    // nonzero candidate
    std::vector<Int> f(std::size_t(n), 0);
    std::vector<Int> y = x;
    for (;;) {
        int v = n - 1;
        for (; v >= 0; --v) {
            if (f[std::size_t(v)] < bound[std::size_t(v)]) {
                f[std::size_t(v)] += 1;
                for (int i = 0; i < n; ++i) y[std::size_t(i)] += l(i, v);
                break;
            }
            for (int i = 0; i < n; ++i) y[std::size_t(i)] -= f[std::size_t(v)] * l(i, v);
            f[std::size_t(v)] = 0;
        }
        if (v < 0) break;  // box exhausted
        if (quantifier == FiringQuantifier::exclude_full_period && f == period) continue;

        bool drives_negative = false;
        for (int u = 0; u < n && !drives_negative; ++u)
            if (u != root && y[std::size_t(u)] < 0) drives_negative = true;
        if (!drives_negative) return false;
    }
    return true;
}

std::vector<Divisor> enumerate_w_reduced(const Digraph& d, int root, std::size_t cap,
                                         FiringQuantifier quantifier) {
    const int n = d.vertex_count();
    if (root < 0 || root >= n) throw std::out_of_range("root out of range");

    Int box = 1;
    for (int v = 0; v < n; ++v)
        if (v != root) box *= d.out_degree(v);
    if (box > Int(std::uint64_t(cap)))
        throw CapExceeded("candidate box " + box.get_str() + " exceeds cap of " + std::to_string(cap));

    std::vector<Divisor> reduced;
    Divisor x(std::size_t(n), 0);
    for (;;) {
        Int off_root = 0;
        for (int v = 0; v < n; ++v)
            if (v != root) off_root += x[std::size_t(v)];
        x[std::size_t(root)] = -off_root;
        if (is_w_reduced(d, x, root, quantifier)) reduced.push_back(x);

        int v = n - 1;
        for (; v >= 0; --v) {
            if (v == root) continue;
            if (++x[std::size_t(v)] < d.out_degree(v)) break;
            x[std::size_t(v)] = 0;
        }
        if (v < 0) break;
    }
    std::sort(reduced.begin(), reduced.end());

    if (quantifier == FiringQuantifier::zero_at_root) {
        // census: the count matches the arborescence count and the divisors
        // fall into Picard-order many classes of size period(root) each
        if (Int(reduced.size()) != arborescence_count(d, root))
            throw std::logic_error("reduced-divisor count disagrees with the arborescence count");
        const Int class_size = period_vector(d)[std::size_t(root)];
        std::vector<Divisor> representatives;
        std::vector<Int> counts;
        for (const Divisor& r : reduced) {
            bool placed = false;
            for (std::size_t c = 0; c < representatives.size() && !placed; ++c)
                if (equivalent(d, r, representatives[c]).equivalent) {
                    counts[c] += 1;
                    placed = true;
                }
            if (!placed) {
                representatives.push_back(r);
                counts.push_back(1);
            }
        }
        for (const Int& count : counts)
            if (count != class_size)
                throw std::logic_error("a divisor class does not hold period(root) reduced elements");
        if (Int(representatives.size()) != picard_summary(d).order)
            throw std::logic_error("reduced-divisor class count disagrees with the Picard order");
    }
    return reduced;
}

std::vector<Int> canonical_form(const Digraph& d, const Divisor& x) {
    const int n = d.vertex_count();
    if (int(x.size()) != n) throw std::invalid_argument("divisor has wrong length");
    if (degree(x) != 0) throw std::invalid_argument("canonical_form requires a degree-zero divisor");

    SmithDecomposition dec = smith_normal_form(class_lattice_matrix(d));
    std::vector<Int> b(x.begin(), x.end() - 1);  // coordinates in the basis {e_i - e_n}
    std::vector<Int> c = dec.u * b;
    std::vector<Int> residue(std::size_t(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
        const Int s = dec.s(i, i);
        residue[std::size_t(i)] = s > 0 ? mod_floor(c[std::size_t(i)], s) : c[std::size_t(i)];
    }
    return residue;
}

std::string format_divisor(const Divisor& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ' ';
        os << x[i].get_str();
    }
    return os.str();
}

Divisor parse_divisor(std::string_view text, int n) {
    Divisor x;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        try {
            x.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad divisor value '" + token + "'");
        }
    }
    if (int(x.size()) != n)
        throw std::invalid_argument("divisor has " + std::to_string(x.size()) + " values, expected " +
                                    std::to_string(n));
    return x;
}

}  // namespace rotorkit
