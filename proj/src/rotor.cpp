#include "rotorkit/rotor.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rotorkit/algebra.hpp"

namespace rotorkit {

void validate_state(const Digraph& d, const ChipRotorState& s) {
    const int n = d.vertex_count();
    if (s.chip < 0 || s.chip >= n) throw std::invalid_argument("chip position out of range");
    if (int(s.rotors.size()) != n)
        throw std::invalid_argument("rotor configuration has wrong length");
    for (int v = 0; v < n; ++v)
        if (s.rotors[std::size_t(v)] < 0 || s.rotors[std::size_t(v)] >= d.out_degree(v))
            throw std::invalid_argument("rotor index out of range at vertex " + std::to_string(v));
}

ChipRotorState step(const Digraph& d, const ChipRotorState& s) {
    validate_state(d, s);
    ChipRotorState next = s;
    int w = s.chip;
    next.rotors[std::size_t(w)] = rotate(d, w, s.rotors[std::size_t(w)]);
    next.chip = d.head(w, next.rotors[std::size_t(w)]);
    return next;
}

namespace {

int rotor_head(const Digraph& d, const ChipRotorState& s, int v) {
    return d.head(v, s.rotors[std::size_t(v)]);
}

// union-find, just enough for weak connectivity of the rotor graph
int uf_find(std::vector<int>& parent, int x) {
    while (parent[std::size_t(x)] != x) {
        parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
        x = parent[std::size_t(x)];
    }
    return x;
}

}  // namespace

bool is_unicycle(const Digraph& d, const ChipRotorState& s) {
    validate_state(d, s);
    const int n = d.vertex_count();

    std::vector<int> parent(std::size_t(n));
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    for (int v = 0; v < n; ++v) {
        int a = uf_find(parent, v), b = uf_find(parent, rotor_head(d, s, v));
        if (a != b) {
            parent[std::size_t(a)] = b;
            --components;
        }
    }
    if (components != 1) return false;

    // single cycle; the chip is on it iff the rotor walk from the chip
    // returns to the chip
    int cur = s.chip;
    for (int i = 0; i < n; ++i) {
        cur = rotor_head(d, s, cur);
        if (cur == s.chip) return true;
    }
    return false;
}

ClassifyResult classify_by_simulation(const Digraph& d, const ChipRotorState& s, std::size_t cap) {
    validate_state(d, s);
    std::set<ChipRotorState> visited;
    ChipRotorState cur = s;
    std::int64_t steps = 0;
    while (!visited.contains(cur)) {
        if (visited.size() >= cap)
            throw CapExceeded("state space exceeds cap of " + std::to_string(cap));
        visited.insert(cur);
        cur = step(d, cur);
        ++steps;
    }
    return {cur == s ? Recurrence::recurrent : Recurrence::transient, steps};
}

OrbitSummary run_period(const Digraph& d, const ChipRotorState& s, std::size_t cap) {
    if (!is_unicycle(d, s))
        throw std::invalid_argument(
            "run_period requires a unicycle start; recurrent states are exactly the unicycles");

    const int n = d.vertex_count();
    OrbitSummary summary;
    summary.visits.assign(std::size_t(n), 0);
    summary.turns.assign(std::size_t(n), 0);
    summary.edge_flow.resize(std::size_t(n));
    for (int v = 0; v < n; ++v) summary.edge_flow[std::size_t(v)].assign(std::size_t(d.out_degree(v)), 0);

    ChipRotorState cur = s;
    do {
        if (std::size_t(summary.length) >= cap)
            throw CapExceeded("period exceeds cap of " + std::to_string(cap));
        int w = cur.chip;
        cur = step(d, cur);
        ++summary.length;
        ++summary.visits[std::size_t(w)];
        ++summary.edge_flow[std::size_t(w)][std::size_t(cur.rotors[std::size_t(w)])];
    } while (cur != s);

    // cross-check the counts against the period vector; both sides are exact
    PeriodVector period = period_vector(d);
    Int expected_length = 0;
    for (int v = 0; v < n; ++v) {
        const Int& p = period[std::size_t(v)];
        const int deg = d.out_degree(v);
        if (summary.visits[std::size_t(v)] % deg != 0)
            throw std::logic_error("visit count at vertex " + std::to_string(v) +
                                   " is not a whole number of rotor turns");
        summary.turns[std::size_t(v)] = summary.visits[std::size_t(v)] / deg;
        if (Int(summary.turns[std::size_t(v)]) != p)
            throw std::logic_error("rotor turns at vertex " + std::to_string(v) +
                                   " disagree with the period vector");
        for (int k = 0; k < deg; ++k)
            if (Int(summary.edge_flow[std::size_t(v)][std::size_t(k)]) != p)
                throw std::logic_error("edge flow at vertex " + std::to_string(v) +
                                       " disagrees with the period vector");
        expected_length += p * deg;
    }
    if (Int(summary.length) != expected_length)
        throw std::logic_error("period length disagrees with sum of period * out_degree");
    return summary;
}

namespace {

// odometer over rotor configurations in lexicographic order; returns false
// once the space is exhausted
bool next_config(const Digraph& d, std::vector<int>& idx) {
    for (int v = d.vertex_count() - 1; v >= 0; --v) {
        if (++idx[std::size_t(v)] < d.out_degree(v)) return true;
        idx[std::size_t(v)] = 0;
    }
    return false;
}

Int state_space_size(const Digraph& d) {
    Int total = d.vertex_count();
    for (int v = 0; v < d.vertex_count(); ++v) total *= d.out_degree(v);
    return total;
}

}  // namespace

std::vector<ChipRotorState> enumerate_unicycles(const Digraph& d, std::size_t cap) {
    if (state_space_size(d) > Int(std::uint64_t(cap)))
        throw CapExceeded("state space " + state_space_size(d).get_str() + " exceeds cap of " +
                          std::to_string(cap));
    std::vector<ChipRotorState> unicycles;
    const int n = d.vertex_count();
    for (int chip = 0; chip < n; ++chip) {
        std::vector<int> idx(std::size_t(n), 0);
        do {
            ChipRotorState s{chip, idx};
            if (is_unicycle(d, s)) unicycles.push_back(std::move(s));
        } while (next_config(d, idx));
    }
    return unicycles;
}

std::vector<std::vector<ChipRotorState>> orbit_partition(const Digraph& d, std::size_t cap) {
    std::vector<ChipRotorState> unicycles = enumerate_unicycles(d, cap);
    std::set<ChipRotorState> remaining(unicycles.begin(), unicycles.end());

    std::vector<std::vector<ChipRotorState>> orbits;
    while (!remaining.empty()) {
        // the global minimum is also the minimum of its own orbit
        ChipRotorState rep = *remaining.begin();
        remaining.erase(remaining.begin());
        std::vector<ChipRotorState> orbit{rep};
        for (ChipRotorState cur = step(d, rep); cur != rep; cur = step(d, cur)) {
            if (remaining.erase(cur) == 0)
                throw std::logic_error("rotor step left the unicycle set; step is not a permutation");
            orbit.push_back(cur);
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool is_arborescence(const Digraph& d, const Arborescence& a) {
    const int n = d.vertex_count();
    if (a.root < 0 || a.root >= n || int(a.edge_index.size()) != n) return false;
    if (a.edge_index[std::size_t(a.root)] != -1) return false;
    for (int v = 0; v < n; ++v) {
        if (v == a.root) continue;
        int k = a.edge_index[std::size_t(v)];
        if (k < 0 || k >= d.out_degree(v)) return false;
    }
    for (int v = 0; v < n; ++v) {
        if (v == a.root) continue;
        int cur = v;
        for (int hops = 0; cur != a.root; ++hops) {
            if (hops >= n) return false;  // walked into a cycle
            cur = d.head(cur, a.edge_index[std::size_t(cur)]);
        }
    }
    return true;
}

std::vector<Arborescence> enumerate_arborescences(const Digraph& d, int root, std::size_t cap) {
    const int n = d.vertex_count();
    if (root < 0 || root >= n) throw std::out_of_range("root out of range");
    Int choices = 1;
    for (int v = 0; v < n; ++v)
        if (v != root) choices *= d.out_degree(v);
    if (choices > Int(std::uint64_t(cap)))
        throw CapExceeded("edge-choice space " + choices.get_str() + " exceeds cap of " +
                          std::to_string(cap));

    std::vector<Arborescence> found;
    Arborescence a{root, std::vector<int>(std::size_t(n), 0)};
    a.edge_index[std::size_t(root)] = -1;
    for (;;) {
        if (is_arborescence(d, a)) found.push_back(a);
        int v = n - 1;
        for (; v >= 0; --v) {
            if (v == root) continue;
            if (++a.edge_index[std::size_t(v)] < d.out_degree(v)) break;
            a.edge_index[std::size_t(v)] = 0;
        }
        if (v < 0) break;
    }
    return found;
}

ChipRotorState arborescence_to_unicycle(const Digraph& d, const Arborescence& a, int k) {
    if (!is_arborescence(d, a)) throw std::invalid_argument("not a spanning in-arborescence");
    if (k < 0 || k >= d.out_degree(a.root))
        throw std::out_of_range("out-edge index at the root out of range");
    ChipRotorState s{a.root, a.edge_index};
    s.rotors[std::size_t(a.root)] = k;
    if (!is_unicycle(d, s))
        throw std::logic_error("arborescence plus root edge did not form a unicycle");
    return s;
}

std::pair<Arborescence, int> unicycle_to_arborescence(const Digraph& d, const ChipRotorState& s,
                                                      int root) {
    validate_state(d, s);
    if (s.chip != root)
        throw std::invalid_argument("chip is at vertex " + std::to_string(s.chip) + ", not at root " +
                                    std::to_string(root));
    if (!is_unicycle(d, s)) throw std::invalid_argument("state is not a unicycle");
    Arborescence a{root, s.rotors};
    a.edge_index[std::size_t(root)] = -1;
    if (!is_arborescence(d, a))
        throw std::logic_error("stripping the root rotor did not leave an arborescence");
    return {std::move(a), s.rotors[std::size_t(root)]};
}

std::string format_state(const ChipRotorState& s) {
    std::ostringstream os;
    os << "chip@" << s.chip << " rotors=";
    for (std::size_t i = 0; i < s.rotors.size(); ++i) {
        if (i) os << ',';
        os << s.rotors[i];
    }
    return os.str();
}

std::vector<int> parse_rotor_indices(std::string_view text) {
    std::vector<int> idx;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad rotor index '" + token + "'");
        idx.push_back(value);
    }
    if (idx.empty()) throw std::invalid_argument("empty rotor index list");
    return idx;
}

std::string to_dot(const Digraph& d, const ChipRotorState& s) {
    validate_state(d, s);
    std::ostringstream os;
    os << "digraph rotor_state {\n";
    for (int v = 0; v < d.vertex_count(); ++v)
        os << "  " << v << " [shape=" << (v == s.chip ? "doublecircle" : "circle") << "];\n";
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int k = 0; k < d.out_degree(v); ++k) {
            bool rotor = (k == s.rotors[std::size_t(v)]);
            os << "  " << v << " -> " << d.head(v, k) << " [color="
               << (rotor ? "black, style=solid, penwidth=2" : "gray") << "];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace rotorkit
