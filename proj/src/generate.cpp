#include "rotorkit/generate.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace rotorkit {

namespace {

// Unbiased value in [0, bound) by rejection. std::uniform_int_distribution is
// not reproducible across standard libraries, this is.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

Digraph directed_cycle(int n) {
    if (n < 2) throw std::invalid_argument("directed_cycle needs n >= 2");
    std::vector<std::vector<int>> out(std::size_t(n));
    for (int v = 0; v < n; ++v) out[std::size_t(v)] = {(v + 1) % n};
    return Digraph(std::move(out));
}

Digraph bidirected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 2) throw std::invalid_argument("bidirected needs n >= 2");
    std::vector<std::vector<int>> out(std::size_t(n));
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("bidirected edge endpoint out of range");
        if (a == b) throw std::invalid_argument("bidirected input contains a loop");
        out[std::size_t(a)].push_back(b);
        out[std::size_t(b)].push_back(a);
    }
    return Digraph(std::move(out));
}

Digraph random_digraph(int n, int extra_edges, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_digraph needs n >= 2");
    if (extra_edges < 0) throw std::invalid_argument("extra_edges must be nonnegative");
    std::mt19937_64 rng(seed);

    // Fisher-Yates with the portable sampler
    std::vector<int> perm(std::size_t(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[std::size_t(i)], perm[uniform_below(rng, std::uint64_t(i) + 1)]);

    std::vector<std::vector<int>> out(std::size_t(n));
    for (int i = 0; i < n; ++i)
        out[std::size_t(perm[std::size_t(i)])].push_back(perm[std::size_t((i + 1) % n)]);

    for (int e = 0; e < extra_edges; ++e) {
        int tail = int(uniform_below(rng, std::uint64_t(n)));
        int head = int(uniform_below(rng, std::uint64_t(n) - 1));
        if (head >= tail) ++head;
        out[std::size_t(tail)].push_back(head);
    }
    return Digraph(std::move(out));
}

Digraph fixture(std::string_view name) {
    if (name == "G1") return Digraph({{1}, {0}});
    if (name == "G2") return directed_cycle(3);
    if (name == "G3") return Digraph({{1}, {0, 2}, {0}});
    if (name == "G4") return bidirected(3, {{0, 1}, {1, 2}, {2, 0}});
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

const std::vector<std::string_view>& fixture_names() {
    static const std::vector<std::string_view> names = {"G1", "G2", "G3", "G4"};
    return names;
}

}  // namespace rotorkit
