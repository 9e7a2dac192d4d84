#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rotorkit/matrix.hpp"

namespace rotorkit {

// Immutable strongly connected multidigraph with a fixed cyclic order of the
// out-edges at every vertex. Parallel edges appear as repeated heads; the
// listing order IS the rotor order, so an edge is identified by (tail, index)
// rather than by its endpoints.
//
// Construction validates: n >= 2, no self-loops, out-degree >= 1 everywhere,
// strong connectivity. Loops are rejected because a loop at v breaks the
// zero-column-sum property of the Laplacian.
class Digraph {
public:
    // out[v] lists the heads of v's out-edges in rotor order.
    explicit Digraph(std::vector<std::vector<int>> out);

    int vertex_count() const { return int(out_.size()); }
    int edge_count() const { return edge_count_; }

    int out_degree(int v) const { return int(out_[v].size()); }
    int in_degree(int v) const { return in_degree_[v]; }

    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    int head(int v, int k) const { return out_[v][k]; }

    // number of parallel edges u -> v
    int edge_multiplicity(int u, int v) const;

    std::vector<int> out_neighbors(int v) const;  // distinct heads, ascending
    std::vector<int> in_neighbors(int v) const;   // distinct tails, ascending

private:
    std::vector<std::vector<int>> out_;
    std::vector<int> in_degree_;
    int edge_count_ = 0;
};

// Index of the edge following (v, k) in the cyclic rotor order at v.
int rotate(const Digraph& d, int v, int k);

// Laplacian with L(i,i) = -out_degree(i) and L(i,j) = multiplicity of j -> i
// for i != j. Every column sums to zero.
IntegerMatrix laplacian(const Digraph& d);

// Graph file format: '#' comment lines, then "n <count>", then one line per
// vertex "v: h1 h2 ... hk" with heads in rotor order, vertices 0-indexed.
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& d);

}  // namespace rotorkit
