#include "rotorkit/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rotorkit/errors.hpp"

namespace rotorkit {

namespace {

// Tarjan SCC; the graph is strongly connected iff there is exactly one
// component. n is small, recursion depth is not a concern.
bool strongly_connected(const std::vector<std::vector<int>>& out) {
    const int n = int(out.size());
    std::vector<int> index(n, -1), lowlink(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0, components = 0;

    std::function<void(int)> visit = [&](int v) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : out[v]) {
            if (index[w] == -1) {
                visit(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            ++components;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
            } while (w != v);
        }
    };

    for (int v = 0; v < n; ++v)
        if (index[v] == -1) visit(v);
    return components == 1;
}

}  // namespace

Digraph::Digraph(std::vector<std::vector<int>> out) : out_(std::move(out)) {
    const int n = int(out_.size());
    if (n < 2) throw std::invalid_argument("digraph needs at least 2 vertices");
    in_degree_.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (out_[v].empty())
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no out-edges");
        for (int h : out_[v]) {
            if (h < 0 || h >= n)
                throw std::invalid_argument("edge head " + std::to_string(h) +
                                            " out of range at vertex " + std::to_string(v));
            if (h == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
            ++in_degree_[h];
            ++edge_count_;
        }
    }
    for (int v = 0; v < n; ++v)
        if (in_degree_[v] == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no in-edges");
    if (!strongly_connected(out_)) throw std::invalid_argument("digraph is not strongly connected");
}

int Digraph::edge_multiplicity(int u, int v) const {
    return int(std::count(out_[u].begin(), out_[u].end(), v));
}

std::vector<int> Digraph::out_neighbors(int v) const {
    std::vector<int> heads = out_[v];
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    return heads;
}

std::vector<int> Digraph::in_neighbors(int v) const {
    std::vector<int> tails;
    for (int u = 0; u < vertex_count(); ++u)
        if (u != v && edge_multiplicity(u, v) > 0) tails.push_back(u);
    return tails;
}

int rotate(const Digraph& d, int v, int k) {
    if (k < 0 || k >= d.out_degree(v)) throw std::out_of_range("rotor index out of range");
    return (k + 1) % d.out_degree(v);
}

IntegerMatrix laplacian(const Digraph& d) {
    const int n = d.vertex_count();
    IntegerMatrix l(n, n);
    for (int i = 0; i < n; ++i) {
        l(i, i) = -d.out_degree(i);
        for (int j = 0; j < n; ++j)
            if (i != j) l(i, j) = d.edge_multiplicity(j, i);
    }
    for (int j = 0; j < n; ++j) {
        Int sum = 0;
        for (int i = 0; i < n; ++i) sum += l(i, j);
        if (sum != 0) throw std::logic_error("laplacian column sum nonzero");
    }
    return l;
}

namespace {

struct LineScanner {
    std::string_view line;
    int line_no;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_space();
        return pos >= line.size();
    }
    int column() const { return int(pos) + 1; }

    long read_int(const char* what) {
        skip_space();
        std::size_t start = pos;
        if (pos < line.size() && line[pos] == '-') ++pos;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && line[start] == '-'))
            throw ParseError(line_no, int(start) + 1, std::string("expected ") + what);
        return std::stol(std::string(line.substr(start, pos - start)));
    }

    void expect(char c) {
        skip_space();
        if (pos >= line.size() || line[pos] != c)
            throw ParseError(line_no, column(), std::string("expected '") + c + "'");
        ++pos;
    }
};

}  // namespace

Digraph parse_digraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;

    long n = -1;
    std::vector<std::vector<int>> out;
    std::vector<bool> seen;
    int lines_seen = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        LineScanner sc{raw, line_no};
        if (sc.at_end()) continue;
        if (raw[sc.pos] == '#') continue;

        if (n < 0) {
            sc.skip_space();
            if (sc.pos >= raw.size() || raw[sc.pos] != 'n')
                throw ParseError(line_no, sc.column(), "expected header 'n <count>'");
            ++sc.pos;
            n = sc.read_int("vertex count");
            if (!sc.at_end()) throw ParseError(line_no, sc.column(), "trailing characters after header");
            if (n < 2) throw ParseError(line_no, 0, "vertex count must be at least 2");
            out.assign(std::size_t(n), {});
            seen.assign(std::size_t(n), false);
            continue;
        }

        long v = sc.read_int("vertex index");
        if (v < 0 || v >= n)
            throw ParseError(line_no, 0, "vertex index " + std::to_string(v) + " out of range");
        sc.expect(':');
        if (seen[std::size_t(v)])
            throw ParseError(line_no, 0, "duplicate line for vertex " + std::to_string(v));
        seen[std::size_t(v)] = true;
        ++lines_seen;
        while (!sc.at_end()) {
            int col = sc.column();
            long h = sc.read_int("edge head");
            if (h < 0 || h >= n)
                throw ParseError(line_no, col, "edge head " + std::to_string(h) + " out of range");
            if (h == v) throw ParseError(line_no, col, "self-loop at vertex " + std::to_string(v));
            out[std::size_t(v)].push_back(int(h));
        }
        if (out[std::size_t(v)].empty())
            throw ParseError(line_no, 0, "vertex " + std::to_string(v) + " has no out-edges");
    }

    if (n < 0) throw ParseError(line_no ? line_no : 1, 0, "missing header 'n <count>'");
    for (long v = 0; v < n; ++v)
        if (!seen[std::size_t(v)])
            throw ParseError(line_no, 0, "missing out-edge line for vertex " + std::to_string(v));
    (void)lines_seen;

    try {
        return Digraph(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, 0, e.what());
    }
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream os;
    os << "n " << d.vertex_count() << '\n';
    for (int v = 0; v < d.vertex_count(); ++v) {
        os << v << ':';
        for (int h : d.out_edges(v)) os << ' ' << h;
        os << '\n';
    }
    return os.str();
}

}  // namespace rotorkit
