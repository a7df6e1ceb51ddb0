#pragma once

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "raagtc/errors.hpp"

namespace raagtc {

// Hard vertex capacity. Sets are bit-parallel over this width; graphs above
// it are rejected with capacity_error.
constexpr int kMaxVertices = 128;

// A set of vertex indices in [0, kMaxVertices). Canonical serialization is
// the ascending index list.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet from_indices(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    // Full set {0, ..., n-1}.
    static VertexSet full(int n);

    void add(int v) { bits_.set(check(v)); }
    void remove(int v) { bits_.reset(check(v)); }
    bool contains(int v) const { return v >= 0 && v < kMaxVertices && bits_.test(v); }

    int size() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    VertexSet intersect(const VertexSet& o) const {
        VertexSet r;
        r.bits_ = bits_ & o.bits_;
        return r;
    }
    VertexSet unite(const VertexSet& o) const {
        VertexSet r;
        r.bits_ = bits_ | o.bits_;
        return r;
    }
    VertexSet minus(const VertexSet& o) const {
        VertexSet r;
        r.bits_ = bits_ & ~o.bits_;
        return r;
    }
    bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_).none(); }

    // Lowest member, -1 when empty.
    int first() const;
    std::vector<int> indices() const;

    bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }

    // Order on ascending index lists: first differing element decides, a
    // proper prefix sorts first. Gives the deterministic clique order used
    // throughout.
    static bool lex_less(const VertexSet& a, const VertexSet& b);

private:
    static int check(int v) {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("vertex index " + std::to_string(v) +
                                    " outside capacity");
        return v;
    }

    std::bitset<kMaxVertices> bits_;
};

// Finite simple undirected graph; the defining graph of a right-angled Artin
// group. Immutable after construction, safe to share across threads.
class Graph {
public:
    Graph() = default; // empty graph, n = 0

    // Validates: distinct non-empty labels, no self-loops, indices in range.
    // Edge duplicates collapse.
    Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edge_pairs);

    int vertex_count() const { return n_; }
    const std::string& label(int v) const;
    // -1 when the label is unknown.
    int index_of(const std::string& label) const;

    bool adjacent(int u, int v) const;
    const VertexSet& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).size(); }
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    // Edge list as (i, j) with i < j, sorted.
    std::vector<std::pair<int, int>> edges() const;

    // True iff every two distinct members of s are adjacent. The empty set
    // and singletons are cliques. Members outside [0, n) are rejected.
    bool is_clique(const VertexSet& s) const;

    // Members of s must lie in [0, n).
    void check_vertex_set(const VertexSet& s) const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && labels_ == o.labels_ && adj_ == o.adj_;
    }

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
};

enum class GraphFormat { edge_list, dimacs };

// edge_list: one "u v" pair of whitespace-separated vertex names per line,
// '#' starts a comment, a line holding a single name declares an isolated
// vertex. Vertex order is first appearance.
// dimacs: "c" comments, one "p edge N M" header, "e u v" lines with 1-based
// vertices; labels are "1".."N". The header's M must match the number of
// e-lines.
Graph parse_graph(const std::string& text, GraphFormat format);

std::string serialize_edge_list(const Graph& g);

// Canonical emission: {"n":..., "labels":[...], "edges":[[i,j],...]} with
// i < j and edges sorted.
std::string graph_to_json(const Graph& g);

} // namespace raagtc
