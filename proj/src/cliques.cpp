#include "raagtc/cliques.hpp"

#include <algorithm>

namespace raagtc {

namespace {

// Peel minimum-degree vertices, lowest index first on ties.
std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        for (int u : g.neighbors(best).indices())
            if (!removed[u]) --deg[u];
    }
    return order;
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: the candidate covering most of P, lowest index on ties.
    int pivot = -1, covered = -1;
    for (int u : p.unite(x).indices()) {
        int c = p.intersect(g.neighbors(u)).size();
        if (c > covered) {
            covered = c;
            pivot = u;
        }
    }
    for (int v : p.minus(g.neighbors(pivot)).indices()) {
        VertexSet rv = r;
        rv.add(v);
        bron_kerbosch(g, rv, p.intersect(g.neighbors(v)), x.intersect(g.neighbors(v)), out);
        p.remove(v);
        x.add(v);
    }
}

} // namespace

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {VertexSet{}};
    std::vector<VertexSet> out;
    auto order = degeneracy_order(g);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    for (int v : order) {
        VertexSet p, x;
        for (int u : g.neighbors(v).indices())
            (rank[u] > rank[v] ? p : x).add(u);
        VertexSet r;
        r.add(v);
        bron_kerbosch(g, r, p, x, out);
    }
    std::sort(out.begin(), out.end(), VertexSet::lex_less);
    return out;
}

int max_clique_size(const Graph& g) {
    int best = 0;
    for (const auto& m : enumerate_maximal_cliques(g)) best = std::max(best, m.size());
    return best;
}

} // namespace raagtc
