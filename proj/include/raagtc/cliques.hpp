#pragma once

#include <vector>

#include "raagtc/graph.hpp"

namespace raagtc {

// All maximal cliques, each exactly once, sorted by VertexSet::lex_less.
// For the 0-vertex graph the list is the single empty clique. Bron-Kerbosch
// with pivoting over a degeneracy vertex ordering.
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g);

// c(Gamma): size of a largest clique. 0 for the empty graph, 1 for any
// edgeless graph on n >= 1 vertices.
int max_clique_size(const Graph& g);

} // namespace raagtc
