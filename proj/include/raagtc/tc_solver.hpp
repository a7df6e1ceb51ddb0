#pragma once

#include <string>
#include <vector>

#include "raagtc/graph.hpp"

namespace raagtc {

enum class Method { exact_search, oracle, recurrence };

const char* method_name(Method m);

// Ordered list of cliques with empty total intersection; a witness for z_r.
// Empty cliques are legitimate members.
struct CliqueSequence {
    std::vector<VertexSet> cliques;

    int total_size() const;
};

// True iff every element is a clique of g and the total intersection is
// empty. The intersection of zero cliques is the full vertex set, so an
// empty sequence is only valid for the 0-vertex graph.
bool valid_clique_sequence(const Graph& g, const CliqueSequence& seq);

struct ZrResult {
    long long r = 0;
    long long value = 0; // z_r(Gamma) = TC_r(H_Gamma)
    CliqueSequence witness;
    Method method = Method::exact_search;
};

struct SolverOptions {
    int threads = 1; // 0 = hardware concurrency
};

// Largest r for which witness-bearing results are materialized. Search
// state and witnesses are O(r); plain values have no such cap.
constexpr long long kMaxWitnessR = 1'000'000;

// Exact z_r by branch-and-bound over multisets of maximal cliques with
// objective sum|M_i| - |intersection M_i|. Deterministic: the witness comes
// from the lexicographically least optimal multiset, with the common
// vertices deleted from the last clique. Results are identical for any
// thread count. r < 2 is rejected.
ZrResult z_r_exact(const Graph& g, long long r, const SolverOptions& opts = {});

// Independent brute force straight from the definition: every r-multiset of
// arbitrary cliques (empty included) with empty total intersection,
// maximizing the plain size sum. No maximal-clique reduction. Refuses
// n > 6 or r > 5 unless override_guard is set.
long long z_r_oracle(const Graph& g, long long r, bool override_guard = false);

// Exact below the anchor max(n, 2), then z_r = z_a + (r-a)c. Same value as
// z_r_exact for every r; the witness pads the anchor witness with copies of
// the first maximum clique.
ZrResult z_r_auto(const Graph& g, long long r, const SolverOptions& opts = {});

// z_r = z_a + (r-a)c applied from the anchor; rejects r below it.
ZrResult z_r_recurrence(const Graph& g, long long r, const SolverOptions& opts = {});

struct ZEntry {
    long long r = 0;
    long long value = 0;
    Method method = Method::exact_search;
};

// z_r for r = 2..r_max: exact up to the anchor max(n, 2), recurrence beyond.
std::vector<ZEntry> z_sequence(const Graph& g, long long r_max,
                               const SolverOptions& opts = {});

// TC_r(H_Gamma) = z_r(Gamma). Value only, so r is bounded only by what fits
// in 64 bits; overflow throws rather than wrapping.
long long tc_raag(const Graph& g, long long r, const SolverOptions& opts = {});

} // namespace raagtc
