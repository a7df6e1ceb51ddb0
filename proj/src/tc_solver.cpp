#include "raagtc/tc_solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <thread>

#include "raagtc/checked_int.hpp"
#include "raagtc/cliques.hpp"

namespace raagtc {

const char* method_name(Method m) {
    switch (m) {
    case Method::exact_search: return "exact-search";
    case Method::oracle: return "oracle";
    case Method::recurrence: return "recurrence";
    }
    return "unknown";
}

int CliqueSequence::total_size() const {
    int s = 0;
    for (const auto& c : cliques) s += c.size();
    return s;
}

bool valid_clique_sequence(const Graph& g, const CliqueSequence& seq) {
    VertexSet inter = g.all_vertices();
    for (const auto& c : seq.cliques) {
        if (!g.is_clique(c)) return false;
        inter = inter.intersect(c);
    }
    return inter.empty();
}

namespace {

// Maximal cliques with the size tables the bound needs.
struct CliquePool {
    std::vector<VertexSet> cliques; // lex order; the multiset index order
    std::vector<int> sizes;
    std::vector<int> suffix_max;     // max size over indices >= i
    std::vector<int> first_max_from; // least j >= i with sizes[j] == suffix_max[i]
    VertexSet universe;

    explicit CliquePool(const Graph& g)
        : cliques(enumerate_maximal_cliques(g)), universe(g.all_vertices()) {
        int m = static_cast<int>(cliques.size());
        sizes.resize(m);
        suffix_max.resize(m);
        first_max_from.resize(m);
        for (int i = 0; i < m; ++i) sizes[i] = cliques[i].size();
        for (int i = m - 1; i >= 0; --i) {
            int tail = (i + 1 < m) ? suffix_max[i + 1] : 0;
            suffix_max[i] = std::max(sizes[i], tail);
            first_max_from[i] = (sizes[i] == suffix_max[i]) ? i : first_max_from[i + 1];
        }
    }
};

struct BranchBest {
    long long value = -1;
    std::vector<int> picks; // nondecreasing clique indices, length r
};

// Depth-first search over nondecreasing index sequences rooted at a fixed
// first clique, maximizing sum(sizes) - |intersection|.
//
// Completions are visited in lexicographic order and the incumbent advances
// only on strict improvement, so local.picks ends up the lex-least optimal
// multiset of this subtree. Once the running intersection is empty the best
// completion is closed-form: repeat the first maximum-size clique available
// at or after the current index. floor carries the best value found by
// other subtrees; pruning against it is strict, so cross-subtree ties
// survive and the final merge does not depend on scheduling.
void search_root(const CliquePool& pool, long long r, int root,
                 const std::atomic<long long>& floor, BranchBest& local) {
    struct Frame {
        int next;
        VertexSet inter;
        long long sum;
    };
    const int m = static_cast<int>(pool.cliques.size());
    std::vector<Frame> stack;
    std::vector<int> path;

    // Returns true when the node was expanded onto the stack.
    auto enter = [&](int lo, const VertexSet& inter, long long sum) -> bool {
        long long depth = static_cast<long long>(path.size());
        if (inter.empty()) {
            long long val = sum + (r - depth) * pool.suffix_max[lo];
            if (val > local.value) {
                local.value = val;
                local.picks = path;
                local.picks.resize(static_cast<size_t>(r), pool.first_max_from[lo]);
            }
            return false;
        }
        if (depth == r) {
            long long val = sum - inter.size();
            if (val > local.value) {
                local.value = val;
                local.picks = path;
            }
            return false;
        }
        stack.push_back({lo, inter, sum});
        return true;
    };

    path.push_back(root);
    if (!enter(root, pool.universe.intersect(pool.cliques[root]), pool.sizes[root]))
        path.pop_back();
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next >= m) {
            stack.pop_back();
            path.pop_back();
            continue;
        }
        long long depth = static_cast<long long>(stack.size());
        int j = f.next++;
        long long child_sum = f.sum + pool.sizes[j];
        long long ub = child_sum + (r - depth - 1) * pool.suffix_max[j];
        if (ub <= local.value || ub < floor.load(std::memory_order_relaxed)) continue;
        VertexSet child_inter = f.inter.intersect(pool.cliques[j]);
        path.push_back(j);
        if (!enter(j, child_inter, child_sum)) path.pop_back();
        // f may dangle here: enter can grow the stack.
    }
}

BranchBest search(const CliquePool& pool, long long r, int threads) {
    const int m = static_cast<int>(pool.cliques.size());
    int nthreads = threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency())
                                : threads;
    nthreads = std::clamp(nthreads, 1, m);

    std::atomic<long long> floor{-1};
    std::atomic<int> next_root{0};
    std::mutex mu;
    BranchBest merged;
    int merged_root = INT_MAX;

    auto worker = [&] {
        for (;;) {
            int root = next_root.fetch_add(1);
            if (root >= m) return;
            BranchBest local;
            search_root(pool, r, root, floor, local);
            long long cur = floor.load();
            while (local.value > cur && !floor.compare_exchange_weak(cur, local.value)) {
            }
            std::lock_guard<std::mutex> lk(mu);
            if (local.value > merged.value ||
                (local.value == merged.value && root < merged_root)) {
                merged = std::move(local);
                merged_root = root;
            }
        }
    };

    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool_threads;
        pool_threads.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool_threads.emplace_back(worker);
        for (auto& t : pool_threads) t.join();
    }
    return merged;
}

long long anchor_of(const Graph& g) {
    return std::max<long long>(g.vertex_count(), 2);
}

void require_r(long long r) {
    if (r < 2) throw argument_error("r must be at least 2, got " + std::to_string(r));
}

ZrResult recurrence_from_anchor(const Graph& g, long long r, const SolverOptions& opts) {
    if (r > kMaxWitnessR)
        throw capacity_error("witness for r = " + std::to_string(r) +
                             " exceeds the materialization limit " +
                             std::to_string(kMaxWitnessR));
    long long a = anchor_of(g);
    ZrResult base = z_r_exact(g, a, opts);
    long long c = max_clique_size(g);
    ZrResult out;
    out.r = r;
    out.value = checked_add(base.value, checked_mul(r - a, c));
    out.method = Method::recurrence;
    out.witness = std::move(base.witness);
    // Padding with a maximum clique keeps the intersection empty and adds c
    // per copy; the first size-c clique in enumeration order keeps it
    // deterministic.
    VertexSet pad;
    for (const auto& mclique : enumerate_maximal_cliques(g))
        if (mclique.size() == c) {
            pad = mclique;
            break;
        }
    out.witness.cliques.resize(static_cast<size_t>(r), pad);
    return out;
}

} // namespace

ZrResult z_r_exact(const Graph& g, long long r, const SolverOptions& opts) {
    require_r(r);
    if (r > kMaxWitnessR)
        throw capacity_error("exact search materializes r = " + std::to_string(r) +
                             " cliques; limit is " + std::to_string(kMaxWitnessR) +
                             "; use the recurrence method");
    CliquePool pool(g);
    BranchBest best = search(pool, r, opts.threads);

    ZrResult out;
    out.r = r;
    out.value = best.value;
    out.method = Method::exact_search;
    VertexSet common = g.all_vertices();
    out.witness.cliques.reserve(best.picks.size());
    for (int idx : best.picks) {
        out.witness.cliques.push_back(pool.cliques[idx]);
        common = common.intersect(pool.cliques[idx]);
    }
    // Every picked clique contains each common vertex, so deleting the whole
    // common set from the last clique empties the total intersection at a
    // cost of exactly |common|.
    out.witness.cliques.back() = out.witness.cliques.back().minus(common);
    return out;
}

long long z_r_oracle(const Graph& g, long long r, bool override_guard) {
    require_r(r);
    const int n = g.vertex_count();
    if (!override_guard && (n > 6 || r > 5))
        throw size_guard_error(
            "oracle enumeration is exponential; guarded to n <= 6, r <= 5 "
            "(got n = " + std::to_string(n) + ", r = " + std::to_string(r) +
            "); override to run anyway");
    if (n > 20)
        throw capacity_error("oracle enumerates all vertex subsets; n <= 20 required");
    if (r > 1000)
        throw capacity_error("oracle recursion depth; r <= 1000 required");

    std::vector<VertexSet> cliques;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (1ull << v)) s.add(v);
        if (g.is_clique(s)) cliques.push_back(s);
    }

    long long best = -1;
    const int m = static_cast<int>(cliques.size());
    // Plain enumeration of every nondecreasing index sequence. Straight from
    // the definition: keep only sequences whose total intersection is empty,
    // maximize the plain size sum.
    auto rec = [&](auto&& self, int lo, long long depth, const VertexSet& inter,
                   long long sum) -> void {
        if (depth == r) {
            if (inter.empty()) best = std::max(best, sum);
            return;
        }
        for (int j = lo; j < m; ++j)
            self(self, j, depth + 1, inter.intersect(cliques[j]), sum + cliques[j].size());
    };
    rec(rec, 0, 0, g.all_vertices(), 0);
    return best;
}

ZrResult z_r_auto(const Graph& g, long long r, const SolverOptions& opts) {
    require_r(r);
    if (r <= anchor_of(g)) return z_r_exact(g, r, opts);
    return recurrence_from_anchor(g, r, opts);
}

ZrResult z_r_recurrence(const Graph& g, long long r, const SolverOptions& opts) {
    require_r(r);
    long long a = anchor_of(g);
    if (r < a)
        throw argument_error("recurrence z_r = z_a + (r-a)c applies for r >= " +
                             std::to_string(a) + ", got r = " + std::to_string(r));
    return recurrence_from_anchor(g, r, opts);
}

std::vector<ZEntry> z_sequence(const Graph& g, long long r_max, const SolverOptions& opts) {
    if (r_max < 2)
        throw argument_error("r_max must be at least 2, got " + std::to_string(r_max));
    if (r_max > kMaxWitnessR)
        throw capacity_error("z_sequence materializes " + std::to_string(r_max - 1) +
                             " entries; limit is " + std::to_string(kMaxWitnessR));
    long long a = anchor_of(g);
    std::vector<ZEntry> out;
    long long z_anchor = 0;
    for (long long r = 2; r <= std::min(a, r_max); ++r) {
        long long v = z_r_exact(g, r, opts).value;
        out.push_back({r, v, Method::exact_search});
        if (r == a) z_anchor = v;
    }
    if (r_max > a) {
        long long c = max_clique_size(g);
        for (long long r = a + 1; r <= r_max; ++r)
            out.push_back({r, checked_add(z_anchor, checked_mul(r - a, c)),
                           Method::recurrence});
    }
    return out;
}

long long tc_raag(const Graph& g, long long r, const SolverOptions& opts) {
    require_r(r);
    long long a = anchor_of(g);
    if (r <= a) return z_r_exact(g, r, opts).value;
    // Value only: no witness to materialize, so r is bounded only by the
    // checked 64-bit arithmetic.
    long long base = z_r_exact(g, a, opts).value;
    return checked_add(base, checked_mul(r - a, max_clique_size(g)));
}

} // namespace raagtc
