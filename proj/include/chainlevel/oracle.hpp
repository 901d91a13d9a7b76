#pragma once

#include <vector>

#include "chainlevel/poset.hpp"
#include "chainlevel/weights.hpp"

namespace chainlevel {

/// Brute-force ground truth over dilated order/chain polytopes.
///
/// lattice_points(p, order, n): all f with 0 <= f <= n and x < y => f(x) >= f(y).
/// lattice_points(p, chain, n): all f >= 0 with every maximal-chain sum <= n.
enum class OraclePolytope { order, chain };

namespace detail {

template <class Emit>
void order_points_dfs(const Poset& p, long long n, std::vector<int>& f, size_t pos,
                      long long& ops, long long budget, Emit&& emit) {
    const auto& topo = p.topo_order();
    if (pos == topo.size()) {
        emit(f);
        return;
    }
    int v = topo[pos];
    long long ub = n;
    for (int w : p.down_covers(v)) ub = std::min<long long>(ub, f[w]);
    for (long long val = 0; val <= ub; ++val) {
        if (++ops > budget) throw box_too_large("order polytope enumeration budget exceeded");
        f[v] = (int)val;
        order_points_dfs(p, n, f, pos + 1, ops, budget, emit);
    }
    f[v] = 0;
}

template <class Emit>
void chain_points_dfs(const Poset& p, long long n, long long floor_value, std::vector<int>& f,
                      int z, std::vector<long long>& chain_sums, long long& ops,
                      long long budget, Emit&& emit) {
    if (z == p.size()) {
        emit(f);
        return;
    }
    const auto& masks = p.maximal_chain_masks();
    Mask done = (z + 1 >= 64) ? ~Mask(0) : (Mask(1) << (z + 1)) - 1;
    long long ub = n;
    for (size_t c = 0; c < masks.size(); ++c)
        if (masks[c] >> z & 1) {
            // remaining entries on the chain contribute at least floor_value each
            long long rest = floor_value * popcount(masks[c] & ~done);
            ub = std::min(ub, n - chain_sums[c] - rest);
        }
    for (long long val = floor_value; val <= ub; ++val) {
        if (++ops > budget) throw box_too_large("chain polytope enumeration budget exceeded");
        f[z] = (int)val;
        for (size_t c = 0; c < masks.size(); ++c)
            if (masks[c] >> z & 1) chain_sums[c] += val;
        chain_points_dfs(p, n, floor_value, f, z + 1, chain_sums, ops, budget, emit);
        for (size_t c = 0; c < masks.size(); ++c)
            if (masks[c] >> z & 1) chain_sums[c] -= val;
    }
    f[z] = 0;
}

} // namespace detail

template <class Emit>
void for_each_lattice_point(const Poset& p, OraclePolytope kind, long long n, Emit&& emit,
                            long long budget = 100'000'000) {
    if (n < 0) throw param_out_of_range("dilation must be nonnegative");
    long long ops = 0;
    std::vector<int> f(p.size(), 0);
    if (kind == OraclePolytope::order) {
        detail::order_points_dfs(p, n, f, 0, ops, budget, emit);
    } else {
        std::vector<long long> sums(p.maximal_chain_masks().size(), 0);
        detail::chain_points_dfs(p, n, 0, f, 0, sums, ops, budget, emit);
    }
}

inline std::vector<std::vector<int>> lattice_points(const Poset& p, OraclePolytope kind,
                                                    long long n,
                                                    long long budget = 100'000'000) {
    std::vector<std::vector<int>> out;
    for_each_lattice_point(p, kind, n, [&](const std::vector<int>& f) { out.push_back(f); },
                           budget);
    return out;
}

inline long long count_lattice_points(const Poset& p, OraclePolytope kind, long long n,
                                      long long budget = 100'000'000) {
    long long cnt = 0;
    for_each_lattice_point(p, kind, n, [&](const std::vector<int>&) { ++cnt; }, budget);
    return cnt;
}

/// Lattice points of the open dilate: f >= 1 pointwise, maximal-chain sums
/// <= n-1. These are exactly the restrictions to P of the degree-n slice of
/// S^(1).
inline std::vector<std::vector<int>> interior_points(const Poset& p, long long n,
                                                     long long budget = 100'000'000) {
    if (n < 1) throw param_out_of_range("interior_points needs n >= 1");
    std::vector<std::vector<int>> out;
    long long ops = 0;
    std::vector<int> f(p.size(), 1);
    std::vector<long long> sums(p.maximal_chain_masks().size(), 0);
    detail::chain_points_dfs(p, n - 1, 1, f, 0, sums, ops, budget,
                             [&](const std::vector<int>& g) { out.push_back(g); });
    return out;
}

struct HilbertReport {
    std::vector<long long> order_counts; // index = dilation
    std::vector<long long> chain_counts;
    bool equal = true;
};

/// Ehrhart counts of nO(P) and nC(P) for 0 <= n <= nmax; Stanley's transfer
/// theorem says the two sequences agree.
inline HilbertReport hilbert_compare(const Poset& p, long long nmax,
                                     long long budget = 100'000'000) {
    HilbertReport rep;
    for (long long n = 0; n <= nmax; ++n) {
        rep.order_counts.push_back(count_lattice_points(p, OraclePolytope::order, n, budget));
        rep.chain_counts.push_back(count_lattice_points(p, OraclePolytope::chain, n, budget));
        if (rep.order_counts.back() != rep.chain_counts.back()) rep.equal = false;
    }
    return rep;
}

/// Undirected graph on 0..n-1 as adjacency bitsets.
struct Graph {
    int n = 0;
    std::vector<Mask> adj;

    void add_edge(int a, int b) {
        adj[a] |= Mask(1) << b;
        adj[b] |= Mask(1) << a;
    }
    bool has_edge(int a, int b) const { return adj[a] >> b & 1; }
};

inline Graph make_graph(int n) {
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    return g;
}

/// G(P): edges between distinct comparable elements. Stable sets of G(P)
/// are exactly the antichains of P.
inline Graph comparability_graph(const Poset& p) {
    Graph g = make_graph(p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            if (p.comparable(a, b)) g.add_edge(a, b);
    return g;
}

/// All stable (independent) sets including the empty one, in lexicographic
/// subset order.
inline std::vector<Mask> stable_sets(const Graph& g) {
    std::vector<Mask> out;
    auto rec = [&](auto&& self, int start, Mask cur) -> void {
        out.push_back(cur);
        for (int i = start; i < g.n; ++i) {
            if (g.adj[i] & cur) continue;
            self(self, i + 1, cur | (Mask(1) << i));
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// True iff every odd cycle of length >= 5 has a triangular chord (an edge
/// between two vertices at distance two along the cycle). Exhaustive simple
/// cycle enumeration, desk scale only.
inline bool odd_cycle_chord_check(const Graph& g) {
    if (g.n > 12) throw graph_too_large("odd cycle check capped at 12 vertices");
    bool ok = true;
    std::vector<int> path;
    // enumerate simple cycles whose smallest vertex is the start of the walk
    auto dfs = [&](auto&& self, int start, int v, Mask visited) -> void {
        if (!ok) return;
        for_each_bit(g.adj[v], [&](int w) {
            if (!ok) return;
            if (w == start && path.size() >= 3) {
                if (path.size() % 2 == 1 && path.size() >= 5) {
                    int k = (int)path.size();
                    bool chord = false;
                    for (int i = 0; i < k && !chord; ++i)
                        if (g.has_edge(path[i], path[(i + 2) % k])) chord = true;
                    if (!chord) ok = false;
                }
                return;
            }
            if (w <= start || (visited >> w & 1)) return;
            path.push_back(w);
            self(self, start, w, visited | (Mask(1) << w));
            path.pop_back();
        });
    };
    for (int s = 0; s < g.n && ok; ++s) {
        path.assign(1, s);
        dfs(dfs, s, s, Mask(1) << s);
    }
    return ok;
}

} // namespace chainlevel
