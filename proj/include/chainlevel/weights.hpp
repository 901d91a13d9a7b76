#pragma once

#include <functional>
#include <vector>

#include "chainlevel/poset.hpp"

namespace chainlevel {

/// Integer weight map xi on P united with -infinity. deg is xi(-inf), the
/// grading degree of the Laurent monomial T^xi.
struct WeightMap {
    std::vector<int> values; // indexed by element index
    long long deg = 0;

    friend bool operator==(const WeightMap&, const WeightMap&) = default;
};

inline WeightMap constant_map(const Poset& p, int v, long long deg) {
    return WeightMap{std::vector<int>(p.size(), v), deg};
}

inline long long chain_sum(const std::vector<int>& xi, Mask b) {
    long long s = 0;
    for_each_bit(b, [&](int i) { s += xi[i]; });
    return s;
}
inline long long chain_sum(const WeightMap& xi, Mask b) { return chain_sum(xi.values, b); }

/// Path-maximum weights toward +inf / -inf for every element:
///   up(z)        = xi^{+up}(z),   max total weight of saturated chains z...max, z included
///   strict_up(z) = xi'^{+up}(z),  same with z excluded
/// and the mirrored down variants toward -inf.
struct UpDownProfile {
    std::vector<int> up, strict_up, down, strict_down;
};

inline UpDownProfile weight_profile(const Poset& p, const std::vector<int>& xi) {
    int n = p.size();
    UpDownProfile r;
    r.up.assign(n, 0);
    r.strict_up.assign(n, 0);
    r.down.assign(n, 0);
    r.strict_down.assign(n, 0);
    const auto& topo = p.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        int best = 0;
        if (!p.is_maximal(v)) {
            bool first = true;
            for (int w : p.up_covers(v)) {
                if (first || r.up[w] > best) best = r.up[w];
                first = false;
            }
        }
        r.strict_up[v] = best;
        r.up[v] = xi[v] + best;
    }
    for (int v : topo) {
        int best = 0;
        if (!p.is_minimal(v)) {
            bool first = true;
            for (int w : p.down_covers(v)) {
                if (first || r.down[w] > best) best = r.down[w];
                first = false;
            }
        }
        r.strict_down[v] = best;
        r.down[v] = xi[v] + best;
    }
    return r;
}

inline int up_weight(const Poset& p, const std::vector<int>& xi, int z) {
    return weight_profile(p, xi).up.at(z);
}
inline int strict_up_weight(const Poset& p, const std::vector<int>& xi, int z) {
    return weight_profile(p, xi).strict_up.at(z);
}
inline int down_weight(const Poset& p, const std::vector<int>& xi, int z) {
    return weight_profile(p, xi).down.at(z);
}
inline int strict_down_weight(const Poset& p, const std::vector<int>& xi, int z) {
    return weight_profile(p, xi).strict_down.at(z);
}

/// M = max of chain_sum over all maximal chains, computed as the maximum of
/// xi^{+up} over minimal elements.
inline long long max_chain_weight(const Poset& p, const std::vector<int>& xi) {
    UpDownProfile prof = weight_profile(p, xi);
    long long m = 0;
    bool first = true;
    for_each_bit(p.minimal_mask(), [&](int v) {
        if (first || prof.up[v] > m) m = prof.up[v];
        first = false;
    });
    return m;
}
inline long long max_chain_weight(const Poset& p, const WeightMap& xi) {
    return max_chain_weight(p, xi.values);
}

/// Membership in S^(n): xi >= n pointwise on P and deg >= M + n.
/// For n = +1/-1 this is membership of T^xi in the canonical/anticanonical
/// ideal; for n = 0 membership in the Ehrhart ring itself.
inline bool in_s_n(const Poset& p, const WeightMap& xi, long long n) {
    for (int v : xi.values)
        if (v < n) return false;
    return xi.deg >= max_chain_weight(p, xi.values) + n;
}

/// Ids (indices into p.maximal_chains()) of the chains C with xi+(C) = m.
inline std::vector<int> level_chains(const Poset& p, const std::vector<int>& xi, long long m) {
    std::vector<int> ids;
    const auto& masks = p.maximal_chain_masks();
    for (size_t c = 0; c < masks.size(); ++c)
        if (chain_sum(xi, masks[c]) == m) ids.push_back((int)c);
    return ids;
}
inline std::vector<int> level_chains(const Poset& p, const WeightMap& xi, long long m) {
    return level_chains(p, xi.values, m);
}

} // namespace chainlevel

template <>
struct std::hash<chainlevel::WeightMap> {
    std::size_t operator()(const chainlevel::WeightMap& w) const noexcept {
        std::size_t h = std::hash<long long>()(w.deg);
        for (int v : w.values) h = h * 1000003u + (std::size_t)(v + 1024);
        return h;
    }
};
