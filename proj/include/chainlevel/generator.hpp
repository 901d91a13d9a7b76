#pragma once

#include <optional>
#include <vector>

#include "chainlevel/sequences.hpp"
#include "chainlevel/weights.hpp"

namespace chainlevel {

/// mu' / mu'' tables of a reduced Condition N' sequence, keyed by sequence
/// position (not element identity: x_i = y_j is possible without the table
/// values agreeing).
///   mu_dprime[i] = q^eps(x_i, y_i, ..., x_t, y_t)   for 0 <= i <= t
///   mu_prime[j]  = mu_dprime[j+1] - qdist(eps, x_{j+1}, y_j), mu_prime[t] = 0
struct MuTables {
    std::vector<long long> mu_prime;
    std::vector<long long> mu_dprime;

    long long degree() const { return mu_dprime.front(); }
};

inline MuTables mu_tables(const Poset& p, Epsilon eps, const ZigzagSequence& s) {
    if (!check_condition(p, s, CondVariant::Nprime))
        throw not_reduced("mu_tables: sequence does not satisfy Condition N'");
    int t = s.t();
    MuTables m;
    m.mu_prime.assign(t + 1, 0);
    m.mu_dprime.assign(t + 1, 0);
    for (int i = t; i >= 0; --i) {
        m.mu_dprime[i] = m.mu_prime[i] + p.qdist(eps.value, s.x(i), s.y(i));
        if (i > 0) m.mu_prime[i - 1] = m.mu_dprime[i] - p.qdist(eps.value, s.x(i), s.y(i - 1));
    }
    // reduced-sequence gap; failing it means the caller fed an unreduced sequence
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j <= t; ++j) {
            if (!detail::ext_less(p, s.x(i), s.y(j))) continue;
            if (p.qdist(eps.value, s.x(i), s.y(j)) >= m.mu_dprime[i] - m.mu_prime[j])
                throw not_reduced("mu_tables: sequence is not q^eps-reduced");
        }
    return m;
}

/// One assignment of the iterative construction: after step k the entry at
/// x_{k+1} has been raised to its extremal value.
struct ConstructionStep {
    int k;
    int element;
    int old_value;
    int new_value;
};

struct ConstructionTrace {
    std::vector<int> xi0;
    std::vector<ConstructionStep> steps;
    WeightMap xi_final;
    std::vector<std::vector<int>> witness_chains; // C_0..C_t, maximal chains of P
};

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw construction_invariant_violated(what);
}

// Saturated chain from a to b realizing qdist(eps,a,b); smallest-index
// successor choice makes it deterministic. Endpoints included.
inline std::vector<ExtElem> geodesic(const Poset& p, int eps, ExtElem a, ExtElem b) {
    auto chains = [&](ExtElem u) {
        // next candidates: up-covers in the extension
        std::vector<ExtElem> r;
        if (u.is_bottom()) {
            for_each_bit(p.minimal_mask(), [&](int i) { r.push_back(ExtElem::of(i)); });
        } else if (u.is_elem()) {
            for (int w : p.up_covers(u.idx)) r.push_back(ExtElem::of(w));
            if (p.is_maximal(u.idx)) r.push_back(ExtElem::top());
        }
        return r;
    };
    auto len = [&](ExtElem u, ExtElem v) {
        return eps > 0 ? p.longest_len(u, v) : p.shortest_len(u, v);
    };
    int total = len(a, b);
    require(total >= 0, "geodesic endpoints are not comparable");
    std::vector<ExtElem> path{a};
    ExtElem cur = a;
    for (int step = 0; step < total; ++step) {
        bool found = false;
        for (ExtElem nxt : chains(cur)) {
            int rest = (nxt == b) ? 0 : len(nxt, b);
            if (rest >= 0 && rest == total - step - 1 && p.ext_leq(nxt, b)) {
                path.push_back(nxt);
                cur = nxt;
                found = true;
                break;
            }
        }
        require(found, "geodesic reconstruction failed");
    }
    return path;
}

} // namespace detail

/// The seed map xi_0 of the construction: eps everywhere except at the y's,
/// where the value is mu'(y_i) - max{mu'(y_j) + qdist(eps,y_i,y_j) : y_j > y_i}
/// + eps. Requires t >= 1. When verify is set, the five facts the paper
/// derives for xi_0 are asserted.
inline std::vector<int> xi0(const Poset& p, Epsilon eps, const ZigzagSequence& s,
                            const MuTables& mu, bool verify = true) {
    int t = s.t();
    detail::require(t >= 1, "xi0 needs a nonempty sequence");
    std::vector<int> v(p.size(), eps.value);
    for (int i = 0; i < t; ++i) {
        int z = s.ys[i];
        bool have = false;
        long long best = 0;
        for (int j = 0; j <= t; ++j) {
            if (!detail::ext_less(p, ExtElem::of(z), s.y(j))) continue;
            long long cand = mu.mu_prime[j] + p.qdist(eps.value, ExtElem::of(z), s.y(j));
            if (!have || cand > best) best = cand;
            have = true;
        }
        detail::require(have, "xi0: no y_j above a sequence element"); // y_t = +inf always is
        v[z] = (int)(mu.mu_prime[i] - best + eps.value);
    }
    if (verify) {
        long long d = mu.degree();
        for (int z = 0; z < p.size(); ++z) detail::require(v[z] >= eps.value, "xi0 below eps");
        UpDownProfile prof = weight_profile(p, v);
        for (int i = 0; i < t; ++i)
            detail::require(prof.up[s.ys[i]] == mu.mu_prime[i], "xi0 up-weight != mu'");
        detail::require(max_chain_weight(p, v) <= d - eps.value, "xi0 chain cap violated");
        detail::require(p.qdist(eps.value, ExtElem::bottom(), s.y(0)) + prof.up[s.ys[0]] == d,
                        "xi0 bottom identity violated");
    }
    return v;
}

/// One step of the iteration: raise the entry at x_{k+1} to
/// d - eps - xi'^{+down}(x_{k+1}) - xi'^{+up}(x_{k+1}).
inline std::vector<int> xi_step(const Poset& p, Epsilon eps, int k, const std::vector<int>& xik,
                                const ZigzagSequence& s, const MuTables& mu, bool verify = true) {
    int t = s.t();
    detail::require(0 <= k && k < t, "xi_step index out of range");
    long long d = mu.degree();
    UpDownProfile prof = weight_profile(p, xik);
    int x = s.xs[k];
    std::vector<int> next = xik;
    next[x] = (int)(d - eps.value - prof.strict_down[x] - prof.strict_up[x]);
    if (verify) {
        detail::require(next[x] >= xik[x], "xi_step decreased an entry");
        UpDownProfile np = weight_profile(p, next);
        for (int i = 0; i < t; ++i)
            detail::require(np.up[s.ys[i]] == mu.mu_prime[i], "xi_step up-weight != mu'");
        detail::require(max_chain_weight(p, next) <= d - eps.value, "xi_step chain cap violated");
        for (int i = 0; i <= k + 1; ++i) {
            long long down = i == 0 ? 0 : np.down[s.xs[i - 1]];
            long long up = i == t ? 0 : np.up[s.ys[i]];
            detail::require(down + p.qdist(eps.value, s.x(i), s.y(i)) + up == d,
                            "xi_step saturation identity violated");
        }
    }
    return next;
}

namespace detail {

// Maximal chain through x_i and y_i built from a down-optimal path, a
// qdist-geodesic between them, and an up-optimal path; tight by the
// saturation identity. For i = 0 the lower part degenerates, for i = t the
// upper part does.
inline std::vector<int> witness_chain(const Poset& p, int eps, const std::vector<int>& xi,
                                      const UpDownProfile& prof, ExtElem xe, ExtElem ye) {
    std::vector<int> chain;
    // descend from x toward -inf along a down-weight-optimal path
    if (xe.is_elem()) {
        std::vector<int> down;
        int cur = xe.idx;
        while (!p.is_minimal(cur)) {
            int pick = -1;
            for (int w : p.down_covers(cur))
                if (prof.down[w] == prof.strict_down[cur]) {
                    pick = w;
                    break;
                }
            require(pick >= 0, "witness chain: down path reconstruction failed");
            down.push_back(pick);
            cur = pick;
        }
        chain.assign(down.rbegin(), down.rend());
        chain.push_back(xe.idx);
    }
    // geodesic interior between x and y; must sit at level eps
    std::vector<ExtElem> mid = geodesic(p, eps, xe, ye);
    for (size_t i = 1; i + 1 < mid.size(); ++i) {
        require(mid[i].is_elem(), "witness chain: geodesic left the poset");
        require(xi[mid[i].idx] == eps, "witness chain: geodesic interior not at eps");
        chain.push_back(mid[i].idx);
    }
    // ascend from y toward +inf along an up-weight-optimal path
    if (ye.is_elem()) {
        chain.push_back(ye.idx);
        int cur = ye.idx;
        while (!p.is_maximal(cur)) {
            int pick = -1;
            for (int w : p.up_covers(cur))
                if (prof.up[w] == prof.strict_up[cur]) {
                    pick = w;
                    break;
                }
            require(pick >= 0, "witness chain: up path reconstruction failed");
            chain.push_back(pick);
            cur = pick;
        }
    }
    return chain;
}

} // namespace detail

/// Runs the full construction for a q^eps-reduced Condition N' sequence and
/// returns the trace: xi_0, the per-step assignments, the final weight map
/// of degree q^eps(x_0,y_0,...,x_t,y_t), and tight witness chains C_0..C_t.
inline ConstructionTrace build_generator_traced(const Poset& p, Epsilon eps,
                                                const ZigzagSequence& s, bool verify = true) {
    ConstructionTrace tr;
    if (s.empty()) {
        long long d = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
        tr.xi0.assign(p.size(), eps.value);
        tr.xi_final = WeightMap{tr.xi0, d};
        std::vector<ExtElem> geo =
            detail::geodesic(p, eps.value, ExtElem::bottom(), ExtElem::top());
        std::vector<int> c0;
        for (size_t i = 1; i + 1 < geo.size(); ++i) c0.push_back(geo[i].idx);
        tr.witness_chains.push_back(std::move(c0));
        return tr;
    }
    MuTables mu = mu_tables(p, eps, s);
    long long d = mu.degree();
    int t = s.t();
    std::vector<int> cur = xi0(p, eps, s, mu, verify);
    tr.xi0 = cur;
    for (int k = 0; k < t; ++k) {
        std::vector<int> next = xi_step(p, eps, k, cur, s, mu, verify);
        int x = s.xs[k];
        tr.steps.push_back(ConstructionStep{k, x, cur[x], next[x]});
        cur = std::move(next);
    }
    tr.xi_final = WeightMap{cur, d};
    UpDownProfile prof = weight_profile(p, cur);
    for (int i = 0; i <= t; ++i) {
        std::vector<int> ci = detail::witness_chain(p, eps.value, cur, prof, s.x(i), s.y(i));
        Mask m = 0;
        for (int z : ci) m |= Mask(1) << z;
        detail::require(chain_sum(cur, m) == d - eps.value, "witness chain is not tight");
        tr.witness_chains.push_back(std::move(ci));
    }
    return tr;
}

/// The weight map whose monomial is a generator of omega^eps with degree
/// q^eps(x_0,y_0,...,x_t,y_t). For the empty sequence this is the constant
/// eps map of degree qdist(eps,-inf,+inf).
inline WeightMap build_generator(const Poset& p, Epsilon eps, const ZigzagSequence& s,
                                 bool verify = true) {
    return build_generator_traced(p, eps, s, verify).xi_final;
}

} // namespace chainlevel
