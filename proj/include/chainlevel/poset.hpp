#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chainlevel/errors.hpp"

namespace chainlevel {

/// Element subsets are bitsets over the dense element indices.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

template <class F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        int i = __builtin_ctzll(m);
        m &= m - 1;
        f(i);
    }
}

/// Element of the extended poset P^±: -infinity, a poset element, or +infinity.
struct ExtElem {
    enum class Kind : std::uint8_t { bottom, elem, top };
    Kind kind = Kind::elem;
    int idx = -1;

    static ExtElem bottom() { return {Kind::bottom, -1}; }
    static ExtElem top() { return {Kind::top, -1}; }
    static ExtElem of(int i) { return {Kind::elem, i}; }

    bool is_bottom() const { return kind == Kind::bottom; }
    bool is_top() const { return kind == Kind::top; }
    bool is_elem() const { return kind == Kind::elem; }

    friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// A finite poset over named elements, with the derived order, the cover
/// relation (transitive reduction of the input pairs), quasi-distances on
/// the bottom/top extension, and the list of maximal chains.
///
/// Elements are indexed densely in input order; all set arithmetic uses
/// bitsets over those indices. Instances are immutable after build() and
/// safe to share across threads.
class Poset {
public:
    static constexpr int hard_cap = 64;

    static Poset build(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& covers,
                       int max_elements = 16) {
        if (elements.empty()) throw empty_poset("poset needs at least one element");
        if (max_elements > hard_cap) max_elements = hard_cap;
        if ((int)elements.size() > max_elements)
            throw poset_too_large("poset has " + std::to_string(elements.size()) +
                                  " elements, cap is " + std::to_string(max_elements));
        Poset p;
        p.names_ = elements;
        p.n_ = (int)elements.size();
        for (int i = 0; i < p.n_; ++i) {
            if (!p.index_.emplace(elements[i], i).second)
                throw unknown_element("duplicate element id: " + elements[i]);
        }
        // input digraph, deduplicated
        std::vector<std::vector<int>> adj(p.n_);
        std::vector<Mask> adj_mask(p.n_, 0);
        for (const auto& [a, b] : covers) {
            int ia = p.index(a), ib = p.index(b);
            if (ia == ib) throw cycle_error("cover pair (" + a + "," + b + ") is a self-loop");
            if (!(adj_mask[ia] >> ib & 1)) {
                adj_mask[ia] |= Mask(1) << ib;
                adj[ia].push_back(ib);
            }
        }
        p.topo_ = topo_sort(p.n_, adj);
        // strict up-sets by reverse topological sweep
        p.up_.assign(p.n_, 0);
        for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it)
            for (int w : adj[*it]) p.up_[*it] |= (Mask(1) << w) | p.up_[w];
        p.down_.assign(p.n_, 0);
        for (int v = 0; v < p.n_; ++v)
            for_each_bit(p.up_[v], [&](int w) { p.down_[w] |= Mask(1) << v; });
        // transitive reduction; redundant input pairs are recorded
        p.up_covers_.assign(p.n_, {});
        p.down_covers_.assign(p.n_, {});
        p.up_cover_mask_.assign(p.n_, 0);
        p.down_cover_mask_.assign(p.n_, 0);
        for (int a = 0; a < p.n_; ++a) {
            for (int b : adj[a]) {
                if (p.up_[a] & p.down_[b])
                    p.removed_.emplace_back(p.names_[a], p.names_[b]);
                else {
                    p.up_covers_[a].push_back(b);
                    p.up_cover_mask_[a] |= Mask(1) << b;
                    p.down_covers_[b].push_back(a);
                    p.down_cover_mask_[b] |= Mask(1) << a;
                }
            }
        }
        for (int v = 0; v < p.n_; ++v) {
            std::sort(p.up_covers_[v].begin(), p.up_covers_[v].end());
            std::sort(p.down_covers_[v].begin(), p.down_covers_[v].end());
        }
        p.all_ = p.n_ == 64 ? ~Mask(0) : (Mask(1) << p.n_) - 1;
        p.minimal_ = p.maximal_ = 0;
        for (int v = 0; v < p.n_; ++v) {
            if (p.down_covers_[v].empty()) p.minimal_ |= Mask(1) << v;
            if (p.up_covers_[v].empty()) p.maximal_ |= Mask(1) << v;
        }
        p.compute_ext_distances();
        p.compute_maximal_chains();
        return p;
    }

    int size() const { return n_; }
    Mask all_mask() const { return all_; }
    const std::string& name(int i) const { return names_[i]; }

    int index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw unknown_element("unknown element id: " + id);
        return it->second;
    }
    bool has_element(const std::string& id) const { return index_.count(id) != 0; }

    bool less(int a, int b) const { return up_[a] >> b & 1; }
    bool leq(int a, int b) const { return a == b || less(a, b); }
    bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
    bool covers_rel(int a, int b) const { return up_cover_mask_[a] >> b & 1; } // a is covered by b

    Mask up_set(int i) const { return up_[i]; }     // strictly above i
    Mask down_set(int i) const { return down_[i]; } // strictly below i
    const std::vector<int>& up_covers(int i) const { return up_covers_[i]; }
    const std::vector<int>& down_covers(int i) const { return down_covers_[i]; }

    Mask minimal_mask() const { return minimal_; }
    Mask maximal_mask() const { return maximal_; }
    bool is_minimal(int i) const { return minimal_ >> i & 1; }
    bool is_maximal(int i) const { return maximal_ >> i & 1; }

    /// A linear extension of the order (used as the DP sweep order).
    const std::vector<int>& topo_order() const { return topo_; }

    /// Input cover pairs that were transitively implied and dropped.
    const std::vector<std::pair<std::string, std::string>>& removed_redundant_covers() const {
        return removed_;
    }

    // ---- extended order P^± -------------------------------------------

    bool ext_leq(ExtElem a, ExtElem b) const {
        if (a == b) return true;
        if (a.is_bottom() || b.is_top()) return true;
        if (a.is_top() || b.is_bottom()) return false;
        return leq(a.idx, b.idx);
    }

    /// n-th quasi-distance on P^±: max over saturated chains from x to y of
    /// n times the chain length. Throws not_comparable unless x <= y.
    long long qdist(long long n, ExtElem x, ExtElem y) const {
        int a = ext_index(x), b = ext_index(y);
        if (lmax_[a][b] < 0)
            throw not_comparable("qdist: " + ext_name(x) + " is not below " + ext_name(y));
        if (n > 0) return n * lmax_[a][b];
        if (n < 0) return n * lmin_[a][b];
        return 0;
    }

    /// Longest / shortest saturated chain length from x to y, or -1 if x <= y fails.
    int longest_len(ExtElem x, ExtElem y) const { return lmax_[ext_index(x)][ext_index(y)]; }
    int shortest_len(ExtElem x, ExtElem y) const { return lmin_[ext_index(x)][ext_index(y)]; }

    /// All saturated chains from x to y in P^±, endpoints included,
    /// in lexicographic order by element index.
    std::vector<std::vector<ExtElem>> saturated_chains_between(ExtElem x, ExtElem y) const {
        int a = ext_index(x), b = ext_index(y);
        if (lmax_[a][b] < 0)
            throw not_comparable("saturated_chains_between: " + ext_name(x) + " is not below " +
                                 ext_name(y));
        std::vector<std::vector<ExtElem>> out;
        std::vector<int> cur{a};
        chains_dfs(a, b, cur, out);
        return out;
    }

    // ---- maximal chains of P ------------------------------------------

    /// Maximal chains of P, each sorted increasing, in lexicographic order
    /// by element index.
    const std::vector<std::vector<int>>& maximal_chains() const { return max_chains_; }
    const std::vector<Mask>& maximal_chain_masks() const { return max_chain_masks_; }

    /// All antichains (including the empty one), as bitsets, in
    /// lexicographic subset order.
    std::vector<Mask> antichains() const {
        std::vector<Mask> out;
        antichain_dfs(0, 0, out);
        return out;
    }

    /// Minimum cardinality of a maximal chain through element z.
    int min_chain_card_through(int z) const { return min_card_through_[z]; }

    std::string ext_name(ExtElem e) const {
        if (e.is_bottom()) return "-inf";
        if (e.is_top()) return "+inf";
        return names_[e.idx];
    }

private:
    Poset() = default;

    static std::vector<int> topo_sort(int n, const std::vector<std::vector<int>>& adj) {
        std::vector<int> indeg(n, 0), order;
        std::vector<bool> done(n, false);
        for (int v = 0; v < n; ++v)
            for (int w : adj[v]) ++indeg[w];
        for (int step = 0; step < n; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!done[v] && indeg[v] == 0) {
                    pick = v;
                    break;
                }
            if (pick < 0) throw cycle_error("cover digraph contains a directed cycle");
            done[pick] = true;
            order.push_back(pick);
            for (int w : adj[pick]) --indeg[w];
        }
        return order;
    }

    int ext_index(ExtElem e) const {
        if (e.is_bottom()) return n_;
        if (e.is_top()) return n_ + 1;
        if (e.idx < 0 || e.idx >= n_) throw unknown_element("element index out of range");
        return e.idx;
    }

    std::vector<int> ext_up_covers(int v) const {
        if (v == n_) { // bottom
            std::vector<int> r;
            for_each_bit(minimal_, [&](int i) { r.push_back(i); });
            return r;
        }
        if (v == n_ + 1) return {};
        std::vector<int> r = up_covers_[v];
        if (is_maximal(v)) r.push_back(n_ + 1);
        return r;
    }

    void compute_ext_distances() {
        int m = n_ + 2;
        lmax_.assign(m, std::vector<int>(m, -1));
        lmin_.assign(m, std::vector<int>(m, -1));
        // reverse topological order of the extension: top, topo reversed, bottom
        std::vector<int> rev{n_ + 1};
        for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) rev.push_back(*it);
        rev.push_back(n_);
        for (int s : rev) {
            lmax_[s][s] = lmin_[s][s] = 0;
            for (int c : ext_up_covers(s)) {
                for (int t = 0; t < m; ++t) {
                    if (lmax_[c][t] < 0) continue;
                    int cand = lmax_[c][t] + 1;
                    if (cand > lmax_[s][t]) lmax_[s][t] = cand;
                    int candm = lmin_[c][t] + 1;
                    if (lmin_[s][t] < 0 || candm < lmin_[s][t]) lmin_[s][t] = candm;
                }
            }
        }
    }

    void compute_maximal_chains() {
        std::vector<int> cur;
        std::vector<int> mins;
        for_each_bit(minimal_, [&](int i) { mins.push_back(i); });
        for (int s : mins) {
            cur.push_back(s);
            max_chain_dfs(s, cur);
            cur.pop_back();
        }
        min_card_through_.assign(n_, 0);
        for (int z = 0; z < n_; ++z) {
            int best = n_ + 1;
            for (size_t c = 0; c < max_chains_.size(); ++c)
                if (max_chain_masks_[c] >> z & 1)
                    best = std::min<int>(best, (int)max_chains_[c].size());
            min_card_through_[z] = best;
        }
    }

    void max_chain_dfs(int v, std::vector<int>& cur) {
        if (up_covers_[v].empty()) {
            max_chains_.push_back(cur);
            Mask m = 0;
            for (int z : cur) m |= Mask(1) << z;
            max_chain_masks_.push_back(m);
            return;
        }
        for (int w : up_covers_[v]) {
            cur.push_back(w);
            max_chain_dfs(w, cur);
            cur.pop_back();
        }
    }

    void chains_dfs(int v, int target, std::vector<int>& cur,
                    std::vector<std::vector<ExtElem>>& out) const {
        if (v == target) {
            std::vector<ExtElem> chain;
            for (int u : cur)
                chain.push_back(u == n_ ? ExtElem::bottom()
                                        : (u == n_ + 1 ? ExtElem::top() : ExtElem::of(u)));
            out.push_back(std::move(chain));
            return;
        }
        for (int w : ext_up_covers(v)) {
            if (w != target && lmax_[w][target] < 0) continue;
            cur.push_back(w);
            chains_dfs(w, target, cur, out);
            cur.pop_back();
        }
    }

    void antichain_dfs(int start, Mask cur, std::vector<Mask>& out) const {
        out.push_back(cur);
        for (int i = start; i < n_; ++i) {
            bool ok = true;
            for_each_bit(cur, [&](int j) {
                if (comparable(i, j)) ok = false;
            });
            if (ok) antichain_dfs(i + 1, cur | (Mask(1) << i), out);
        }
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    int n_ = 0;
    Mask all_ = 0, minimal_ = 0, maximal_ = 0;
    std::vector<Mask> up_, down_, up_cover_mask_, down_cover_mask_;
    std::vector<std::vector<int>> up_covers_, down_covers_;
    std::vector<int> topo_;
    std::vector<std::pair<std::string, std::string>> removed_;
    std::vector<std::vector<int>> lmax_, lmin_;
    std::vector<std::vector<int>> max_chains_;
    std::vector<Mask> max_chain_masks_;
    std::vector<int> min_card_through_;
};

/// Convenience builder from name pairs.
inline Poset build_poset(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         int max_elements = 16) {
    return Poset::build(elements, covers, max_elements);
}

} // namespace chainlevel
