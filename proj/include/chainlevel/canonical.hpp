#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "chainlevel/generator.hpp"
#include "chainlevel/sequences.hpp"
#include "chainlevel/weights.hpp"

namespace chainlevel {

enum class GenMethod { antichain, decomposition, sequence };

/// Outcome of a generator test. When the verdict is negative the blocking
/// antichain is reported; when the sequence method confirms a generator it
/// also returns the reduced sequence and the tight chains C_0..C_t.
struct GeneratorVerdict {
    bool is_generator = false;
    GenMethod method = GenMethod::antichain;
    std::optional<Mask> blocking_antichain;
    std::optional<ZigzagSequence> witness_sequence;
    std::vector<std::vector<int>> witness_chains;
};

namespace detail {

inline void require_in_ideal(const Poset& p, Epsilon eps, const WeightMap& xi) {
    if (!in_s_n(p, xi, eps.value))
        throw not_in_ideal("weight map is not in S^(eps), so T^xi is outside omega^eps");
}

// Antichains inside `allowed`, lexicographic subset order, empty set first.
// Callback returns false to stop.
template <class F>
bool for_each_antichain_in(const Poset& p, Mask allowed, F&& f) {
    struct Rec {
        const Poset& p;
        F& f;
        bool operator()(Mask cur, Mask cand) {
            if (!f(cur)) return false;
            Mask rest = cand;
            while (rest) {
                int i = __builtin_ctzll(rest);
                rest &= rest - 1;
                Mask next_cand = rest & ~p.up_set(i) & ~p.down_set(i);
                if (!(*this)(cur | (Mask(1) << i), next_cand)) return false;
            }
            return true;
        }
    } rec{p, f};
    return rec(0, allowed);
}

} // namespace detail

/// Test of Lemma "not a gen": T^xi fails to be a generator exactly when some
/// antichain A (possibly empty) meets every tight chain C in C_xi^[d-eps] in
/// an element with xi > eps. Only antichains inside {xi > eps} can qualify.
inline GeneratorVerdict is_generator_antichain(const Poset& p, Epsilon eps, const WeightMap& xi) {
    detail::require_in_ideal(p, eps, xi);
    GeneratorVerdict v;
    v.method = GenMethod::antichain;
    std::vector<int> tight = level_chains(p, xi, xi.deg - eps.value);
    if (tight.empty()) {
        v.is_generator = false;
        v.blocking_antichain = Mask(0);
        return v;
    }
    Mask big = 0;
    for (int z = 0; z < p.size(); ++z)
        if (xi.values[z] > eps.value) big |= Mask(1) << z;
    const auto& masks = p.maximal_chain_masks();
    bool found = false;
    detail::for_each_antichain_in(p, big, [&](Mask a) {
        for (int c : tight)
            if (!(masks[c] & a)) return true; // chain left uncovered, try next antichain
        v.blocking_antichain = a;
        found = true;
        return false;
    });
    v.is_generator = !found;
    return v;
}

/// Ground-truth oracle from the standard grading: T^xi is not a generator
/// exactly when xi = chi_{A u {-inf}} + xi2 with A an antichain and
/// xi2 in S^(eps).
inline GeneratorVerdict is_generator_decomposition(const Poset& p, Epsilon eps,
                                                   const WeightMap& xi) {
    detail::require_in_ideal(p, eps, xi);
    GeneratorVerdict v;
    v.method = GenMethod::decomposition;
    // subtracting 1 at an entry equal to eps always leaves S^(eps), so only
    // antichains inside {xi > eps} can yield a valid decomposition
    Mask big = 0;
    for (int z = 0; z < p.size(); ++z)
        if (xi.values[z] > eps.value) big |= Mask(1) << z;
    bool found = false;
    detail::for_each_antichain_in(p, big, [&](Mask a) {
        WeightMap rest{xi.values, xi.deg - 1};
        for_each_bit(a, [&](int z) { --rest.values[z]; });
        if (in_s_n(p, rest, eps.value)) {
            v.blocking_antichain = a;
            found = true;
            return false;
        }
        return true;
    });
    v.is_generator = !found;
    return v;
}

/// Decision through the closure construction of Lemma "gen nec": either a
/// blocking antichain max(Y) covers all tight chains, or a tight chain that
/// escapes it yields a q^eps-reduced Condition N' sequence with chains
/// C_0..C_t witnessing generator-hood.
inline GeneratorVerdict generator_witness_sequence(const Poset& p, Epsilon eps,
                                                   const WeightMap& xi) {
    detail::require_in_ideal(p, eps, xi);
    GeneratorVerdict v;
    v.method = GenMethod::sequence;
    long long d = xi.deg;
    std::vector<int> tight = level_chains(p, xi, d - eps.value);
    const auto& chains = p.maximal_chains();
    const auto& masks = p.maximal_chain_masks();
    if (tight.empty()) {
        v.blocking_antichain = Mask(0);
        return v;
    }
    auto is_big = [&](int z) { return xi.values[z] > eps.value; };
    // empty sequence: some tight chain sits entirely at level eps
    for (int c : tight) {
        bool all_eps = true;
        for (int z : chains[c])
            if (is_big(z)) all_eps = false;
        if (all_eps) {
            v.is_generator = true;
            v.witness_sequence = ZigzagSequence{};
            v.witness_chains.push_back(chains[c]);
            return v;
        }
    }
    // closure: Y_0, X_1, Y_1, ... with first-entry stages and witnesses
    int n = p.size();
    std::vector<int> y_stage(n, -1), x_stage(n, -1);
    struct YWitness {
        int from_x = -1; // -1 for stage 0
        int chain = -1;
    };
    std::vector<YWitness> y_wit(n);
    for (int c : tight) {
        for (int z : chains[c])
            if (is_big(z)) {
                if (y_stage[z] < 0) {
                    y_stage[z] = 0;
                    y_wit[z] = YWitness{-1, c};
                }
                break;
            }
    }
    for (int stage = 1;; ++stage) {
        bool grew = false;
        for (int x = 0; x < n; ++x) {
            if (x_stage[x] >= 0) continue;
            bool reach = false;
            for_each_bit(p.up_set(x), [&](int y) {
                if (y_stage[y] >= 0 && y_stage[y] <= stage - 1) reach = true;
            });
            if (reach) {
                x_stage[x] = stage;
                grew = true;
            }
        }
        for (int c : tight) {
            const auto& ch = chains[c];
            for (size_t i = 0; i < ch.size(); ++i) {
                int x = ch[i];
                if (x_stage[x] < 0 || x_stage[x] > stage) continue;
                for (size_t j = i + 1; j < ch.size(); ++j) {
                    int y = ch[j];
                    if (!is_big(y)) continue;
                    if (y_stage[y] < 0) {
                        y_stage[y] = stage;
                        y_wit[y] = YWitness{x, c};
                        grew = true;
                    }
                    break;
                }
            }
        }
        if (!grew) break;
    }
    // A = max(Y); if it covers every tight chain, T^xi is not a generator
    Mask ymask = 0;
    for (int z = 0; z < n; ++z)
        if (y_stage[z] >= 0) ymask |= Mask(1) << z;
    Mask a = 0;
    for_each_bit(ymask, [&](int z) {
        if (!(p.up_set(z) & ymask)) a |= Mask(1) << z;
    });
    int escape = -1;
    for (int c : tight)
        if (!(masks[c] & a)) {
            escape = c;
            break;
        }
    if (escape < 0) {
        v.blocking_antichain = a;
        return v;
    }
    // extract the sequence from the escaping chain
    int xt = -1;
    for (int z : chains[escape])
        if (is_big(z)) xt = z; // max big element of the chain
    detail::require(xt >= 0 && x_stage[xt] >= 1, "closure walk lost the escaping chain");
    int t = x_stage[xt];
    ZigzagSequence seq;
    seq.ys.assign(t, -1);
    seq.xs.assign(t, -1);
    std::vector<int> cseq(t + 1, -1);
    seq.xs[t - 1] = xt;
    cseq[t] = escape;
    for (int k = t - 1; k >= 0; --k) {
        int xk1 = seq.xs[k];
        int pick = -1;
        for_each_bit(p.up_set(xk1), [&](int y) {
            if (pick < 0 && y_stage[y] >= 0 && y_stage[y] <= k) pick = y;
        });
        detail::require(pick >= 0, "closure walk found no y above x");
        seq.ys[k] = pick;
        cseq[k] = y_wit[pick].chain;
        if (k > 0) {
            seq.xs[k - 1] = y_wit[pick].from_x;
            detail::require(seq.xs[k - 1] >= 0, "closure walk lost an x witness");
        }
    }
    detail::require(check_condition(p, seq, CondVariant::Nprime),
                    "extracted sequence violates Condition N'");
    detail::require(is_reduced(p, eps, seq), "extracted sequence is not reduced");
    v.is_generator = true;
    v.witness_sequence = seq;
    for (int i = 0; i <= t; ++i) v.witness_chains.push_back(chains[cseq[i]]);
    return v;
}

/// Step of Lemma "dec1": from a generator of degree d > qdist(eps,-inf,+inf),
/// decrement at -inf and at each element that tops the big part of some
/// tight chain; the result is a generator of degree d-1.
inline WeightMap degree_decrement(const Poset& p, Epsilon eps, const WeightMap& xi) {
    detail::require_in_ideal(p, eps, xi);
    long long d0 = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
    if (xi.deg == d0) throw at_minimal_degree("generator already has the minimal degree");
    if (!is_generator_decomposition(p, eps, xi).is_generator)
        throw not_generator("degree_decrement needs a generator of omega^eps");
    std::vector<int> tight = level_chains(p, xi, xi.deg - eps.value);
    const auto& chains = p.maximal_chains();
    WeightMap out{xi.values, xi.deg - 1};
    for (int c : tight) {
        int top_big = -1;
        for (int z : chains[c])
            if (xi.values[z] > eps.value) top_big = z;
        detail::require(top_big >= 0, "tight chain with no entry above eps at degree > d0");
        if (out.values[top_big] == xi.values[top_big]) --out.values[top_big];
    }
    detail::require(in_s_n(p, out, eps.value), "decremented map left S^(eps)");
    detail::require(is_generator_decomposition(p, eps, out).is_generator,
                    "decremented map is not a generator");
    return out;
}

enum class SpectrumMethod { formula, bruteforce };
enum class SentinelStatus { verified_empty, skipped_budget };

/// Degrees of the generators of omega^eps, with one witness per degree.
/// Formula method: the interval [d0, dmax] witnessed constructively
/// (build_generator at dmax, then degree_decrement downward). Brute force:
/// per-degree enumeration of the candidate box, generator-hood decided by
/// the decomposition oracle. The sentinel degrees d0-1 and dmax+1 are
/// exhausted when the budget allows it and must then contain no generator.
struct DegreeSpectrum {
    int eps = 1;
    long long d0 = 0;
    long long dmax = 0;
    std::vector<long long> degrees;
    std::map<long long, WeightMap> witnesses;
    SentinelStatus below = SentinelStatus::verified_empty;
    SentinelStatus above = SentinelStatus::verified_empty;
};

struct SpectrumOptions {
    long long budget = 50'000'000; // DFS node budget per degree
    int threads = 1;
};

namespace detail {

// Exhaustive walk of the degree-d candidate box with chain-cap pruning.
// Candidates are visited by increasing support size r (number of entries
// strictly above eps, each enumerated in descending value order): generators
// concentrate their surplus on few elements, so realized degrees surface a
// witness long before the plateau of spread-out candidates. test() sees each
// complete candidate; returning true stops the walk. `exhausted` reports
// whether the whole box was covered within the node budget.
class BoxWalker {
public:
    BoxWalker(const Poset& p, int eps, long long d, long long budget)
        : p_(p), eps_(eps), d_(d), budget_(budget) {
        int n = p_.size();
        ub_.resize(n);
        for (int z = 0; z < n; ++z)
            ub_[z] = d_ - eps_ - (long long)eps_ * (p_.min_chain_card_through(z) - 1);
        const auto& masks = p_.maximal_chain_masks();
        chain_sum_.resize(masks.size());
        for (size_t c = 0; c < masks.size(); ++c)
            chain_sum_[c] = (long long)eps_ * popcount(masks[c]); // all-eps baseline
        values_.assign(n, eps_);
    }

    bool box_nonempty() const {
        for (int z = 0; z < p_.size(); ++z)
            if (ub_[z] < eps_) return false;
        return true;
    }

    template <class Test>
    bool run(Test&& test, bool& exhausted) {
        found_ = false;
        ok_ = true;
        // raising entries only increases chain sums, so an infeasible
        // all-eps baseline empties the whole box
        if (!box_nonempty() || !caps_ok()) {
            exhausted = true;
            return false;
        }
        for (int r = 0; r <= p_.size() && ok_ && !found_; ++r) dfs(0, r, test);
        exhausted = ok_;
        return found_;
    }

    const std::vector<int>& values() const { return values_; }

private:
    bool caps_ok() const {
        for (size_t c = 0; c < chain_sum_.size(); ++c)
            if (chain_sum_[c] > d_ - eps_) return false;
        return true;
    }

    // choose the raised positions from z upward; raised entries carry values
    // in [eps+1, ub], everything else stays at eps
    template <class Test>
    void dfs(int z, int raised_left, Test& test) {
        if (found_ || !ok_) return;
        if (--budget_ < 0) {
            ok_ = false;
            return;
        }
        if (raised_left == 0) {
            if (test(values_)) found_ = true;
            return;
        }
        if (p_.size() - z < raised_left) return;
        for (int pos = z; pos <= p_.size() - raised_left; ++pos) {
            const auto& masks = p_.maximal_chain_masks();
            for (long long v = ub_[pos]; v > eps_; --v) {
                bool feasible = true;
                for (size_t c = 0; c < masks.size() && feasible; ++c)
                    if ((masks[c] >> pos & 1) && chain_sum_[c] + v - eps_ > d_ - eps_)
                        feasible = false;
                if (!feasible) continue; // smaller v may still fit
                values_[pos] = (int)v;
                for (size_t c = 0; c < masks.size(); ++c)
                    if (masks[c] >> pos & 1) chain_sum_[c] += v - eps_;
                dfs(pos + 1, raised_left - 1, test);
                for (size_t c = 0; c < masks.size(); ++c)
                    if (masks[c] >> pos & 1) chain_sum_[c] -= v - eps_;
                values_[pos] = eps_;
                if (found_ || !ok_) return;
            }
        }
    }

    const Poset& p_;
    int eps_;
    long long d_;
    long long budget_;
    std::vector<long long> ub_;
    std::vector<long long> chain_sum_;
    std::vector<int> values_;
    bool found_ = false, ok_ = true;
};

// Searches the degree-d box for a generator. Outcome: witness found,
// verified empty, or budget exhausted.
enum class BoxOutcome { found, empty, out_of_budget };

inline BoxOutcome find_generator_at_degree(const Poset& p, Epsilon eps, long long d,
                                           const SpectrumOptions& opts, WeightMap& out) {
    // cheap first probe: the constant-eps map (the minimal-degree generator)
    WeightMap flat = constant_map(p, eps.value, d);
    if (in_s_n(p, flat, eps.value) && is_generator_decomposition(p, eps, flat).is_generator) {
        out = flat;
        return BoxOutcome::found;
    }
    auto test = [&](const std::vector<int>& vals) {
        WeightMap cand{vals, d};
        if (level_chains(p, cand, d - eps.value).empty()) return false; // no tight chain
        return is_generator_decomposition(p, eps, cand).is_generator;
    };
    BoxWalker walker(p, eps.value, d, opts.budget);
    bool exhausted = false;
    if (walker.run(test, exhausted)) {
        out = WeightMap{walker.values(), d};
        return BoxOutcome::found;
    }
    return exhausted ? BoxOutcome::empty : BoxOutcome::out_of_budget;
}

} // namespace detail

inline DegreeSpectrum degree_spectrum(const Poset& p, Epsilon eps,
                                      SpectrumMethod method = SpectrumMethod::formula,
                                      const SpectrumOptions& opts = {}) {
    DegreeSpectrum sp;
    sp.eps = eps.value;
    sp.d0 = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
    sp.dmax = dmax(p, eps, CondVariant::Nprime);
    if (method == SpectrumMethod::formula) {
        // constructive: the dmax witness, then dec1 down to d0
        long long best = sp.d0;
        ZigzagSequence best_seq;
        for_each_sequence(p, eps, CondVariant::Nprime, true, [&](const ZigzagSequence& s) {
            long long q = q_value(p, eps, s);
            if (q > best) {
                best = q;
                best_seq = s;
            }
            return true;
        });
        WeightMap w = build_generator(p, eps, best_seq);
        sp.witnesses[w.deg] = w;
        while (w.deg > sp.d0) {
            w = degree_decrement(p, eps, w);
            sp.witnesses[w.deg] = w;
        }
        for (long long d = sp.d0; d <= sp.dmax; ++d) sp.degrees.push_back(d);
        return sp;
    }
    std::vector<long long> ds;
    for (long long d = sp.d0 - 1; d <= sp.dmax + 1; ++d) ds.push_back(d);
    struct Slot {
        detail::BoxOutcome outcome = detail::BoxOutcome::empty;
        WeightMap w;
        std::exception_ptr err;
    };
    std::vector<Slot> slots(ds.size());
    auto work = [&](size_t i) {
        try {
            slots[i].outcome = detail::find_generator_at_degree(p, eps, ds[i], opts, slots[i].w);
        } catch (...) {
            slots[i].err = std::current_exception();
        }
    };
    int nthreads = std::max(1, opts.threads);
    if (nthreads == 1) {
        for (size_t i = 0; i < ds.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int k = 0; k < nthreads; ++k)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < ds.size(); i = next.fetch_add(1)) work(i);
            });
        for (auto& th : pool) th.join();
    }
    for (size_t i = 0; i < ds.size(); ++i) {
        long long d = ds[i];
        if (slots[i].err) std::rethrow_exception(slots[i].err);
        bool sentinel = d < sp.d0 || d > sp.dmax;
        switch (slots[i].outcome) {
        case detail::BoxOutcome::found:
            sp.degrees.push_back(d);
            sp.witnesses[d] = slots[i].w;
            break;
        case detail::BoxOutcome::empty:
            break;
        case detail::BoxOutcome::out_of_budget:
            if (sentinel) {
                (d < sp.d0 ? sp.below : sp.above) = SentinelStatus::skipped_budget;
                break;
            }
            throw box_too_large("degree " + std::to_string(d) +
                                " candidate box exceeded the enumeration budget");
        }
    }
    return sp;
}

} // namespace chainlevel
