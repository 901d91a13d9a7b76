#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainlevel/poset.hpp"

namespace chainlevel {

/// Sign selector: +1 targets the canonical ideal, -1 the anticanonical one.
struct Epsilon {
    int value;
    explicit Epsilon(int v) : value(v) {
        if (v != 1 && v != -1) throw param_out_of_range("epsilon must be +1 or -1");
    }
    friend bool operator==(const Epsilon&, const Epsilon&) = default;
};
inline const Epsilon eps_plus{1};
inline const Epsilon eps_minus{-1};

enum class CondVariant { N, Nprime };

/// Alternating sequence y0 > x1 < y1 > x2 < ... < y_{t-1} > x_t of poset
/// elements, with the implicit endpoints x0 = -inf and y_t = +inf. t = 0 is
/// the empty sequence. ys holds y0..y_{t-1}, xs holds x1..x_t.
struct ZigzagSequence {
    std::vector<int> ys, xs;

    int t() const { return (int)xs.size(); }
    bool empty() const { return xs.empty(); }

    /// x_i as an extended element (i in 0..t, x_0 = -inf).
    ExtElem x(int i) const { return i == 0 ? ExtElem::bottom() : ExtElem::of(xs[i - 1]); }
    /// y_j as an extended element (j in 0..t, y_t = +inf).
    ExtElem y(int j) const {
        return j == (int)ys.size() ? ExtElem::top() : ExtElem::of(ys[j]);
    }

    friend bool operator==(const ZigzagSequence&, const ZigzagSequence&) = default;
    friend bool operator<(const ZigzagSequence& a, const ZigzagSequence& b) {
        if (a.t() != b.t()) return a.t() < b.t();
        for (int i = 0; i < a.t(); ++i) {
            if (a.ys[i] != b.ys[i]) return a.ys[i] < b.ys[i];
            if (a.xs[i] != b.xs[i]) return a.xs[i] < b.xs[i];
        }
        return false;
    }
};

inline std::string sequence_to_string(const Poset& p, const ZigzagSequence& s) {
    if (s.empty()) return "(empty)";
    std::string out = p.name(s.ys[0]);
    for (int i = 1; i <= s.t(); ++i) {
        out += " > " + p.name(s.xs[i - 1]);
        if (i < s.t()) out += " < " + p.name(s.ys[i]);
    }
    return out;
}

/// Checks alternation plus the non-comparability clause of the chosen
/// condition variant: for i <= j-2, y_i not>= x_j (N) or y_i not> x_j (N').
inline bool check_condition(const Poset& p, const ZigzagSequence& s, CondVariant variant) {
    int t = s.t();
    if ((int)s.ys.size() != t) return false;
    for (int i = 0; i < t; ++i) {
        if (!p.less(s.xs[i], s.ys[i])) return false;                    // y_i > x_{i+1}
        if (i + 1 < t && !p.less(s.xs[i], s.ys[i + 1])) return false;   // x_{i+1} < y_{i+1}
    }
    for (int i = 0; i + 2 <= t; ++i) {
        for (int j = i + 2; j <= t; ++j) {
            int yi = s.ys[i], xj = s.xs[j - 1];
            if (variant == CondVariant::Nprime) {
                if (p.less(xj, yi)) return false;
            } else {
                if (yi == xj || p.less(xj, yi)) return false;
            }
        }
    }
    return true;
}

/// q^eps of the full sequence -inf, y0, x1, ..., x_t, +inf:
/// sum of qdist(eps, x_l, y_l) minus sum of qdist(eps, x_{l+1}, y_l).
inline long long q_value(const Poset& p, Epsilon eps, const ZigzagSequence& s) {
    long long v = 0;
    int t = s.t();
    for (int l = 0; l <= t; ++l) v += p.qdist(eps.value, s.x(l), s.y(l));
    for (int l = 0; l + 1 <= t; ++l) v -= p.qdist(eps.value, s.x(l + 1), s.y(l));
    return v;
}

namespace detail {

inline bool ext_less(const Poset& p, ExtElem a, ExtElem b) {
    return !(a == b) && p.ext_leq(a, b);
}

// q^eps of the block x_i, y_i, ..., x_j, y_j (sequence positions i <= j).
inline long long block_value(const Poset& p, int eps, const ZigzagSequence& s, int i, int j) {
    long long v = 0;
    for (int l = i; l <= j; ++l) v += p.qdist(eps, s.x(l), s.y(l));
    for (int l = i; l < j; ++l) v -= p.qdist(eps, s.x(l + 1), s.y(l));
    return v;
}

} // namespace detail

/// A Condition N' sequence is q^eps-reduced when every shortcut x_i < y_j
/// (i < j) is strictly beaten by the zigzag: qdist(eps,x_i,y_j) <
/// q^eps(x_i,y_i,...,x_j,y_j).
inline bool is_reduced(const Poset& p, Epsilon eps, const ZigzagSequence& s) {
    int t = s.t();
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j <= t; ++j) {
            if (!detail::ext_less(p, s.x(i), s.y(j))) continue;
            if (p.qdist(eps.value, s.x(i), s.y(j)) >= detail::block_value(p, eps.value, s, i, j))
                return false;
        }
    return true;
}

namespace detail {

// Shared DFS over alternating sequences satisfying the condition variant.
// When reduced_only is set, interior shortcut failures prune the branch
// (each pair test depends only on the block it spans, so a failed pair can
// never be repaired by extending the sequence). The callback receives every
// emitted sequence; returning false stops the walk.
template <class F>
class SequenceWalker {
public:
    SequenceWalker(const Poset& p, int eps, CondVariant variant, bool reduced_only, F& emit)
        : p_(p), eps_(eps), variant_(variant), reduced_only_(reduced_only), emit_(emit) {}

    bool run() {
        if (!emit_empty()) return false;
        for (int y0 = 0; y0 < p_.size(); ++y0) {
            if (p_.down_set(y0) == 0) continue;
            seq_.ys.push_back(y0);
            if (!rec_x()) return false;
            seq_.ys.pop_back();
        }
        return true;
    }

private:
    bool emit_empty() {
        ZigzagSequence e;
        if (!reduced_only_ || is_reduced(p_, Epsilon(eps_), e)) return emit_(e);
        return true;
    }

    bool cond_ok_x(int x) const {
        int j = (int)seq_.xs.size() + 1; // position of the new x
        for (int i = 0; i + 2 <= j; ++i) {
            int yi = seq_.ys[i];
            if (variant_ == CondVariant::Nprime) {
                if (p_.less(x, yi)) return false;
            } else {
                if (yi == x || p_.less(x, yi)) return false;
            }
        }
        // Condition N' forces the x's to be strictly increasing-compatible:
        // x_j <= x_i with i < j can never complete to a valid sequence.
        for (int xi : seq_.xs)
            if (x == xi || p_.less(x, xi)) return false;
        return true;
    }

    bool cond_ok_y(int y) const {
        int j = (int)seq_.ys.size(); // position of the new y
        for (int i = 0; i < j; ++i) {
            int yi = seq_.ys[i];
            if (y == yi || p_.less(y, yi)) return false;
        }
        // y_k <= x_l forces l >= k+2; every existing x has position <= j,
        // so y_j below any of them can never complete to Condition N'.
        for (int xi : seq_.xs)
            if (y == xi || p_.less(y, xi)) return false;
        return true;
    }

    // interior shortcut tests enabled by fixing y_j (pairs (i, j), i < j)
    bool reduced_ok_y(int y) const {
        if (!reduced_only_) return true;
        ZigzagSequence probe = seq_;
        probe.ys.push_back(y);
        int j = (int)probe.ys.size() - 1;
        for (int i = 0; i < j; ++i) {
            if (!ext_less(p_, probe.x(i), ExtElem::of(y))) continue;
            long long shortcut = p_.qdist(eps_, probe.x(i), ExtElem::of(y));
            long long zig = 0;
            for (int l = i; l <= j; ++l)
                zig += p_.qdist(eps_, probe.x(l), ExtElem::of(probe.ys[l]));
            for (int l = i; l < j; ++l)
                zig -= p_.qdist(eps_, probe.x(l + 1), ExtElem::of(probe.ys[l]));
            if (shortcut >= zig) return false;
        }
        return true;
    }

    // final tests against the virtual top y_t = +inf (pairs (i, t))
    bool final_ok() const {
        if (!reduced_only_) return true;
        int t = seq_.t();
        for (int i = 0; i < t; ++i) {
            long long shortcut = p_.qdist(eps_, seq_.x(i), ExtElem::top());
            if (shortcut >= block_value(p_, eps_, seq_, i, t)) return false;
        }
        return true;
    }

    bool rec_x() {
        int prev_y = seq_.ys.back();
        Mask below = p_.down_set(prev_y);
        bool go = true;
        for_each_bit(below, [&](int x) {
            if (!go) return;
            if (!cond_ok_x(x)) return;
            seq_.xs.push_back(x);
            if (final_ok()) {
                if (!emit_(seq_)) go = false;
            }
            if (go) go = rec_y();
            seq_.xs.pop_back();
        });
        return go;
    }

    bool rec_y() {
        int prev_x = seq_.xs.back();
        Mask above = p_.up_set(prev_x);
        bool go = true;
        for_each_bit(above, [&](int y) {
            if (!go) return;
            if (!cond_ok_y(y)) return;
            if (!reduced_ok_y(y)) return;
            seq_.ys.push_back(y);
            go = rec_x();
            seq_.ys.pop_back();
        });
        return go;
    }

    const Poset& p_;
    int eps_;
    CondVariant variant_;
    bool reduced_only_;
    F& emit_;
    ZigzagSequence seq_;
};

} // namespace detail

/// Walks every sequence satisfying the condition variant (reduced ones only
/// when reduced_only is set), in lexicographic element order, shorter
/// prefixes first. The callback returns false to stop early.
template <class F>
bool for_each_sequence(const Poset& p, Epsilon eps, CondVariant variant, bool reduced_only,
                       F emit) {
    detail::SequenceWalker<F> w(p, eps.value, variant, reduced_only, emit);
    return w.run();
}

/// All q^eps-reduced sequences of the chosen variant, empty sequence first.
inline std::vector<ZigzagSequence> enumerate_reduced(const Poset& p, Epsilon eps,
                                                     CondVariant variant) {
    std::vector<ZigzagSequence> out;
    for_each_sequence(p, eps, variant, true, [&](const ZigzagSequence& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

/// Largest q^eps value over reduced sequences of the variant. The empty
/// sequence always participates, so this is at least qdist(eps,-inf,+inf).
inline long long dmax(const Poset& p, Epsilon eps, CondVariant variant) {
    long long best = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
    for_each_sequence(p, eps, variant, true, [&](const ZigzagSequence& s) {
        best = std::max(best, q_value(p, eps, s));
        return true;
    });
    return best;
}

/// Splice-and-shrink rewriting: while some shortcut x_i < y_j with
/// qdist(eps,x_i,y_j) >= q^eps(x_i,...,y_j) exists, cut the zigzag between
/// positions i and j. Terminates in a reduced sequence whose q-value is at
/// least the original one.
inline ZigzagSequence reduce_sequence(const Poset& p, Epsilon eps, ZigzagSequence s) {
    long long before = q_value(p, eps, s);
    for (;;) {
        int t = s.t();
        int fi = -1, fj = -1;
        for (int i = 0; i < t && fi < 0; ++i)
            for (int j = i + 1; j <= t; ++j) {
                if (!detail::ext_less(p, s.x(i), s.y(j))) continue;
                if (p.qdist(eps.value, s.x(i), s.y(j)) >=
                    detail::block_value(p, eps.value, s, i, j)) {
                    fi = i;
                    fj = j;
                    break;
                }
            }
        if (fi < 0) break;
        ZigzagSequence next;
        next.ys.assign(s.ys.begin(), s.ys.begin() + fi);
        next.ys.insert(next.ys.end(), s.ys.begin() + fj, s.ys.end());
        next.xs.assign(s.xs.begin(), s.xs.begin() + fi);
        next.xs.insert(next.xs.end(), s.xs.begin() + fj, s.xs.end());
        s = std::move(next);
    }
    if (q_value(p, eps, s) < before)
        throw construction_invariant_violated("sequence reduction decreased the q-value");
    return s;
}

} // namespace chainlevel
