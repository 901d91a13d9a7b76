#pragma once

#include <optional>
#include <string>

#include "chainlevel/sequences.hpp"

namespace chainlevel {

enum class PolytopeKind { chain, order };
enum class IdealVariant { canonical, anticanonical };

inline Epsilon ideal_epsilon(IdealVariant v) {
    return Epsilon(v == IdealVariant::canonical ? 1 : -1);
}
inline CondVariant polytope_condition(PolytopeKind k) {
    return k == PolytopeKind::chain ? CondVariant::Nprime : CondVariant::N;
}

/// Level verdict for one (polytope, ideal) combination. When the ring is
/// not level, the witness is the shortest nonempty reduced sequence (ties
/// broken lexicographically by element index).
struct LevelReport {
    PolytopeKind polytope = PolytopeKind::chain;
    IdealVariant variant = IdealVariant::canonical;
    bool verdict = false;
    std::optional<ZigzagSequence> witness;
    long long d0 = 0;
    long long dmax = 0;
};

/// The Ehrhart ring of the chain (resp. order) polytope is level iff the
/// only q^eps-reduced Condition N' (resp. N) sequence is the empty one.
inline LevelReport is_level(const Poset& p, PolytopeKind polytope, IdealVariant variant) {
    LevelReport rep;
    rep.polytope = polytope;
    rep.variant = variant;
    Epsilon eps = ideal_epsilon(variant);
    CondVariant cond = polytope_condition(polytope);
    rep.d0 = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
    rep.dmax = rep.d0;
    for_each_sequence(p, eps, cond, true, [&](const ZigzagSequence& s) {
        if (s.empty()) return true;
        rep.dmax = std::max(rep.dmax, q_value(p, eps, s));
        if (!rep.witness || s < *rep.witness) rep.witness = s;
        return true;
    });
    rep.verdict = !rep.witness.has_value();
    return rep;
}

struct ImplicationReport {
    LevelReport chain_canonical, order_canonical, chain_anticanonical, order_anticanonical;
    bool canonical_implication = false;     // chain level => order level
    bool anticanonical_implication = false; // chain anticanonical level => order one
    bool holds() const { return canonical_implication && anticanonical_implication; }
};

/// Checks the implication "K[C(P)] level => K[O(P)] level" (and the
/// anticanonical counterpart) by computing all four verdicts.
inline ImplicationReport check_implication(const Poset& p) {
    ImplicationReport r;
    r.chain_canonical = is_level(p, PolytopeKind::chain, IdealVariant::canonical);
    r.order_canonical = is_level(p, PolytopeKind::order, IdealVariant::canonical);
    r.chain_anticanonical = is_level(p, PolytopeKind::chain, IdealVariant::anticanonical);
    r.order_anticanonical = is_level(p, PolytopeKind::order, IdealVariant::anticanonical);
    r.canonical_implication = !r.chain_canonical.verdict || r.order_canonical.verdict;
    r.anticanonical_implication =
        !r.chain_anticanonical.verdict || r.order_anticanonical.verdict;
    return r;
}

/// Independent second decision path: true iff q^eps of every Condition
/// sequence (reduced or not) stays below qdist(eps,-inf,+inf). Agrees with
/// is_level by the equivalence (2) <=> (3) of the level criterion.
inline bool bounded_q_check(const Poset& p, Epsilon eps, CondVariant variant) {
    long long cap = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
    bool ok = true;
    for_each_sequence(p, eps, variant, false, [&](const ZigzagSequence& s) {
        if (q_value(p, eps, s) > cap) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

inline std::string level_verdict_line(const Poset& p, const LevelReport& r) {
    std::string line = r.polytope == PolytopeKind::chain ? "chain " : "order ";
    line += r.variant == IdealVariant::canonical ? "canonical" : "anticanonical";
    line += r.verdict ? ": LEVEL" : ": NOT LEVEL (witness: " +
                                        sequence_to_string(p, *r.witness) + ")";
    return line;
}

} // namespace chainlevel
