#pragma once

#include <string>
#include <vector>

#include "chainlevel/poset.hpp"
#include "chainlevel/sequences.hpp"

namespace chainlevel {
namespace examples {

/// Two-element chain x < y.
inline Poset chain2() {
    return build_poset({"x", "y"}, {{"x", "y"}});
}

/// Three elements x1 < x2 and an incomparable y.
inline Poset p1() {
    return build_poset({"x1", "x2", "y"}, {{"x1", "x2"}});
}

/// Three 3-chains a, b, c glued by b1 -< a3 and c1 -< b3; the worked
/// construction example with sequence a3, b1, b3, c1 and degree 6.
inline Poset grid6() {
    return build_poset({"a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"},
                       {{"a1", "a2"},
                        {"a2", "a3"},
                        {"b1", "b2"},
                        {"b2", "b3"},
                        {"c1", "c2"},
                        {"c2", "c3"},
                        {"b1", "a3"},
                        {"c1", "b3"}});
}
inline ZigzagSequence grid6_sequence(const Poset& p) {
    return ZigzagSequence{{p.index("a3"), p.index("b3")}, {p.index("b1"), p.index("c1")}};
}

/// A 4-chain l and a 5-chain r sharing the zigzag element r3 (= y0 = x2);
/// the worked construction example with degree 7.
inline Poset shared7() {
    return build_poset({"l1", "l2", "l3", "l4", "r1", "r2", "r3", "r4", "r5"},
                       {{"l1", "l2"},
                        {"l2", "l3"},
                        {"l3", "l4"},
                        {"r1", "r2"},
                        {"r2", "r3"},
                        {"r3", "r4"},
                        {"r4", "r5"},
                        {"l1", "r3"},
                        {"r3", "l4"}});
}
inline ZigzagSequence shared7_sequence(const Poset& p) {
    return ZigzagSequence{{p.index("r3"), p.index("l4")}, {p.index("l1"), p.index("r3")}};
}

/// The level/not-level separating family: chain a1 -< ... -< an, chain
/// b1 -< ... -< b_m1 -< d -< c1 -< ... -< c_m2, and a1 -< d -< an.
/// Requires n >= 4 and m1, m2 >= n-2. K[O(P)] is level, K[C(P)] is not.
inline Poset level_example(int n, int m1, int m2) {
    if (n < 4 || m1 < n - 2 || m2 < n - 2)
        throw param_out_of_range("level example needs n >= 4 and m1, m2 >= n-2");
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> covers;
    auto name = [](const std::string& base, int i) { return base + std::to_string(i); };
    for (int i = 1; i <= n; ++i) elems.push_back(name("a", i));
    for (int i = 1; i <= m1; ++i) elems.push_back(name("b", i));
    for (int i = 1; i <= m2; ++i) elems.push_back(name("c", i));
    elems.push_back("d");
    for (int i = 1; i < n; ++i) covers.push_back({name("a", i), name("a", i + 1)});
    for (int i = 1; i < m1; ++i) covers.push_back({name("b", i), name("b", i + 1)});
    covers.push_back({name("b", m1), "d"});
    covers.push_back({"d", name("c", 1)});
    for (int i = 1; i < m2; ++i) covers.push_back({name("c", i), name("c", i + 1)});
    covers.push_back({name("a", 1), "d"});
    covers.push_back({"d", name("a", n)});
    int cap = std::max<int>(16, (int)elems.size());
    return build_poset(elems, covers, cap);
}
inline ZigzagSequence level_witness(const Poset& p, int n) {
    return ZigzagSequence{{p.index("d"), p.index("a" + std::to_string(n))},
                          {p.index("a1"), p.index("d")}};
}

/// The anticanonical-level separating family: chain a1 -< ... -< a_{n+3},
/// chain d1 -< d2 -< d3, and a1 -< b1 -< ... -< bn -< d2 -< c1 -< ... -<
/// cn -< a_{n+3}. Requires n >= 1; 3n+6 elements. K[O(P)] is anticanonical
/// level, K[C(P)] is not.
inline Poset antican_example(int n) {
    if (n < 1) throw param_out_of_range("antican example needs n >= 1");
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> covers;
    auto name = [](const std::string& base, int i) { return base + std::to_string(i); };
    for (int i = 1; i <= n + 3; ++i) elems.push_back(name("a", i));
    for (int i = 1; i <= n; ++i) elems.push_back(name("b", i));
    for (int i = 1; i <= n; ++i) elems.push_back(name("c", i));
    elems.push_back("d1");
    elems.push_back("d2");
    elems.push_back("d3");
    for (int i = 1; i < n + 3; ++i) covers.push_back({name("a", i), name("a", i + 1)});
    covers.push_back({"d1", "d2"});
    covers.push_back({"d2", "d3"});
    covers.push_back({name("a", 1), name("b", 1)});
    for (int i = 1; i < n; ++i) covers.push_back({name("b", i), name("b", i + 1)});
    covers.push_back({name("b", n), "d2"});
    covers.push_back({"d2", name("c", 1)});
    for (int i = 1; i < n; ++i) covers.push_back({name("c", i), name("c", i + 1)});
    covers.push_back({name("c", n), name("a", n + 3)});
    int cap = std::max<int>(16, (int)elems.size());
    return build_poset(elems, covers, cap);
}
inline ZigzagSequence antican_witness(const Poset& p, int n) {
    return ZigzagSequence{{p.index("d2"), p.index("a" + std::to_string(n + 3))},
                          {p.index("a1"), p.index("d2")}};
}

} // namespace examples
} // namespace chainlevel
