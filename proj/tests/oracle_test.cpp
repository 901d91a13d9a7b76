#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "chainlevel/examples.hpp"
#include "chainlevel/oracle.hpp"
#include "support/poset_enum.hpp"
#include "support/random_poset.hpp"

using namespace chainlevel;

TEST_CASE("lattice points of the dilated polytopes") {
    Poset two = examples::chain2();
    REQUIRE(lattice_points(two, OraclePolytope::order, 2).size() == 6);
    REQUIRE(lattice_points(two, OraclePolytope::chain, 2).size() == 6);
    REQUIRE(lattice_points(two, OraclePolytope::order, 0).size() == 1);
    REQUIRE(lattice_points(two, OraclePolytope::chain, 0).size() == 1);

    // order polytope points are order-reversing fillings
    for (const auto& f : lattice_points(two, OraclePolytope::order, 3))
        REQUIRE(f[two.index("x")] >= f[two.index("y")]);
    // chain polytope points respect every maximal chain cap
    for (const auto& f : lattice_points(two, OraclePolytope::chain, 3))
        REQUIRE(f[two.index("x")] + f[two.index("y")] <= 3);
}

TEST_CASE("hilbert_compare") {
    Poset two = examples::chain2();
    HilbertReport r = hilbert_compare(two, 3);
    REQUIRE(r.order_counts == std::vector<long long>{1, 3, 6, 10});
    REQUIRE(r.chain_counts == std::vector<long long>{1, 3, 6, 10});
    REQUIRE(r.equal);

    Poset p1 = examples::p1();
    HilbertReport r1 = hilbert_compare(p1, 1);
    REQUIRE(r1.order_counts[1] == 6);
    REQUIRE(r1.chain_counts[1] == 6);

    Poset one = build_poset({"x"}, {});
    HilbertReport ro = hilbert_compare(one, 2);
    REQUIRE(ro.order_counts == std::vector<long long>{1, 2, 3});
    REQUIRE(ro.chain_counts == std::vector<long long>{1, 2, 3});
}

TEST_CASE("hilbert equality on every poset up to 5 elements") {
    testsupport::for_each_poset_up_to(5, [&](const Poset& p) {
        REQUIRE(hilbert_compare(p, 3).equal);
    });
}

TEST_CASE("interior points") {
    Poset two = examples::chain2();
    auto pts = interior_points(two, 3);
    REQUIRE(pts == std::vector<std::vector<int>>{{1, 1}});
    REQUIRE(interior_points(two, 2).empty());
}

TEST_CASE("interior points equal the S^(1) degree slice") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 25; ++trial) {
        Poset p = testsupport::random_poset(rng, 1 + trial % 5);
        for (long long n = 1; n <= 4; ++n) {
            std::set<std::vector<int>> got;
            for (const auto& f : interior_points(p, n)) got.insert(f);
            // oracle: filter all bounded tuples through in_s_n
            std::set<std::vector<int>> expect;
            std::vector<int> v(p.size(), 1);
            auto rec = [&](auto&& self, int z) -> void {
                if (z == p.size()) {
                    if (in_s_n(p, WeightMap{v, n}, 1)) expect.insert(v);
                    return;
                }
                for (int val = 1; val <= (int)n; ++val) {
                    v[z] = val;
                    self(self, z + 1);
                }
                v[z] = 1;
            };
            rec(rec, 0);
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("chain polytope dilation 1 counts antichains") {
    testsupport::for_each_poset_up_to(5, [&](const Poset& p) {
        REQUIRE(count_lattice_points(p, OraclePolytope::chain, 1) ==
                (long long)p.antichains().size());
    });
}

TEST_CASE("comparability graph and stable sets") {
    Poset p1 = examples::p1();
    Graph g = comparability_graph(p1);
    REQUIRE(g.has_edge(p1.index("x1"), p1.index("x2")));
    REQUIRE(!g.has_edge(p1.index("x1"), p1.index("y")));
    REQUIRE(stable_sets(g).size() == 6);

    testsupport::for_each_poset_up_to(5, [&](const Poset& p) {
        Graph cg = comparability_graph(p);
        auto ss = stable_sets(cg);
        auto ac = p.antichains();
        std::sort(ss.begin(), ss.end());
        std::sort(ac.begin(), ac.end());
        REQUIRE(ss == ac);
    });
}

TEST_CASE("odd cycle chord check") {
    // 5-cycle: chordless odd cycle
    Graph c5 = make_graph(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    REQUIRE(!odd_cycle_chord_check(c5));

    // bipartite graphs have no odd cycles
    Graph c6 = make_graph(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    REQUIRE(odd_cycle_chord_check(c6));

    Graph path = make_graph(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    REQUIRE(odd_cycle_chord_check(path));

    // triangles are fine
    Graph k3 = make_graph(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    REQUIRE(odd_cycle_chord_check(k3));

    // 5-cycle with one triangular chord still has the chordless condition met
    Graph c5c = c5;
    c5c.add_edge(0, 2);
    REQUIRE(odd_cycle_chord_check(c5c));

    // comparability graphs always pass
    testsupport::for_each_poset_up_to(5, [&](const Poset& p) {
        REQUIRE(odd_cycle_chord_check(comparability_graph(p)));
    });

    Graph big = make_graph(13);
    REQUIRE_THROWS_AS(odd_cycle_chord_check(big), graph_too_large);
}
