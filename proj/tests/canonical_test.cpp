#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chainlevel/canonical.hpp"
#include "chainlevel/examples.hpp"
#include "support/poset_enum.hpp"
#include "support/random_poset.hpp"

using namespace chainlevel;

namespace {

WeightMap by_name(const Poset& p, std::vector<std::pair<std::string, int>> entries,
                  long long deg) {
    WeightMap w{std::vector<int>(p.size(), 0), deg};
    for (auto& [name, v] : entries) w.values[p.index(name)] = v;
    return w;
}

WeightMap level_paper_generator(const Poset& p, int n, int m1, int m2) {
    WeightMap w = constant_map(p, 1, m1 + m2 + n - 1);
    w.values[p.index("a1")] = m1;
    w.values[p.index("a" + std::to_string(n))] = m2;
    w.values[p.index("d")] = n - 2;
    return w;
}

WeightMap antican_paper_generator(const Poset& p, int n) {
    WeightMap w = constant_map(p, -1, n - 4);
    w.values[p.index("a1")] = n - 1;
    w.values[p.index("a" + std::to_string(n + 3))] = n - 1;
    w.values[p.index("d2")] = n - 1;
    return w;
}

// all xi in S^(eps) of degree d, entries bounded by the candidate box
template <class F>
void for_each_in_box(const Poset& p, Epsilon eps, long long d, F&& f) {
    detail::BoxWalker walker(p, eps.value, d, 1'000'000'000);
    bool exhausted = false;
    walker.run(
        [&](const std::vector<int>& vals) {
            f(WeightMap{vals, d});
            return false;
        },
        exhausted);
    REQUIRE(exhausted);
}

} // namespace

TEST_CASE("antichain test on the spec examples") {
    Poset two = examples::chain2();
    WeightMap low = by_name(two, {{"x", 1}, {"y", 1}}, 4);
    GeneratorVerdict v = is_generator_antichain(two, eps_plus, low);
    REQUIRE(!v.is_generator);
    REQUIRE(v.blocking_antichain == Mask(0)); // no tight chain at all

    Poset lv = examples::level_example(4, 2, 2);
    WeightMap gen = level_paper_generator(lv, 4, 2, 2);
    REQUIRE(is_generator_antichain(lv, eps_plus, gen).is_generator);

    WeightMap flat = constant_map(lv, 1, 6);
    REQUIRE(is_generator_antichain(lv, eps_plus, flat).is_generator);

    REQUIRE_THROWS_AS(is_generator_antichain(two, eps_plus, by_name(two, {{"x", 0}, {"y", 1}}, 5)),
                      not_in_ideal);
}

TEST_CASE("decomposition oracle on the spec examples") {
    Poset two = examples::chain2();
    REQUIRE(!is_generator_decomposition(two, eps_plus, by_name(two, {{"x", 1}, {"y", 1}}, 4))
                 .is_generator);

    Poset lv = examples::level_example(4, 2, 2);
    REQUIRE(is_generator_decomposition(lv, eps_plus, level_paper_generator(lv, 4, 2, 2))
                .is_generator);

    Poset ac = examples::antican_example(5);
    REQUIRE(is_generator_decomposition(ac, eps_minus, antican_paper_generator(ac, 5))
                .is_generator);

    // minimal degree monomials are always generators
    std::mt19937 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        Poset p = testsupport::random_poset(rng, 1 + trial % 6);
        for (Epsilon eps : {eps_plus, eps_minus}) {
            long long d0 = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
            WeightMap flat = constant_map(p, eps.value, d0);
            REQUIRE(is_generator_decomposition(p, eps, flat).is_generator);
        }
    }
}

TEST_CASE("sequence witness test recovers generator structure") {
    Poset g = examples::grid6();
    WeightMap built = build_generator(g, eps_plus, examples::grid6_sequence(g));
    GeneratorVerdict v = generator_witness_sequence(g, eps_plus, built);
    REQUIRE(v.is_generator);
    REQUIRE(v.witness_sequence.has_value());
    REQUIRE((int)v.witness_chains.size() == v.witness_sequence->t() + 1);
    // witness chains are tight
    for (const auto& c : v.witness_chains) {
        Mask m = 0;
        for (int z : c) m |= Mask(1) << z;
        REQUIRE(chain_sum(built, m) == built.deg - 1);
    }

    WeightMap flat = constant_map(g, 1, g.qdist(1, ExtElem::bottom(), ExtElem::top()));
    GeneratorVerdict ve = generator_witness_sequence(g, eps_plus, flat);
    REQUIRE(ve.is_generator);
    REQUIRE(ve.witness_sequence->empty());

    Poset two = examples::chain2();
    REQUIRE(!generator_witness_sequence(two, eps_plus, by_name(two, {{"x", 1}, {"y", 1}}, 4))
                 .is_generator);
}

TEST_CASE("three-way agreement on all posets up to 4 elements") {
    testsupport::for_each_poset_up_to(4, [&](const Poset& p) {
        for (Epsilon eps : {eps_plus, eps_minus}) {
            long long d0 = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
            long long dm = dmax(p, eps, CondVariant::Nprime);
            for (long long d = d0; d <= dm; ++d) {
                for_each_in_box(p, eps, d, [&](const WeightMap& xi) {
                    bool a = is_generator_antichain(p, eps, xi).is_generator;
                    bool b = is_generator_decomposition(p, eps, xi).is_generator;
                    bool c = generator_witness_sequence(p, eps, xi).is_generator;
                    REQUIRE(a == b);
                    REQUIRE(b == c);
                });
            }
        }
    });
}

TEST_CASE("three-way agreement sampled on 6-element posets") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        Poset p = testsupport::random_poset(rng, 6, 0.35);
        for (Epsilon eps : {eps_plus, eps_minus}) {
            WeightMap xi = testsupport::random_s_n(rng, p, eps.value, 2, 2);
            bool a = is_generator_antichain(p, eps, xi).is_generator;
            bool b = is_generator_decomposition(p, eps, xi).is_generator;
            bool c = generator_witness_sequence(p, eps, xi).is_generator;
            REQUIRE(a == b);
            REQUIRE(b == c);
        }
    }
}

TEST_CASE("degree_decrement walks the spectrum downward") {
    Poset lv = examples::level_example(4, 2, 2);
    WeightMap g7 = level_paper_generator(lv, 4, 2, 2);
    WeightMap g6 = degree_decrement(lv, eps_plus, g7);
    REQUIRE(g6.deg == 6);
    REQUIRE(is_generator_decomposition(lv, eps_plus, g6).is_generator);
    REQUIRE_THROWS_AS(degree_decrement(lv, eps_plus, g6), at_minimal_degree);

    Poset ac = examples::antican_example(5);
    WeightMap a1 = antican_paper_generator(ac, 5);
    WeightMap a0 = degree_decrement(ac, eps_minus, a1);
    REQUIRE(a0.deg == 0);
    REQUIRE(is_generator_decomposition(ac, eps_minus, a0).is_generator);

    Poset two = examples::chain2();
    REQUIRE_THROWS_AS(degree_decrement(two, eps_plus, by_name(two, {{"x", 1}, {"y", 1}}, 4)),
                      not_generator);
}

TEST_CASE("degree spectrum on the named examples") {
    Poset two = examples::chain2();
    DegreeSpectrum sf = degree_spectrum(two, eps_plus, SpectrumMethod::formula);
    DegreeSpectrum sb = degree_spectrum(two, eps_plus, SpectrumMethod::bruteforce);
    REQUIRE(sf.degrees == std::vector<long long>{3});
    REQUIRE(sb.degrees == std::vector<long long>{3});
    REQUIRE(sb.below == SentinelStatus::verified_empty);
    REQUIRE(sb.above == SentinelStatus::verified_empty);

    Poset lv = examples::level_example(4, 2, 2);
    DegreeSpectrum lf = degree_spectrum(lv, eps_plus, SpectrumMethod::formula);
    DegreeSpectrum lb = degree_spectrum(lv, eps_plus, SpectrumMethod::bruteforce);
    REQUIRE(lf.d0 == 6);
    REQUIRE(lf.dmax == 7);
    REQUIRE(lf.degrees == std::vector<long long>{6, 7});
    REQUIRE(lb.degrees == lf.degrees);
    // formula witnesses are honest generators at their degree
    for (const auto& [d, w] : lf.witnesses) {
        REQUIRE(w.deg == d);
        REQUIRE(is_generator_decomposition(lv, eps_plus, w).is_generator);
    }
}

TEST_CASE("formula and bruteforce spectra agree on all posets up to 4 elements") {
    SpectrumOptions opts;
    testsupport::for_each_poset_up_to(4, [&](const Poset& p) {
        for (Epsilon eps : {eps_plus, eps_minus}) {
            DegreeSpectrum sf = degree_spectrum(p, eps, SpectrumMethod::formula, opts);
            DegreeSpectrum sb = degree_spectrum(p, eps, SpectrumMethod::bruteforce, opts);
            REQUIRE(sf.degrees == sb.degrees);
            REQUIRE(sb.below == SentinelStatus::verified_empty);
            REQUIRE(sb.above == SentinelStatus::verified_empty);
            // spectrum is the full interval
            REQUIRE((long long)sb.degrees.size() == sf.dmax - sf.d0 + 1);
        }
    });
}

TEST_CASE("spectrum with worker threads matches the serial result") {
    Poset lv = examples::level_example(4, 2, 2);
    SpectrumOptions serial, pooled;
    pooled.threads = 4;
    for (Epsilon eps : {eps_plus, eps_minus}) {
        DegreeSpectrum a = degree_spectrum(lv, eps, SpectrumMethod::bruteforce, serial);
        DegreeSpectrum b = degree_spectrum(lv, eps, SpectrumMethod::bruteforce, pooled);
        REQUIRE(a.degrees == b.degrees);
        for (const auto& [d, w] : a.witnesses) REQUIRE(b.witnesses.at(d) == w);
    }
}

TEST_CASE("chain splice closure") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        Poset p = testsupport::random_poset(rng, 2 + trial % 5, 0.4);
        WeightMap xi = testsupport::random_s_n(rng, p, 1, 2, 1);
        long long d = xi.deg;
        std::vector<int> tight = level_chains(p, xi, d - 1);
        const auto& chains = p.maximal_chains();
        for (int c1 : tight)
            for (int c2 : tight)
                for (int z : chains[c1]) {
                    if (!(p.maximal_chain_masks()[c2] >> z & 1)) continue;
                    // spliced chain: C1 up to z, C2 strictly above z
                    Mask m = 0;
                    for (int w : chains[c1])
                        if (p.leq(w, z)) m |= Mask(1) << w;
                    for (int w : chains[c2])
                        if (p.less(z, w)) m |= Mask(1) << w;
                    bool found = false;
                    for (Mask cm : p.maximal_chain_masks())
                        if (cm == m) found = true;
                    REQUIRE(found);
                    REQUIRE(chain_sum(xi, m) == d - 1);
                }
    }
}

TEST_CASE("tight chains above minimal degree contain a big element") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        Poset p = testsupport::random_poset(rng, 1 + trial % 6);
        for (Epsilon eps : {eps_plus, eps_minus}) {
            WeightMap xi = testsupport::random_s_n(rng, p, eps.value, 2, 2);
            if (xi.deg <= p.qdist(eps.value, ExtElem::bottom(), ExtElem::top())) continue;
            for (int c : level_chains(p, xi, xi.deg - eps.value)) {
                bool big = false;
                for_each_bit(p.maximal_chain_masks()[c], [&](int z) {
                    if (xi.values[z] > eps.value) big = true;
                });
                REQUIRE(big);
            }
        }
    }
}
