#include <gtest/gtest.h>

#include <set>

#include "circ/cayley.hpp"
#include "circ/classification.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace circ;

TEST(Predicates, Mdci) {
    EXPECT_TRUE(predicate_mdci(9, 3));
    EXPECT_FALSE(predicate_mdci(9, 4));
    EXPECT_TRUE(predicate_mdci(50, 5));
    EXPECT_FALSE(predicate_mdci(50, 6));
    EXPECT_FALSE(predicate_mdci(16, 3));
    try {
        predicate_mdci(12, 2);
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "predicate stated only for m >= 3");
    }
}

TEST(Predicates, Mci) {
    EXPECT_TRUE(predicate_mci(9, 100));
    EXPECT_TRUE(predicate_mci(50, 11));
    EXPECT_FALSE(predicate_mci(50, 12));
    for (Int m = 6; m <= 40; ++m) EXPECT_TRUE(predicate_mci(18, m));
    EXPECT_THROW(predicate_mci(12, 5), std::domain_error);
}

TEST(Predicates, Groups) {
    EXPECT_TRUE(predicate_dci_group(12));
    EXPECT_FALSE(predicate_dci_group(16));
    EXPECT_FALSE(predicate_ci_group(16));
    EXPECT_FALSE(predicate_dci_group(18));
    EXPECT_TRUE(predicate_ci_group(18));
    // n = k or 2k with k square-free, by direct scan.
    for (Int n = 2; n <= 300; ++n) {
        auto square_free = [](Int k) {
            for (Int d = 2; d * d <= k; ++d)
                if (k % (d * d) == 0) return false;
            return true;
        };
        const bool expect = square_free(n) || (n % 2 == 0 && square_free(n / 2));
        EXPECT_EQ(predicate_dci_group(n), expect) << n;
    }
}

TEST(OrbitRepresentatives, CountsMatchOrbitScan) {
    for (Int n = 2; n <= 10; ++n)
        for (Mode mode : {Mode::digraph, Mode::graph})
            for (Int m = 1; m < n; ++m) {
                std::set<std::vector<std::vector<Int>>> orbits;
                for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                    std::vector<Int> members;
                    for (Int x = 1; x < n; ++x)
                        if (mask >> (x - 1) & 1) members.push_back(x);
                    if (static_cast<Int>(members.size()) != m) continue;
                    bool closed = true;
                    for (Int x : members) closed = closed && (mask >> (n - x - 1) & 1);
                    if (mode == Mode::graph && !closed) continue;
                    orbits.insert(oracle::unit_images(ConnectionSet(n, members, mode)));
                }
                const auto reps = orbit_representatives(n, m, mode);
                ASSERT_EQ(reps.size(), orbits.size()) << n << " " << m;
                for (const auto& s : reps) EXPECT_EQ(oracle::unit_images(s).front(), s.members());
            }
}

TEST(MProperty, Examples) {
    const auto z8 = m_property(8, 3, Mode::digraph);
    EXPECT_FALSE(z8.property_holds);
    ASSERT_FALSE(z8.counterexamples.empty());
    EXPECT_EQ(z8.counterexamples.front().set, ConnectionSet(8, {1, 2, 5}));
    EXPECT_TRUE(m_property(8, 3, Mode::graph).property_holds);
    const auto z9 = m_property(9, 4, Mode::digraph);
    EXPECT_FALSE(z9.property_holds);
    bool found = false;
    for (const auto& c : z9.counterexamples) found = found || c.set == ConnectionSet(9, {1, 3, 4, 7});
    EXPECT_TRUE(found);
    EXPECT_THROW(m_property(8, 8, Mode::digraph), std::domain_error);
}

TEST(MGroup, Examples) {
    const auto r94 = is_m_group(9, 4, Mode::digraph);
    EXPECT_FALSE(r94.property_holds);
    EXPECT_EQ(r94.predicate_value, false);
    EXPECT_TRUE(r94.agreement);
    EXPECT_EQ(r94.failing_valency, 4);
    EXPECT_TRUE(is_m_group(9, 3, Mode::digraph).property_holds);
    EXPECT_TRUE(is_m_group(18, 7, Mode::graph).property_holds);
    EXPECT_EQ(is_m_group(18, 7, Mode::graph).predicate_value, true);
    EXPECT_FALSE(is_m_group(12, 2, Mode::digraph).predicate_value.has_value());
    // Valencies beyond n - 1 hold vacuously.
    EXPECT_TRUE(is_m_group(3, 10, Mode::digraph).property_holds);
}

TEST(MGroup, WorkerCountDoesNotChangeReports) {
    SweepOptions one{1, nullptr}, many{4, nullptr};
    for (Int n : {12, 16}) {
        const auto a = m_property(n, 4, Mode::digraph, one);
        const auto b = m_property(n, 4, Mode::digraph, many);
        EXPECT_EQ(a.property_holds, b.property_holds);
        ASSERT_EQ(a.counterexamples.size(), b.counterexamples.size());
        for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
            EXPECT_EQ(a.counterexamples[i].set, b.counterexamples[i].set);
            EXPECT_EQ(a.counterexamples[i].witness, b.counterexamples[i].witness);
        }
    }
}

TEST(Witnesses, Examples) {
    const auto d16 = witnesses(16, Mode::digraph);
    ASSERT_EQ(d16.size(), 1u);
    EXPECT_EQ(d16[0].set, ConnectionSet(16, {2, 4, 10}));
    const auto g16 = witnesses(16, Mode::graph);
    ASSERT_EQ(g16.size(), 1u);
    EXPECT_EQ(g16[0].set, ConnectionSet(16, {1, 15, 2, 14, 7, 9}));
    const auto g25 = witnesses(25, Mode::graph);
    ASSERT_EQ(g25.size(), 1u);
    EXPECT_EQ(g25[0].set, ConnectionSet(25, {1, 6, 11, 16, 21, 4, 9, 14, 19, 24, 5, 20}));
    const auto d9 = witnesses(9, Mode::digraph);
    ASSERT_EQ(d9.size(), 1u);
    EXPECT_EQ(d9[0].set, ConnectionSet(9, {1, 3, 4, 7}));
    EXPECT_TRUE(witnesses(30, Mode::digraph).empty());
    EXPECT_TRUE(witnesses(18, Mode::graph).empty());
}

TEST(Witnesses, NonCiDigraphTo100GraphTo50) {
    const auto r = properties::witness_families(100, 50);
    EXPECT_GT(r.checked, 0u);
    EXPECT_TRUE(r.ok()) << r.failures.front();
}

TEST(Verify, SmallSweeps) {
    for (const auto& cell : verify_theorems(18, 6, Mode::digraph)) EXPECT_TRUE(cell.agreement) << cell.n << " " << cell.m;
    for (const auto& cell : verify_theorems(12, 7, Mode::graph)) {
        EXPECT_GE(cell.m, 6);
        EXPECT_TRUE(cell.agreement) << cell.n << " " << cell.m;
    }
}

TEST(MProperty, CiStatusMatchesOracleUpTo10) {
    // S is CI iff no other orbit representative of its size gives an isomorphic circulant.
    for (Int n = 2; n <= 10; ++n)
        for (Mode mode : {Mode::digraph, Mode::graph})
            for (Int m = 1; m < n; ++m) {
                const auto reps = orbit_representatives(n, m, mode);
                for (const auto& s : reps) {
                    bool ci = true;
                    for (const auto& t : reps)
                        if (!(t == s) && brute_force_isomorphic(CayleyDigraph(s), CayleyDigraph(t)).isomorphic) ci = false;
                    ASSERT_EQ(decide_ci(s).is_ci, ci) << n << " " << s.to_string();
                }
            }
}
