#include <gtest/gtest.h>

#include "circ/cayley.hpp"
#include "circ/classification.hpp"
#include "oracles.hpp"

using namespace circ;

TEST(Cayley, Construction) {
    const CayleyDigraph c4(ConnectionSet(4, {1, 3}, Mode::graph));
    // The 4-cycle: g is adjacent to g +- 1 in both directions.
    for (Int g = 0; g < 4; ++g) {
        std::vector<Int> expect{(g + 1) % 4, (g + 3) % 4};
        std::sort(expect.begin(), expect.end());
        EXPECT_EQ(c4.out_neighbors(g), expect);
        EXPECT_EQ(c4.in_neighbors(g), expect);
    }
    const CayleyDigraph c5(ConnectionSet(5, {1}));
    for (Int g = 0; g < 5; ++g) {
        EXPECT_TRUE(c5.has_arc(g, (g + 1) % 5));
        EXPECT_FALSE(c5.has_arc((g + 1) % 5, g));
    }
    const CayleyDigraph z8(ConnectionSet(8, {1, 2, 5}));
    EXPECT_EQ(z8.arc_count(), 24u);
    EXPECT_EQ(z8.out_neighbors(6), (std::vector<Int>{0, 3, 7}));
}

TEST(AutOrbit, Examples) {
    const auto o = aut_orbit(ConnectionSet(8, {1, 2, 5}));
    EXPECT_EQ(o.orbit, (std::vector<ConnectionSet>{ConnectionSet(8, {1, 2, 5}), ConnectionSet(8, {3, 6, 7})}));
    EXPECT_EQ(o.representative, ConnectionSet(8, {1, 2, 5}));
    std::vector<Int> all;
    for (Int x = 1; x < 12; ++x) all.push_back(x);
    EXPECT_EQ(aut_orbit(ConnectionSet(12, all)).orbit.size(), 1u);
    for (Int n = 2; n <= 12; ++n)
        for (const auto& s : orbit_representatives(n, std::min<Int>(3, n - 1), Mode::digraph)) {
            const auto orbit = aut_orbit(s);
            std::vector<std::vector<Int>> members;
            for (const auto& t : orbit.orbit) members.push_back(t.members());
            EXPECT_EQ(members, oracle::unit_images(s));
            EXPECT_EQ(orbit.representative, s);
            EXPECT_TRUE(is_orbit_representative(s, units(n)));
        }
}

TEST(Oracle, Examples) {
    const auto yes = brute_force_isomorphic(CayleyDigraph(ConnectionSet(8, {1, 2, 5})), CayleyDigraph(ConnectionSet(8, {1, 5, 6})));
    EXPECT_TRUE(yes.isomorphic);
    ASSERT_TRUE(yes.bijection.has_value());
    EXPECT_TRUE(brute_force_isomorphic(CayleyDigraph(ConnectionSet(5, {1})), CayleyDigraph(ConnectionSet(5, {2}))).isomorphic);
    EXPECT_FALSE(brute_force_isomorphic(CayleyDigraph(ConnectionSet(8, {1, 2, 5})), CayleyDigraph(ConnectionSet(8, {1, 2, 3}))).isomorphic);
}

TEST(Oracle, BijectionIsAnIsomorphism) {
    const CayleyDigraph a(ConnectionSet(8, {1, 2, 5})), b(ConnectionSet(8, {2, 3, 7}));
    const auto r = brute_force_isomorphic(a, b);
    ASSERT_TRUE(r.isomorphic);
    const auto& map = *r.bijection;
    std::vector<Int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    for (Int v = 0; v < 8; ++v) EXPECT_EQ(sorted[static_cast<std::size_t>(v)], v);
    for (Int v = 0; v < 8; ++v)
        for (Int w = 0; w < 8; ++w)
            EXPECT_EQ(a.has_arc(v, w), b.has_arc(map[static_cast<std::size_t>(v)], map[static_cast<std::size_t>(w)]));
}

TEST(Oracle, Errors) {
    const CayleyDigraph a(ConnectionSet(8, {1})), b(ConnectionSet(9, {1}));
    EXPECT_THROW(brute_force_isomorphic(a, b), std::domain_error);
    EXPECT_THROW(brute_force_isomorphic(CayleyDigraph(ConnectionSet(8, {1, 7}, Mode::graph)), CayleyDigraph(ConnectionSet(8, {1, 7}))),
                 std::domain_error);
    const CayleyDigraph big(ConnectionSet(13, {1}));
    try {
        brute_force_isomorphic(big, big);
        FAIL();
    } catch (const OracleCutoffExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("oracle cutoff exceeded"), std::string::npos);
    }
    EXPECT_TRUE(brute_force_isomorphic(big, big, 13).isomorphic);
}

TEST(Oracle, MatchesPermutationScanUpTo7) {
    for (Int n = 2; n <= 7; ++n)
        for (Mode mode : {Mode::digraph, Mode::graph})
            for (Int m = 1; m < n; ++m) {
                const auto reps = orbit_representatives(n, m, mode);
                for (const auto& s : reps)
                    for (const auto& t : reps)
                        ASSERT_EQ(brute_force_isomorphic(CayleyDigraph(s), CayleyDigraph(t)).isomorphic,
                                  oracle::naive_isomorphic(s, t))
                            << n << " " << s.to_string() << " " << t.to_string();
            }
}

TEST(Oracle, IsomorphicUnderUnits) {
    for (Int n = 2; n <= 12; ++n)
        for (const auto& s : orbit_representatives(n, std::min<Int>(4, n - 1), Mode::digraph))
            for (Int u : units(n))
                ASSERT_TRUE(brute_force_isomorphic(CayleyDigraph(s), CayleyDigraph(s.scaled(u))).isomorphic);
}
