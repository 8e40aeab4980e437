#include <gtest/gtest.h>

#include "circ/connection_set.hpp"
#include "circ/zn.hpp"
#include "oracles.hpp"

using namespace circ;

TEST(Factorization, ExamplesAndErrors) {
    EXPECT_EQ(Factorization::of(72).parts(), (std::vector<PrimePower>{{2, 3, 8}, {3, 2, 9}}));
    EXPECT_EQ(Factorization::of(8).parts(), (std::vector<PrimePower>{{2, 3, 8}}));
    EXPECT_EQ(Factorization::of(45).parts(), (std::vector<PrimePower>{{3, 2, 9}, {5, 1, 5}}));
    EXPECT_TRUE(Factorization::of(49).is_prime_power());
    try {
        Factorization::of(1);
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "modulus must be at least 2");
    }
    EXPECT_THROW(Factorization::of(0), std::domain_error);
}

TEST(Factorization, MatchesScanUpTo500) {
    for (Int n = 2; n <= 500; ++n) {
        const auto expect = oracle::factor(n);
        const auto got = Factorization::of(n);
        ASSERT_EQ(got.size(), expect.size()) << n;
        for (std::size_t i = 0; i < expect.size(); ++i) {
            EXPECT_EQ(got[i].p, expect[i].p);
            EXPECT_EQ(got[i].t, expect[i].t);
            EXPECT_EQ(got[i].q, expect[i].q);
        }
    }
}

TEST(Crt, Examples) {
    const auto f36 = Factorization::of(36);
    EXPECT_EQ(crt_encode({7, 36}, f36), (std::vector<Residue>{{3, 4}, {7, 9}}));
    EXPECT_EQ(crt_encode({0, 36}, f36), (std::vector<Residue>{{0, 4}, {0, 9}}));
    EXPECT_EQ(crt_encode({5, 8}, Factorization::of(8)), (std::vector<Residue>{{5, 8}}));
    const std::vector<Residue> a{{3, 4}, {7, 9}}, b{{0, 4}, {0, 9}}, c{{1, 4}, {0, 9}};
    EXPECT_EQ(crt_decode(a, f36), (Residue{7, 36}));
    EXPECT_EQ(crt_decode(b, f36), (Residue{0, 36}));
    EXPECT_EQ(crt_decode(c, f36), (Residue{9, 36}));
    EXPECT_EQ(oracle::crt_scan({1, 0}, {4, 9}, 36), 9);
}

TEST(Crt, Errors) {
    const auto f36 = Factorization::of(36);
    EXPECT_THROW(crt_encode({7, 35}, f36), std::domain_error);
    const std::vector<Residue> short_list{{3, 4}};
    EXPECT_THROW(crt_decode(short_list, f36), std::domain_error);
    const std::vector<Residue> wrong_moduli{{3, 9}, {1, 4}};
    EXPECT_THROW(crt_decode(wrong_moduli, f36), std::domain_error);
    const std::vector<Residue> out_of_range{{5, 4}, {1, 9}};
    EXPECT_THROW(crt_decode(out_of_range, f36), std::domain_error);
}

TEST(Crt, RoundTripAgainstScanUpTo200) {
    for (Int n = 2; n <= 200; ++n) {
        const auto f = Factorization::of(n);
        std::vector<Int> moduli;
        for (const auto& pp : f.parts()) moduli.push_back(pp.q);
        for (Int x = 0; x < n; ++x) {
            const auto comps = crt_encode({x, n}, f);
            std::vector<Int> values;
            for (const auto& c : comps) values.push_back(c.value);
            ASSERT_EQ(oracle::crt_scan(values, moduli, n), x);
            ASSERT_EQ(crt_decode(comps, f).value, x);
        }
    }
}

TEST(Digits, Examples) {
    EXPECT_EQ(p_adic_digits({5, 8}).digits, (std::vector<Int>{1, 0, 1}));
    EXPECT_EQ(p_adic_digits({0, 27}).digits, (std::vector<Int>{0, 0, 0}));
    EXPECT_EQ(p_adic_digits({7, 9}).digits, (std::vector<Int>{1, 2}));
    EXPECT_THROW(p_adic_digits({5, 12}), std::domain_error);
    for (Int q : {2, 4, 8, 16, 3, 9, 27, 81, 5, 25, 125, 49})
        for (Int x = 0; x < q; ++x) ASSERT_EQ(p_adic_digits({x, q}).value(), x);
}

TEST(Order, Examples) {
    EXPECT_EQ(element_order({6, 9}), 3);
    EXPECT_EQ(element_order({0, 9}), 1);
    EXPECT_EQ(element_order({4, 8}), 2);
    for (Int n = 2; n <= 60; ++n)
        for (Int x = 0; x < n; ++x) {
            Int k = 1;
            while (k * x % n != 0) ++k;
            ASSERT_EQ(element_order({x, n}), k);
        }
}

TEST(Units, Examples) {
    EXPECT_EQ(units(8), (std::vector<Int>{1, 3, 5, 7}));
    EXPECT_EQ(units(9), (std::vector<Int>{1, 2, 4, 5, 7, 8}));
    EXPECT_EQ(units(2), (std::vector<Int>{1}));
    for (Int n = 2; n <= 100; ++n) EXPECT_EQ(static_cast<Int>(units(n).size()), euler_phi(n));
}

TEST(Subgroups, Examples) {
    EXPECT_EQ(subgroup_of_order(9, 3), (ResidueSet{0, 3, 6}));
    EXPECT_EQ(subgroup_of_order(17, 1), (ResidueSet{0}));
    EXPECT_EQ(subgroup_of_order(36, 6), (ResidueSet{0, 6, 12, 18, 24, 30}));
    EXPECT_THROW(subgroup_of_order(9, 2), std::domain_error);
    const std::vector<Int> a{2, 3}, b{4, 6}, none{};
    EXPECT_EQ(generated_subgroup(12, a).size(), 12u);
    EXPECT_EQ(generated_subgroup(12, b), (ResidueSet{0, 2, 4, 6, 8, 10}));
    EXPECT_EQ(generated_subgroup(9, none), (ResidueSet{0}));
}

TEST(ConnectionSet, NormalizesAndValidates) {
    const ConnectionSet s(8, {5, 1, 10, 1});
    EXPECT_EQ(s.members(), (ResidueSet{1, 2, 5}));
    EXPECT_EQ(s.to_string(), "{1,2,5}");
    EXPECT_THROW(ConnectionSet(8, {0, 1}), std::domain_error);
    EXPECT_THROW(ConnectionSet(8, {1, 2}, Mode::graph), std::domain_error);
    EXPECT_NO_THROW(ConnectionSet(8, {1, 7, 4}, Mode::graph));
    EXPECT_EQ(ConnectionSet::parse(8, "1,2", Mode::graph, true).members(), (ResidueSet{1, 2, 6, 7}));
    EXPECT_THROW(ConnectionSet::parse(8, "1,x", Mode::digraph), std::invalid_argument);
    EXPECT_TRUE(ConnectionSet::parse(8, "", Mode::digraph).empty());
    EXPECT_EQ(s.scaled(3).members(), (ResidueSet{3, 6, 7}));
    EXPECT_EQ(parse_mode("graph"), Mode::graph);
    EXPECT_THROW(parse_mode("tree"), std::invalid_argument);
}
