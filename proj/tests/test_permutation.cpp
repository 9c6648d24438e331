#include <gtest/gtest.h>

#include <set>

#include <ncsf/bigint.hpp>
#include <ncsf/permutation.hpp>

#include "oracles.hpp"

using namespace ncsf;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}  // namespace

TEST(Permutation, Parse) {
    EXPECT_EQ(P("312"), (Permutation{3, 1, 2}));
    EXPECT_EQ(P("10,1,2,3,4,5,6,7,8,9").size(), 10);
    EXPECT_THROW(P("1123"), std::invalid_argument);
    EXPECT_THROW(P("24"), std::invalid_argument);
    EXPECT_EQ(to_string(P("2,1")), "21");
}

TEST(Permutation, Inversions) {
    EXPECT_EQ(inversions(Permutation::identity(6)), 0);
    EXPECT_EQ(inversions(P("21")), 1);
    EXPECT_EQ(inversions(P("132")), 1);
    for (const auto& w : oracle::words(6)) ASSERT_EQ(inversions(Permutation(w)), oracle::inversions(w));
}

TEST(Permutation, InverseInvolution) {
    for (const auto& p : all_permutations(5)) ASSERT_EQ(p.inverse().inverse(), p);
}

TEST(Permutation, Saillance) {
    EXPECT_EQ(saillance_composition(P("351274698")), (Composition{1, 3, 3, 2}));
    EXPECT_EQ(saillance_composition(Permutation::identity(5)), (Composition{1, 1, 1, 1, 1}));
    EXPECT_EQ(saillance_composition(P("54321")), (Composition{5}));
}

TEST(Permutation, SaillanceAgreesWithRightPeeling) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& w : oracle::words(n)) {
            const Permutation p(w);
            const auto sc = saillance_composition(p);
            ASSERT_EQ(sc, oracle::saillance(w)) << p;
            // factor starts are the left-to-right maxima
            std::vector<int> starts;
            int at = 0;
            for (int part : sc.parts()) {
                starts.push_back(at);
                at += part;
            }
            ASSERT_EQ(starts, ltr_maxima_positions(p)) << p;
        }
}

TEST(Permutation, Recoils) {
    EXPECT_EQ(recoil_composition(P("132")), (Composition{2, 1}));
    EXPECT_EQ(recoil_composition(P("231")), (Composition{1, 2}));
    EXPECT_EQ(recoil_composition(Permutation::identity(4)), (Composition{4}));
    EXPECT_EQ(recoil_composition(P("4321")), (Composition{1, 1, 1, 1}));
    for (int n = 1; n <= 8; ++n)
        for (const auto& w : oracle::words(n)) {
            const Permutation p(w);
            ASSERT_EQ(recoil_composition(p), oracle::recoils(w));
            ASSERT_EQ(descent_set(recoil_composition(p)), descent_set(p.inverse()));
        }
}

TEST(Permutation, OrderedCycleType) {
    EXPECT_EQ(ordered_cycle_type(P("1243")), (Composition{1, 1, 2}));
    EXPECT_EQ(ordered_cycle_type(Permutation::identity(3)), (Composition{1, 1, 1}));
    EXPECT_EQ(ordered_cycle_type(P("4321")), (Composition{2, 2}));
    for (const auto& w : oracle::words(7)) ASSERT_EQ(ordered_cycle_type(Permutation(w)), oracle::octype(w));
}

TEST(Permutation, Foata) {
    EXPECT_EQ(foata_first(Permutation::identity(4)), Permutation::identity(4));
    EXPECT_EQ(foata_first(P("321")), P("132"));
    EXPECT_EQ(invc(P("321")), 1);
    EXPECT_EQ(foata_first(P("1243")), P("1234"));
    EXPECT_EQ(invc(P("1243")), 0);
}

TEST(Permutation, FoataFirst) {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::pair<Composition, Permutation>> images;
        for (const auto& w : oracle::words(n)) {
            const Permutation p(w);
            ASSERT_EQ(foata_first(p).word(), oracle::foata(w));
            ASSERT_EQ(foata_first(p)[0], 1);
            images.insert({carlitz_cycle_type(p), foata_first(p)});
        }
        EXPECT_EQ(BigInt(images.size()), factorial(n));
    }
}

TEST(Permutation, LeftToRightMinima) {
    EXPECT_EQ(ltr_minima_values(P("739465281")), (std::vector<int>{7, 3, 2, 1}));
    EXPECT_EQ(ltr_minima_values(Permutation::identity(5)), (std::vector<int>{1}));
    EXPECT_EQ(ltr_minima_values(P("213")), ltr_minima_values(P("231")));
}

TEST(Permutation, ShiftedShuffle) {
    auto s = shifted_shuffle(P("1"), P("1"));
    EXPECT_EQ(std::set<Permutation>(s.begin(), s.end()), (std::set<Permutation>{P("12"), P("21")}));

    auto check = [](const char* a, const char* b, std::size_t expected) {
        auto got = shifted_shuffle(P(a), P(b));
        std::set<Permutation> got_set(got.begin(), got.end());
        EXPECT_EQ(got.size(), expected);
        EXPECT_EQ(got_set.size(), expected);
        std::set<Permutation> want;
        for (const auto& w : oracle::shifted_shuffle(P(a).word(), P(b).word())) want.insert(Permutation(w));
        EXPECT_EQ(got_set, want);
    };
    check("21", "3124", 15);
    check("213", "1324", 35);
    auto x = shifted_shuffle(P("21"), P("3124"));
    EXPECT_NE(std::find(x.begin(), x.end(), P("215346")), x.end());
}

TEST(Permutation, CanonicalRepresentative) {
    EXPECT_EQ(canonical_representative(Composition{2, 3, 2}), P("2153476"));
    EXPECT_EQ(canonical_representative(Composition{4}), P("4123"));
    EXPECT_EQ(canonical_representative(Composition{1, 1, 1}), P("123"));
    EXPECT_THROW(canonical_representative(Composition{}), std::invalid_argument);
    for (int n = 1; n <= 7; ++n)
        for (const auto& c : compositions_lex(n)) ASSERT_EQ(saillance_composition(canonical_representative(c)), c);
}
