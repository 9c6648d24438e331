#include <gtest/gtest.h>

#include <map>
#include <set>

#include <ncsf/equivalences.hpp>

#include "oracles.hpp"

using namespace ncsf;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::set<Permutation> perms(std::initializer_list<const char*> ws) {
    std::set<Permutation> out;
    for (auto w : ws) out.insert(P(w));
    return out;
}

const std::vector<std::pair<std::string, std::string>> kEq1{{"312", "321"}, {"123", "132"}};
const std::vector<std::pair<std::string, std::string>> kEq2{{"213", "231"}, {"123", "132"}};
const std::vector<std::pair<std::string, std::string>> kMirror{{"321", "231"}, {"312", "132"}};

std::set<Permutation> naive_closure(const Permutation& p, const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::set<Permutation> out;
    for (const auto& s : oracle::closure(oracle::digits(p.word()), pairs)) out.insert(parse_permutation(s));
    return out;
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Equivalences, Relations) {
    EXPECT_EQ(PatternRelation::by_name("eq2"), PatternRelation::eq2());
    EXPECT_THROW(PatternRelation::by_name("eq3"), std::invalid_argument);
    for (const auto& rel : {PatternRelation::eq1(), PatternRelation::eq2(), PatternRelation::mirror()})
        for (const auto& [a, b] : rel.pairs) EXPECT_NE(a, b);
}

TEST(Equivalences, ClosureExamples) {
    EXPECT_EQ(pattern_closure(P("321"), PatternRelation::eq1()), perms({"312", "321"}));
    EXPECT_EQ(pattern_closure(P("213"), PatternRelation::eq2()), perms({"213", "231"}));
    EXPECT_EQ(pattern_closure(P("123"), PatternRelation::eq1()), perms({"123", "132"}));
}

TEST(Equivalences, ClosureMatchesStringRewriting) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_permutations(n)) {
            ASSERT_EQ(pattern_closure(p, PatternRelation::eq1()), naive_closure(p, kEq1)) << p;
            ASSERT_EQ(pattern_closure(p, PatternRelation::eq2()), naive_closure(p, kEq2)) << p;
            ASSERT_EQ(pattern_closure(p, PatternRelation::mirror()), naive_closure(p, kMirror)) << p;
        }
}

TEST(Equivalences, WChain) {
    EXPECT_EQ(w_chain(P("532498617")), (std::vector<int>{1, 3, 5, 8}));
    EXPECT_EQ(w_chain(P("321")), (std::vector<int>{1, 3}));
    EXPECT_EQ(w_chain(P("1")), (std::vector<int>{1}));
}

TEST(Equivalences, InsertionExamples) {
    auto ins = insert_eq1(P("532498617"));
    EXPECT_EQ(ins.P.to_parenthesized(), "5(2(6 7 8 9(1)) 3 4)");
    EXPECT_EQ(ins.Q.to_parenthesized(), "1(2 3(5(8) 6 7 9) 4)");
    EXPECT_EQ(ins.P.shape(), ins.Q.shape());

    auto ins2 = insert_eq2(P("739465281"));
    EXPECT_EQ(ins2.P.to_parenthesized(), "7(3(2(1) 4 5 6) 8 9)");
    EXPECT_EQ(ins2.Q.to_parenthesized(), "1(2(4 5 6 7(9)) 3 8)");

    EXPECT_EQ(as_set(linear_extensions(insert_P(P("123")))), perms({"123", "132"}));
    EXPECT_EQ(insert_P(P("1")).size(), 1u);
    EXPECT_EQ(as_set(linear_extensions(insert_P2(P("231")))), perms({"213", "231"}));
    std::set<Permutation> starts_with_one;
    for (const auto& p : all_permutations(4))
        if (p[0] == 1) starts_with_one.insert(p);
    EXPECT_EQ(as_set(linear_extensions(insert_P2(P("1234")))), starts_with_one);
}

TEST(Equivalences, InsertionTheorems) {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::pair<std::string, std::string>> seen1, seen2;
        for (const auto& p : all_permutations(n)) {
            auto a = insert_eq1(p);
            auto b = insert_eq2(p);
            const auto cls = pattern_closure(p, PatternRelation::eq1());
            ASSERT_EQ(as_set(linear_extensions(a.P)), cls) << p;
            ASSERT_EQ(as_set(linear_extensions(b.P)), pattern_closure(p, PatternRelation::eq2())) << p;
            ASSERT_EQ(hook_count(a.P), BigInt(cls.size()));
            ASSERT_EQ(a.P.shape(), a.Q.shape());
            ASSERT_EQ(b.P.shape(), b.Q.shape());
            for (const auto* q : {&a.Q, &b.Q})
                for (int v : q->labels())
                    if (auto par = q->parent(v)) ASSERT_LT(*par, v);
            for (const auto* x : {&a, &b})
                for (const auto& [v, pos] : x->position)
                    if (auto par = x->P.parent(v)) ASSERT_EQ(x->Q.parent(pos), x->position.at(*par)) << p;
            ASSERT_TRUE(seen1.insert({a.P.to_parenthesized(), a.joint()}).second) << p;
            ASSERT_TRUE(seen2.insert({b.P.to_parenthesized(), b.joint()}).second) << p;
        }
    }
}

TEST(Equivalences, TwoLabelingsPerShape) {
    for (int n = 2; n <= 6; ++n) {
        std::map<std::string, std::set<std::string>> by_shape;
        for (const auto& p : all_permutations(n)) {
            auto f = insert_P(p);
            by_shape[f.shape()].insert(f.to_parenthesized());
        }
        for (const auto& [shape, labelings] : by_shape) EXPECT_EQ(labelings.size(), 2u) << shape;
    }
}

TEST(Equivalences, CensusSmall) {
    auto c1 = class_census(1, PatternRelation::eq1());
    EXPECT_EQ(c1.count(), 1u);
    auto c3 = class_census(3, PatternRelation::eq1());
    EXPECT_EQ(c3.count(), 4u);
    EXPECT_EQ(c3.sizes(), (std::multiset<BigInt>{1, 1, 2, 2}));
    EXPECT_THROW(class_census(9, PatternRelation::eq1(), CensusMethod::BFS), DegreeBoundExceeded);
}

TEST(Equivalences, CensusCounts) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& rel : {PatternRelation::eq1(), PatternRelation::eq2(), PatternRelation::mirror()}) {
            auto bfs = class_census(n, rel, CensusMethod::BFS);
            ASSERT_EQ(bfs.count(), std::size_t{1} << (n - 1)) << rel.name << n;
            auto ins = class_census(n, rel, CensusMethod::Insertion);
            ASSERT_EQ(bfs.classes, ins.classes) << rel.name << n;
        }
    for (int n = 9; n <= 12; ++n) EXPECT_EQ(class_census(n, PatternRelation::eq1(), CensusMethod::Insertion).count(), std::size_t{1} << (n - 1));
}

TEST(Equivalences, ClassOfPaperExample) {
    const auto p = P("532498617");
    EXPECT_EQ(hook_count(insert_P(p)), 3360);
    EXPECT_EQ(pattern_closure(p, PatternRelation::eq1()).size(), 3360u);
    auto census = class_census(9, PatternRelation::eq1(), CensusMethod::Insertion);
    EXPECT_EQ(census.count(), 256u);
    EXPECT_GE(census.sizes().count(3360), 1u);
}

TEST(Equivalences, SizeMultisetsCoincide) {
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(class_census(n, PatternRelation::eq1()).sizes(), class_census(n, PatternRelation::eq2()).sizes()) << n;
}

TEST(Equivalences, ClassesByFirstLetter) {
    auto three = classes_by_first_letter(3);
    EXPECT_EQ(three, (std::map<int, BigInt>{{1, 1}, {2, 2}, {3, 1}}));
    EXPECT_EQ(classes_by_first_letter(8).at(4), 35);
    for (int n = 1; n <= 8; ++n) {
        std::map<int, BigInt> brute;
        for (int k = 1; k <= n; ++k) brute[k] = 0;
        for (const auto& c : class_census(n, PatternRelation::eq1()).classes) brute[c.minimum[0]] += 1;
        EXPECT_EQ(classes_by_first_letter(n), brute);
        for (int k = 1; k <= n; ++k) EXPECT_EQ(brute[k], binomial(n - 1, k - 1));
    }
}

TEST(Equivalences, VPermutation) {
    EXPECT_EQ(v_permutation(P("231")), P("213"));
    EXPECT_EQ(v_permutation(Permutation::identity(6)), Permutation::identity(6));
    const auto p = P("739465281");
    const auto cls = pattern_closure(p, PatternRelation::eq2());
    EXPECT_EQ(v_permutation(p), *cls.begin());
    for (int n = 1; n <= 7; ++n)
        for (const auto& c : class_census(n, PatternRelation::eq2()).classes)
            for (const auto& q : pattern_closure(c.minimum, PatternRelation::eq2())) ASSERT_EQ(v_permutation(q), c.minimum);
}

TEST(Equivalences, ClassBijection) {
    auto b3 = class_bijection(3);
    EXPECT_EQ(b3.classes.at(P("312")), P("213"));
    for (int n = 1; n <= 6; ++n) {
        auto b = class_bijection(n);
        EXPECT_EQ(b.classes.size(), std::size_t{1} << (n - 1));
        EXPECT_EQ(BigInt(b.permutations.size()), factorial(n));
        std::set<Permutation> images;
        for (const auto& [s, t] : b.permutations) images.insert(t);
        EXPECT_EQ(images.size(), b.permutations.size());
        for (const auto& [m1, m2] : b.classes)
            EXPECT_EQ(pattern_closure(m1, PatternRelation::eq1()).size(), pattern_closure(m2, PatternRelation::eq2()).size());
        for (const auto& [s, t] : b.permutations)
            ASSERT_EQ(insert_Q2(t), insert_Q(s)) << s;
        for (const auto& [s, t] : b.permutations)
            ASSERT_EQ(*pattern_closure(t, PatternRelation::eq2()).begin(),
                      b.classes.at(*pattern_closure(s, PatternRelation::eq1()).begin()));
    }
}

TEST(Equivalences, SaillanceCorrespondence) {
    for (int n = 1; n <= 7; ++n) EXPECT_TRUE(saillance_correspondence_check(n)) << n;
    EXPECT_FALSE(saillance_correspondence_check(3, false));
}
