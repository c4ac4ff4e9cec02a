/**************************************************************************
 * test_lift.cpp
 *
 * Copyright 2026 The nisp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "nisp/lift.hpp"
#include "support.hpp"

#include <set>

using namespace nisp;

TEST(LiftSymbol, KnownValues) {
    const FieldSpec gf8 = field_new(2, 3, {1, 1, 0, 1});
    EXPECT_EQ(lift_symbol(gf8.pow(gf8.alpha(), 5), gf8), SymbolC::root(5));
    EXPECT_EQ(lift_symbol(gf8.zero(), gf8), SymbolC::zero());
    const FieldSpec gf2 = field_for_order(2);
    EXPECT_EQ(lift_symbol(gf2.one(), gf2), SymbolC::root(0));
}

TEST(LiftSymbol, InjectiveAndMultiplicative) {
    for (auto q : {4u, 8u, 9u, 16u}) {
        const FieldSpec f = field_for_order(q);
        std::set<SymbolC> images;
        for (std::uint32_t a = 0; a < q; ++a)
            images.insert(lift_symbol({a}, f));
        EXPECT_EQ(images.size(), q);
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b) {
                const auto la = lift_symbol({a}, f).exponent(), lb = lift_symbol({b}, f).exponent();
                EXPECT_EQ(lift_symbol(f.mul({a}, {b}), f), SymbolC::root((la + lb) % (q - 1)));
            }
    }
}

TEST(LiftCode, BinarySpreadBecomesZeroOneCode) {
    const CodeFF ff = spread_construct(field_for_order(2), 4, 2);
    const CodeC c = lift_code(ff);
    EXPECT_EQ(c.alphabet, (Alphabet{1, true}));
    ASSERT_EQ(c.subspaces.size(), 5u);
    for (std::size_t s = 0; s < 5; ++s)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                EXPECT_EQ(c.subspaces[s].gen(i, j),
                          ff.subspaces[s].gen.entries(i, j).value ? SymbolC::root(0) : SymbolC::zero());
    const auto rep = verify_lift(c);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.pairs_checked, 10u);
    EXPECT_EQ(rep.method, "exact-cyclotomic");
}

TEST(LiftCode, Gf4SpreadUsesAtMostQSymbols) {
    const CodeC c = lift_code(spread_construct(field_for_order(4), 4, 2));
    EXPECT_EQ(c.subspaces.size(), 17u);
    EXPECT_EQ(c.alphabet.n, 3u);
    std::set<SymbolC> used;
    for (const auto& s : c.subspaces)
        for (std::size_t i = 0; i < s.gen.rows(); ++i)
            for (std::size_t j = 0; j < s.gen.cols(); ++j) {
                used.insert(s.gen(i, j));
                EXPECT_TRUE(c.alphabet.contains(s.gen(i, j)));
            }
    EXPECT_LE(used.size(), 4u);
    EXPECT_TRUE(verify_lift(c).passed());
}

TEST(LiftCode, EverySuiteSpreadSurvivesLifting) {
    for (auto [q, m, mt] : std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>>{
             {2, 6, 3}, {3, 4, 2}, {5, 2, 1}, {9, 2, 1}, {2, 3, 1}, {7, 2, 2}}) {
        const CodeC c = lift_code(spread_construct(field_for_order(q), m, mt));
        EXPECT_TRUE(verify_lift(c).passed()) << q << " " << m << " " << mt;
    }
}

TEST(LiftCode, EmptyAndUnverified) {
    const CodeFF ff = spread_construct(field_for_order(3), 2, 1);
    CodeFF empty = ff;
    empty.subspaces.clear();
    EXPECT_TRUE(lift_code(empty).subspaces.empty());
    CodeFF dup = ff;
    dup.subspaces.push_back(ff.subspaces[0]);
    EXPECT_ERRC(lift_code(dup), Errc::UnverifiedInput);
}

TEST(VerifyLift, RepeatedSubspaceFails) {
    CodeC c = lift_code(spread_construct(field_for_order(8), 2, 1));
    c.subspaces.push_back(c.subspaces[3]);
    const auto rep = verify_lift(c, 2);
    ASSERT_EQ(rep.failing_pairs.size(), 1u);
    EXPECT_EQ(rep.failing_pairs[0], (IndexPair{3, c.subspaces.size() - 1}));
}

TEST(VerifyLift, CatchesDependenceInvisibleOverTheIntegers) {
    // (1, z) and (z, z^2) in Q(z_3)^2 span the same line.
    CodeC c;
    c.alphabet = {3, false};
    c.m = 2;
    c.mt = 1;
    Matrix<SymbolC> a(1, 2, SymbolC::root(0)), b(1, 2, SymbolC::root(1));
    a(0, 1) = SymbolC::root(1);
    b(0, 1) = SymbolC::root(2);
    c.subspaces = {{a}, {b}};
    EXPECT_FALSE(verify_lift(c).passed());
}
