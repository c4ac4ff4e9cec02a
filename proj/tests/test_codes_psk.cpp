/**************************************************************************
 * test_codes_psk.cpp
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

#include "nisp/codes_psk.hpp"
#include "nisp/geometry.hpp"
#include "support.hpp"

#include <complex>
#include <numbers>
#include <random>
#include <set>

using namespace nisp;

namespace {

std::complex<double> mu(std::uint32_t r, std::int64_t e) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(1u << r));
}

/// Floating determinant of the difference of two embedding corners.
std::complex<double> numeric_corner_det(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
                                        std::uint32_t r) {
    const std::complex<double> x00 = mu(r, a), x01 = mu(r, b), x10 = mu(r, a + b), x11 = mu(r, a + 2 * b + 1);
    const std::complex<double> y00 = mu(r, c), y01 = mu(r, d), y10 = mu(r, c + d), y11 = mu(r, c + 2 * d + 1);
    return (y00 - x00) * (y11 - x11) - (y01 - x01) * (y10 - x10);
}

}  // namespace

TEST(PskBounds, Values) {
    EXPECT_EQ(psk_upper_bound(2, 4), 32);
    EXPECT_EQ(psk_upper_bound(1, 4), 4);
    EXPECT_EQ(psk_upper_bound(3, 4), 256);
    EXPECT_EQ(psk_upper_bound(3, 8), 1048576);
    EXPECT_EQ(psk_lower_bound(3, 8), 262144);
    EXPECT_ERRC(psk_upper_bound(0, 4), Errc::InvalidArgument);
    EXPECT_ERRC(psk_upper_bound(1, 1), Errc::InvalidArgument);
    EXPECT_ERRC(psk_lower_bound(1, 5), Errc::OddLength);
}

TEST(PskBounds, CountingArgument) {
    // |A|^m vectors, each plane owns 2|A| of them.
    for (std::uint32_t r = 1; r <= 6; ++r)
        for (std::size_t m = 2; m <= 12; ++m) {
            BigInt all = 1;
            for (std::size_t i = 0; i < m; ++i)
                all *= BigInt(1) << r;
            EXPECT_EQ(psk_upper_bound(r, m), all / (BigInt(2) << r));
            if (m % 2 == 0) {
                EXPECT_LE(psk_lower_bound(r, m), psk_upper_bound(r, m));
            }
        }
}

TEST(PskBase, EncodesMinusOne) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const SubspaceC b = psk_base(r);
        EXPECT_EQ(b.gen(0, 0), SymbolC::root(0));
        EXPECT_EQ(b.gen(0, 1), SymbolC::root(0));
        EXPECT_EQ(b.gen(1, 0), SymbolC::root(0));
        EXPECT_EQ(b.gen(1, 1), SymbolC::root(1u << (r - 1)));
    }
    const CycRing r2(2);
    EXPECT_EQ(cyc_det(to_cyc(psk_base(1).gen, r2)), CycInt::integer(r2, -2));
}

TEST(PskExtend, OneBasePlane) {
    for (std::uint32_t r : {1u, 2u}) {
        CodeC base{{1u << r, false}, 2, 2, {psk_base(r)}, {}};
        const CodeC ext = psk_extend(base, r);
        EXPECT_EQ(ext.m, 4u);
        EXPECT_EQ(ext.subspaces.size(), std::size_t{1} << (2 * r));
        const std::uint32_t n = 1u << r;
        std::set<std::vector<SymbolC>> corners;
        for (const auto& s : ext.subspaces) {
            const auto a = s.gen(0, 2).exponent(), b = s.gen(0, 3).exponent();
            EXPECT_EQ(s.gen(1, 2), SymbolC::root((a + b) % n));
            EXPECT_EQ(s.gen(1, 3), SymbolC::root((a + 2 * b + 1) % n));
            corners.insert({s.gen(0, 2), s.gen(0, 3)});
        }
        EXPECT_EQ(corners.size(), ext.subspaces.size());
    }
    CodeC empty{{4, false}, 2, 2, {}, {}};
    EXPECT_TRUE(psk_extend(empty, 2).subspaces.empty());
    CodeC odd{{4, false}, 3, 2, {}, {}};
    EXPECT_ERRC(psk_extend(odd, 2), Errc::OddLength);
}

TEST(PskConstruct, Counts) {
    EXPECT_EQ(psk_construct(1, 6).subspaces.size(), 16u);
    EXPECT_EQ(psk_construct(3, 6).subspaces.size(), 4096u);
    for (std::uint32_t r = 1; r <= 4; ++r)
        EXPECT_EQ(psk_construct(r, 2).subspaces.size(), 1u);
    EXPECT_ERRC(psk_construct(2, 5), Errc::OddLength);
    EXPECT_ERRC(psk_construct(2, 0), Errc::OddLength);
}

TEST(PskConstruct, BinaryCaseMeetsTheUpperBound) {
    for (std::size_t m = 2; m <= 12; m += 2)
        EXPECT_EQ(BigInt(psk_construct(1, m).subspaces.size()), psk_upper_bound(1, m));
}

TEST(PskConstruct, AlphabetIsExactlyTheRoots) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const CodeC c = psk_construct(r, 4);
        EXPECT_EQ(c.alphabet, (Alphabet{1u << r, false}));
        std::set<SymbolC> used;
        for (const auto& s : c.subspaces)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    ASSERT_FALSE(s.gen(i, j).is_zero());
                    used.insert(s.gen(i, j));
                }
        EXPECT_EQ(used.size(), std::size_t{1} << r);
    }
}

TEST(PskConstruct, ExactlyNonintersecting) {
    for (auto [r, m] : std::vector<std::pair<std::uint32_t, std::size_t>>{{1, 4}, {1, 6}, {2, 4}, {3, 4}, {1, 8}}) {
        const auto rep = verify_lift(psk_construct(r, m));
        EXPECT_TRUE(rep.passed()) << r << " " << m;
    }
}

TEST(Embedding, DisjointnessKnownValues) {
    const CycRing r4(4), r2(2);
    const CycMatrix x = embedding_corner({0, 0}, r4);
    EXPECT_FALSE(embedding_disjoint(x, x));
    EXPECT_TRUE(embedding_disjoint(x, embedding_corner({1, 0}, r4)));
    EXPECT_EQ(embedding_determinant(0, 0, 1, 0, 2), CycInt::integer(r4, 2));
    EXPECT_TRUE(embedding_disjoint(embedding_corner({0, 0}, r2), embedding_corner({1, 1}, r2)));
    EXPECT_ERRC(embedding_disjoint(CycMatrix(1, 2, CycInt(r4)), x), Errc::InvalidArgument);
}

TEST(Embedding, CriterionOnlyOnTheDiagonal) {
    std::size_t zero_count = 0;
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b)
            for (std::uint32_t c = 0; c < 4; ++c)
                for (std::uint32_t d = 0; d < 4; ++d) {
                    const bool z = criterion_zero(a, b, c, d, 2);
                    zero_count += z ? 1 : 0;
                    EXPECT_EQ(z, a == c && b == d);
                }
    EXPECT_EQ(zero_count, 16u);
    EXPECT_FALSE(criterion_zero(1, 6, 3, 2, 3));
    EXPECT_TRUE(criterion_zero(5, 7, 5, 7, 3));
    EXPECT_ERRC(criterion_zero(0, 0, 0, 8, 3), Errc::InvalidArgument);
}

TEST(Embedding, ExactAgreesWithFloatingDeterminant) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const std::uint32_t n = 1u << r;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    for (std::uint32_t d = 0; d < n; ++d) {
                        const CycInt det = embedding_determinant(a, b, c, d, r);
                        EXPECT_LT(std::abs(det.evaluate() - numeric_corner_det(a, b, c, d, r)), 1e-9);
                    }
    }
}

TEST(Embedding, DeterminantSplitsIntoTwoTerms) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const std::uint32_t n = 1u << r;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    for (std::uint32_t d = 0; d < n; ++d) {
                        const auto [t1, t2] = embedding_determinant_terms(a, b, c, d, r);
                        ASSERT_EQ(t1 - t2, embedding_determinant(a, b, c, d, r));
                        if (a == c && b == d)
                            continue;
                        // Off the diagonal the two terms have different
                        // (1 - u)-adic valuations, so they cannot cancel.
                        EXPECT_NE(nu_one_minus_mu(t1), nu_one_minus_mu(t2))
                            << "r=" << r << " (" << a << "," << b << ") vs (" << c << "," << d << ")";
                    }
    }
}
