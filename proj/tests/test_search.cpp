/**************************************************************************
 * test_search.cpp
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

#include "nisp/codes_ff.hpp"
#include "nisp/codes_psk.hpp"
#include "nisp/search.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace nisp;

namespace {

CandidateSet from_code(const CodeC& code) {
    CandidateSet c{code.alphabet, code.m, code.subspaces, {}};
    const CycRing ring(std::max<std::uint32_t>(code.alphabet.n, 1));
    for (const auto& s : code.subspaces)
        c.keys.push_back(*canonical_key(s.gen, ring));
    return c;
}

DisjointnessGraph complete(std::size_t n) {
    DisjointnessGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

const CandidateSet& qpsk4() {
    static const CandidateSet c = enumerate_planes({4, false}, 4);
    return c;
}

const DisjointnessGraph& qpsk4_graph() {
    static const DisjointnessGraph g = build_graph(qpsk4());
    return g;
}

}  // namespace

TEST(Enumerate, BinaryPlaneInTwoDimensions) {
    const CandidateSet c = enumerate_planes({2, false}, 2);
    EXPECT_EQ(c.planes.size(), 1u);
}

TEST(Enumerate, PinnedCounts) {
    // Eight projective +-1 vectors in C^4, and every plane contains exactly
    // two of them, so C(8, 2) planes.
    EXPECT_EQ(enumerate_planes({2, false}, 4).planes.size(), 28u);
    // Summing 1 / C(k, 2) over pairs of the 64 projective QPSK vectors, k the
    // number of those vectors in the spanned plane, also gives 1456.
    EXPECT_EQ(qpsk4().planes.size(), 1456u);
}

TEST(Enumerate, KeysAreUniqueAndDeterministic) {
    const CandidateSet a = enumerate_planes({3, true}, 3);
    const CandidateSet b = enumerate_planes({3, true}, 3);
    EXPECT_EQ(a.keys, b.keys);
    EXPECT_EQ(std::set<std::string>(a.keys.begin(), a.keys.end()).size(), a.keys.size());
    const CycRing ring(3);
    for (const auto& p : a.planes)
        EXPECT_EQ(cyc_rank(to_cyc(p.gen, ring)), 2u);
}

TEST(Enumerate, Errors) {
    EXPECT_ERRC(enumerate_planes({0, false}, 4), Errc::InvalidArgument);
    EXPECT_ERRC(enumerate_planes({4, false}, 4, 100), Errc::LimitExceeded);
    EXPECT_ERRC(enumerate_planes({2, false}, 1), Errc::InvalidArgument);
}

TEST(Canonical, InvariantUnderInvertibleLeftFactors) {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> small(-2, 2);
    for (std::uint32_t n : {2u, 4u, 8u}) {
        const CycRing ring(n);
        for (int t = 0; t < 60; ++t) {
            Matrix<SymbolC> g(2, 4, SymbolC::zero());
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    g(i, j) = SymbolC::root(static_cast<std::uint32_t>(rng() % n));
            const CycMatrix x = to_cyc(g, ring);
            if (cyc_rank(x) < 2)
                continue;
            CycMatrix tm(2, 2, CycInt(ring));
            do {
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) {
                        std::vector<BigInt> c(ring.degree());
                        for (auto& v : c)
                            v = small(rng);
                        tm(i, j) = CycInt(ring, c);
                    }
            } while (cyc_det(tm).is_zero());
            CycMatrix y(2, 4, CycInt(ring));
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    y(i, j) = tm(i, 0) * x(0, j) + tm(i, 1) * x(1, j);
            EXPECT_EQ(canonical_key(y), canonical_key(x));
        }
    }
}

TEST(Canonical, DistinguishesDifferentPlanes) {
    const CandidateSet& c = qpsk4();
    const CycRing ring(4);
    std::mt19937_64 rng(59);
    for (int t = 0; t < 300; ++t) {
        const std::size_t i = rng() % c.planes.size(), j = rng() % c.planes.size();
        const bool same = cyc_rank(CycMatrix::stack(to_cyc(c.planes[i].gen, ring), to_cyc(c.planes[j].gen, ring))) == 2;
        EXPECT_EQ(same, i == j);
    }
}

TEST(BuildGraph, KnownValues) {
    const CodeC bin = lift_code(spread_construct(field_for_order(2), 4, 2));
    const DisjointnessGraph k5 = build_graph(from_code(bin));
    EXPECT_EQ(k5.edge_count(), 10u);

    CodeC one = bin;
    one.subspaces.resize(1);
    EXPECT_EQ(build_graph(from_code(one)).edge_count(), 0u);

    // Two embeddings of the base plane are adjacent.
    CodeC two{{4, false}, 4, 2, {}, {}};
    for (Embedding e : {Embedding{0, 0}, Embedding{1, 3}})
        two.subspaces.push_back(psk_embed(psk_base(2), e, 2));
    EXPECT_TRUE(build_graph(from_code(two)).adjacent(0, 1));
}

TEST(BuildGraph, ModularScreenAgreesWithExactRank) {
    const CandidateSet& c = qpsk4();
    const DisjointnessGraph& g = qpsk4_graph();
    const CycRing ring(4);
    std::mt19937_64 rng(61);
    for (int t = 0; t < 3000; ++t) {
        const std::size_t i = rng() % c.planes.size();
        std::size_t j = rng() % (c.planes.size() - 1);
        j += j >= i ? 1 : 0;
        const bool exact =
            cyc_rank(CycMatrix::stack(to_cyc(c.planes[i].gen, ring), to_cyc(c.planes[j].gen, ring))) == 4;
        ASSERT_EQ(g.adjacent(i, j), exact) << i << " " << j;
        ASSERT_EQ(g.adjacent(j, i), exact);
    }
}

TEST(BuildGraph, ParallelMatchesSerialAndHashIsStable) {
    const CandidateSet c = enumerate_planes({2, true}, 4);
    const DisjointnessGraph a = build_graph(c, 1), b = build_graph(c, 3);
    EXPECT_EQ(a.hash(), b.hash());
    EXPECT_EQ(a.edge_count(), b.edge_count());
}

TEST(MaxClique, KnownValues) {
    const auto k5 = max_clique_exact(complete(5), std::nullopt);
    EXPECT_EQ(k5.vertices.size(), 5u);
    EXPECT_TRUE(k5.exact);
    const auto edgeless = max_clique_exact(DisjointnessGraph(7), std::nullopt);
    EXPECT_EQ(edgeless.vertices.size(), 1u);
    EXPECT_EQ(max_clique_exact(DisjointnessGraph(0), std::nullopt).vertices.size(), 0u);
    EXPECT_ERRC(max_clique_exact(DisjointnessGraph(20), std::nullopt, 10), Errc::TooLarge);
}

TEST(MaxClique, BinaryBoundsCoincide) {
    const CandidateSet c = enumerate_planes({2, false}, 4);
    const auto res = max_clique_exact(build_graph(c), std::nullopt);
    EXPECT_TRUE(res.exact);
    EXPECT_EQ(res.vertices.size(), 4u);
    EXPECT_TRUE(verify_lift(clique_code(c, res.vertices)).passed());
}

TEST(MaxClique, AgreesWithSubsetEnumeration) {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 30;
        const auto adj = oracle::random_graph(n, 0.2 + 0.07 * (t % 10), rng);
        const auto g = oracle::to_graph(adj);
        const auto res = max_clique_exact(g, std::nullopt);
        EXPECT_TRUE(res.exact);
        EXPECT_TRUE(is_clique(g, res.vertices));
        EXPECT_EQ(res.vertices.size(), oracle::brute_max_clique(adj)) << "graph " << t;
    }
}

TEST(MaxClique, ZeroBudgetIsNotExact) {
    const auto res = max_clique_exact(qpsk4_graph(), std::chrono::milliseconds(0));
    EXPECT_FALSE(res.exact);
    EXPECT_TRUE(is_clique(qpsk4_graph(), res.vertices));
}

TEST(Heuristic, SeedsAndBudgets) {
    const auto k5 = clique_heuristic(complete(5), {}, 10, 1);
    EXPECT_EQ(k5.vertices.size(), 5u);
    EXPECT_FALSE(k5.exact);

    const CandidateSet& c = qpsk4();
    const auto seed = locate(c, psk_construct(2, 4));
    ASSERT_EQ(seed.size(), 16u);
    EXPECT_TRUE(is_clique(qpsk4_graph(), seed));
    const auto kept = clique_heuristic(qpsk4_graph(), seed, 0, 1);
    EXPECT_EQ(kept.vertices.size(), 16u);
    const auto grown = clique_heuristic(qpsk4_graph(), seed, 2000, 1);
    EXPECT_GE(grown.vertices.size(), 16u);
    EXPECT_TRUE(verify_lift(clique_code(c, grown.vertices)).passed());

    EXPECT_ERRC(clique_heuristic(DisjointnessGraph(3), {0, 1}, 5), Errc::InvalidSeed);
}

TEST(Heuristic, DeterministicAndMonotoneInBudget) {
    const auto& g = qpsk4_graph();
    std::size_t last = 0;
    for (std::uint64_t moves : {0u, 1u, 10u, 100u, 1000u, 3000u}) {
        const auto a = clique_heuristic(g, {}, moves, 99);
        const auto b = clique_heuristic(g, {}, moves, 99);
        EXPECT_EQ(a.vertices, b.vertices);
        EXPECT_GE(a.vertices.size(), last);
        last = a.vertices.size();
    }
    EXPECT_GE(last, 16u);
}

TEST(Locate, RejectsForeignSeeds) {
    const CandidateSet& c = qpsk4();
    EXPECT_ERRC(locate(c, psk_construct(2, 6)), Errc::InvalidSeed);
    EXPECT_ERRC(locate(c, psk_construct(1, 4)), Errc::InvalidSeed);
    CodeC bad = psk_construct(2, 4);
    bad.subspaces[0].gen(1, 0) = bad.subspaces[0].gen(0, 0);
    bad.subspaces[0].gen(1, 1) = bad.subspaces[0].gen(0, 1);
    bad.subspaces[0].gen(1, 2) = bad.subspaces[0].gen(0, 2);
    bad.subspaces[0].gen(1, 3) = bad.subspaces[0].gen(0, 3);
    EXPECT_ERRC(locate(c, bad), Errc::InvalidSeed);
}
