/**************************************************************************
 * codes_psk.hpp
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

#pragma once

// Nonintersecting planes over the 2^r-th roots of unity.
//
// Starting from the plane [1 1; 1 -1] in C^2, every plane (v1; v2) in C^m
// is embedded into C^(m+2) in 2^(2r) ways,
//
//     [ v1  u^a      u^b        ]
//     [ v2  u^(a+b)  u^(a+2b+1) ]      0 <= a, b < 2^r,
//
// which gives 2^((m-2) r) planes in C^m. Two embeddings of one plane meet
// only in 0 iff the 2x2 determinant of their difference corner is nonzero.

#include "lift.hpp"

namespace nisp {

struct PskParams {
    std::uint32_t r = 1;
    std::size_t m = 2;

    std::uint32_t order() const { return std::uint32_t{1} << r; }
};

struct Embedding {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
};

inline void check_r(std::uint32_t r) {
    if (r < 1 || r > 16)
        throw Error(Errc::InvalidArgument, "r must lie in [1, 16]");
}

/// 2^((m-1) r - 1).
inline BigInt psk_upper_bound(std::uint32_t r, std::size_t m) {
    check_r(r);
    if (m < 2)
        throw Error(Errc::InvalidArgument, "m must be at least 2");
    return BigInt(1) << ((m - 1) * r - 1);
}

/// 2^((m-2) r), the size of the recursive construction.
inline BigInt psk_lower_bound(std::uint32_t r, std::size_t m) {
    check_r(r);
    if (m < 2 || m % 2 != 0)
        throw Error(Errc::OddLength, "m must be even and at least 2");
    return BigInt(1) << ((m - 2) * r);
}

inline SubspaceC psk_base(std::uint32_t r) {
    check_r(r);
    const std::uint32_t minus_one = std::uint32_t{1} << (r - 1);
    Matrix<SymbolC> g(2, 2, SymbolC::root(0));
    g(1, 1) = SymbolC::root(minus_one);
    return {std::move(g)};
}

/// Generator of the (a, b) embedding of `plane` into two more coordinates.
inline SubspaceC psk_embed(const SubspaceC& plane, Embedding e, std::uint32_t r) {
    const std::uint32_t n = std::uint32_t{1} << r;
    const std::size_t m = plane.gen.cols();
    Matrix<SymbolC> g(2, m + 2, SymbolC::zero());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t c = 0; c < m; ++c)
            g(i, c) = plane.gen(i, c);
    g(0, m) = SymbolC::root(e.a % n);
    g(0, m + 1) = SymbolC::root(e.b % n);
    g(1, m) = SymbolC::root((e.a + e.b) % n);
    g(1, m + 1) = SymbolC::root((e.a + 2 * e.b + 1) % n);
    return {std::move(g)};
}

inline CodeC psk_extend(const CodeC& code, std::uint32_t r) {
    check_r(r);
    if (code.m % 2 != 0)
        throw Error(Errc::OddLength, "PSK codes need even length");
    if (code.mt != 2)
        throw Error(Errc::InvalidArgument, "PSK construction is for planes (M_t = 2)");
    const std::uint32_t n = std::uint32_t{1} << r;
    CodeC out;
    out.alphabet = {n, false};
    out.m = code.m + 2;
    out.mt = 2;
    out.subspaces.reserve(code.subspaces.size() * n * n);
    for (const auto& plane : code.subspaces)
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                out.subspaces.push_back(psk_embed(plane, {a, b}, r));
    out.provenance = code.provenance;
    return out;
}

inline CodeC psk_construct(std::uint32_t r, std::size_t m) {
    check_r(r);
    if (m < 2 || m % 2 != 0)
        throw Error(Errc::OddLength, "m must be even and at least 2");
    if ((m - 2) * r > 24)
        throw Error(Errc::SizeLimitExceeded, "construction would exceed 2^24 planes");
    CodeC code;
    code.alphabet = {std::uint32_t{1} << r, false};
    code.m = 2;
    code.mt = 2;
    code.subspaces.push_back(psk_base(r));
    code.provenance = {{"construction", "psk"}, {"r", r}, {"m", m}, {"base", "[1 1; 1 -1]"},
                       {"embedding", "(v1, u^a, u^b; v2, u^(a+b), u^(a+2b+1))"}};
    while (code.m < m)
        code = psk_extend(code, r);
    return code;
}

/// Whether two embeddings of one plane with corners `x`, `y` are nonintersecting.
inline bool embedding_disjoint(const CycMatrix& x, const CycMatrix& y) {
    if (x.rows() != 2 || x.cols() != 2 || y.rows() != 2 || y.cols() != 2)
        throw Error(Errc::InvalidArgument, "embedding corners are 2x2");
    CycMatrix d = y;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            d(i, j) = y(i, j) - x(i, j);
    return !cyc_det(d).is_zero();
}

/// 2x2 corner appended by the (a, b) embedding, over Z[u], u^(2^r) = 1.
inline CycMatrix embedding_corner(Embedding e, const CycRing& ring) {
    CycMatrix c(2, 2, CycInt(ring));
    c(0, 0) = root_power(ring, e.a);
    c(0, 1) = root_power(ring, e.b);
    c(1, 0) = root_power(ring, std::int64_t{e.a} + e.b);
    c(1, 1) = root_power(ring, std::int64_t{e.a} + 2 * std::int64_t{e.b} + 1);
    return c;
}

/// Determinant of the difference corner between embeddings (a, b) and (c, d).
inline CycInt embedding_determinant(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
                                    std::uint32_t r) {
    check_r(r);
    const CycRing ring(std::uint32_t{1} << r);
    const CycMatrix x = embedding_corner({a, b}, ring);
    const CycMatrix y = embedding_corner({c, d}, ring);
    CycMatrix diff(2, 2, CycInt(ring));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            diff(i, j) = y(i, j) - x(i, j);
    return cyc_det(diff);
}

/// The two products whose difference is the embedding determinant:
///   u^(2c+2d+1) (1 - u^(a-c)) (1 - u^((a-c)+2(b-d)))
///   u^(c+2d)    (1 - u^(b-d)) (1 - u^((a-c)+(b-d)))
inline std::pair<CycInt, CycInt> embedding_determinant_terms(std::int64_t a, std::int64_t b, std::int64_t c,
                                                             std::int64_t d, std::uint32_t r) {
    check_r(r);
    const CycRing ring(std::uint32_t{1} << r);
    const CycInt one = CycInt::integer(ring, 1);
    auto one_minus = [&](std::int64_t k) { return one - root_power(ring, k); };
    CycInt t1 = root_power(ring, 2 * c + 2 * d + 1) * one_minus(a - c) * one_minus((a - c) + 2 * (b - d));
    CycInt t2 = root_power(ring, c + 2 * d) * one_minus(b - d) * one_minus((a - c) + (b - d));
    return {std::move(t1), std::move(t2)};
}

/// True iff the embedding determinant for (a, b) vs (c, d) vanishes.
inline bool criterion_zero(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d, std::uint32_t r) {
    const std::uint32_t n = std::uint32_t{1} << r;
    if (a >= n || b >= n || c >= n || d >= n)
        throw Error(Errc::InvalidArgument, "exponents must lie in [0, 2^r)");
    return embedding_determinant(a, b, c, d, r).is_zero();
}

}  // namespace nisp
