/**************************************************************************
 * codes_ff.hpp
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

// Nonintersecting subspaces over GF(q): the counting bound and the spread
// obtained from the cosets of GF(q^mt)* inside GF(q^m)*.

#include "gf.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace nisp {

struct SubspaceFF {
    MatrixFF gen;  // mt x m
};

struct CodeFF {
    FieldSpec field;
    std::size_t m = 0;
    std::size_t mt = 0;
    std::vector<SubspaceFF> subspaces;
    nlohmann::json provenance = nlohmann::json::object();
};

struct BoundFF {
    BigInt value;     // floor((q^m - 1) / (q^mt - 1))
    bool attainable;  // mt | m
};

inline BoundFF bound_ff(std::uint64_t q, std::uint64_t m, std::uint64_t mt) {
    if (q < 2 || mt < 1 || mt > m)
        throw Error(Errc::InvalidArgument, "bound_ff needs q >= 2 and 1 <= mt <= m");
    const BigInt num = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m)) - 1;
    const BigInt den = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(mt)) - 1;
    return {num / den, m % mt == 0};
}

/// GF(q^m) realized as GF(q)[x]/(f) with f primitive of degree m over GF(q).
struct ExtensionField {
    FieldSpec base;
    std::vector<FieldElem> poly;  // m+1 coefficients, lowest degree first, monic

    std::size_t degree() const { return poly.size() - 1; }
};

/// Largest extension order GF(q^m) the spread constructor will walk.
inline constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 24;

inline bool is_primitive_over(const FieldSpec& base, const std::vector<FieldElem>& f) {
    return poly::is_irreducible(base, f) && poly::x_is_primitive(base, f);
}

/// Smallest primitive polynomial of degree m over `base`, ordered by the
/// integer sum(c_i q^i) of its non-leading coefficient indices.
inline std::vector<FieldElem> default_extension_poly(const FieldSpec& base, std::size_t m) {
    const std::uint64_t q = base.q();
    const std::uint64_t total = detail::checked_pow(q, m, kMaxExtensionOrder);
    if (total == 0)
        throw Error(Errc::SizeLimitExceeded, "extension field order exceeds 2^24");
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<FieldElem> f(m + 1);
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < m; ++i) {
            f[i] = {static_cast<std::uint32_t>(rest % q)};
            rest /= q;
        }
        f[m] = base.one();
        if (f[0].value == 0)
            continue;
        if (is_primitive_over(base, f))
            return f;
    }
    throw Error(Errc::InternalExactnessFailure, "no primitive extension polynomial found");
}

inline ExtensionField make_extension(const FieldSpec& base, std::size_t m,
                                     std::optional<std::vector<FieldElem>> poly = std::nullopt) {
    if (m < 1)
        throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
    if (detail::checked_pow(base.q(), m, kMaxExtensionOrder) == 0)
        throw Error(Errc::SizeLimitExceeded, "extension field order exceeds 2^24");
    if (!poly)
        return {base, default_extension_poly(base, m)};
    if (poly->size() != m + 1 || (*poly)[m] != base.one())
        throw Error(Errc::InvalidArgument, "extension polynomial must be monic of degree m");
    for (auto c : *poly)
        if (!base.contains(c))
            throw Error(Errc::InvalidArgument, "extension polynomial coefficient outside GF(q)");
    if (!poly::is_irreducible(base, *poly))
        throw Error(Errc::NotIrreducible, "extension polynomial is reducible over GF(q)");
    if (!poly::x_is_primitive(base, *poly))
        throw Error(Errc::NotPrimitive, "extension polynomial is not primitive over GF(q)");
    return {base, *poly};
}

/// The spread of mt-dimensional subspaces of GF(q)^m, mt | m. Subspace j is
/// spanned by the coordinate vectors of a^j b^i, i < mt, where a generates
/// GF(q^m)* and b = a^N, N = (q^m - 1)/(q^mt - 1), generates GF(q^mt)*.
inline CodeFF spread_construct(const ExtensionField& ext, std::size_t mt) {
    const FieldSpec& f = ext.base;
    const std::size_t m = ext.degree();
    if (mt < 1 || mt > m || m % mt != 0)
        throw Error(Errc::DivisibilityViolated, "M_t must divide m");
    const std::uint64_t q = f.q();
    const std::uint64_t order = detail::checked_pow(q, m, kMaxExtensionOrder) - 1;
    const std::uint64_t sub = detail::checked_pow(q, mt, kMaxExtensionOrder) - 1;
    const std::uint64_t cosets = order / sub;

    CodeFF code{f, m, mt, {}, nlohmann::json::object()};
    code.subspaces.reserve(cosets);
    for (std::uint64_t j = 0; j < cosets; ++j)
        code.subspaces.push_back({MatrixFF{f, Matrix<FieldElem>(mt, m, f.zero())}});

    // x^e for e = 0 .. mt*cosets - 1 covers every needed exponent j + i*cosets.
    std::vector<FieldElem> cur(m, f.zero());
    cur[0] = f.one();
    for (std::uint64_t e = 0; e < mt * cosets; ++e) {
        auto& gen = code.subspaces[e % cosets].gen.entries;
        const std::size_t row = e / cosets;
        for (std::size_t c = 0; c < m; ++c)
            gen(row, c) = cur[c];
        const FieldElem top = cur[m - 1];
        for (std::size_t c = m - 1; c > 0; --c)
            cur[c] = cur[c - 1];
        cur[0] = f.zero();
        for (std::size_t c = 0; c < m; ++c)
            cur[c] = f.sub(cur[c], f.mul(top, ext.poly[c]));
    }

    std::vector<std::uint32_t> poly_idx;
    for (auto c : ext.poly)
        poly_idx.push_back(c.value);
    code.provenance = {
        {"construction", "spread"},
        {"extension_poly", poly_idx},
        {"beta_exponent", cosets},
        {"coset_representatives", "alpha^j for j in [0, " + std::to_string(cosets) + ")"},
        {"rows", "alpha^j * beta^i for i in [0, " + std::to_string(mt) + ")"},
    };
    return code;
}

inline CodeFF spread_construct(const FieldSpec& field, std::size_t m, std::size_t mt) {
    if (mt < 1 || mt > m || m % mt != 0)
        throw Error(Errc::DivisibilityViolated, "M_t must divide m");
    return spread_construct(make_extension(field, m), mt);
}

inline VerificationReport verify_code_ff(const CodeFF& code, std::size_t jobs = 1) {
    VerificationReport rep;
    rep.method = "exact-ff";
    rep.subspaces = code.subspaces.size();
    for (std::size_t i = 0; i < code.subspaces.size(); ++i) {
        const auto& g = code.subspaces[i].gen;
        if (g.rows() != code.mt || g.cols() != code.m || rank_ff(g) != code.mt)
            rep.rank_deficient.push_back(i);
    }
    const std::size_t n = code.subspaces.size();
    rep.pairs_checked = n < 2 ? 0 : n * (n - 1) / 2;
    rep.failing_pairs = detail::failing_pairs(n, jobs, [&](std::size_t i, std::size_t j) {
        return rank_ff(stack(code.subspaces[i].gen, code.subspaces[j].gen)) == 2 * code.mt;
    });
    return rep;
}

struct RateReport {
    double rate;  // bits per channel use
    double gap;   // log2 |A| - rate
};

/// R = log2(|C|) / m against the alphabet ceiling log2 |A|.
inline RateReport rate(std::size_t codewords, std::size_t m, std::size_t alphabet_size) {
    if (codewords == 0)
        throw Error(Errc::EmptyCode, "rate of an empty code");
    if (m == 0)
        throw Error(Errc::InvalidArgument, "block length must be positive");
    const double r = std::log2(static_cast<double>(codewords)) / static_cast<double>(m);
    return {r, std::log2(static_cast<double>(alphabet_size)) - r};
}

inline RateReport rate(const CodeFF& code) { return rate(code.subspaces.size(), code.m, code.field.q()); }

}  // namespace nisp
