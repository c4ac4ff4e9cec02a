/**************************************************************************
 * lift.hpp
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

// Complex codes over {0} U {n-th roots of unity}, and the lift of GF(q)
// codes into them: 0 -> 0, a^j -> z^j with n = q - 1.

#include "codes_ff.hpp"
#include "cyclotomic.hpp"

namespace nisp {

/// Zero, or z^j with z = exp(2 pi i / n). The order n lives in the alphabet.
class SymbolC {
public:
    static constexpr SymbolC zero() { return SymbolC(-1); }
    static constexpr SymbolC root(std::uint32_t j) { return SymbolC(static_cast<std::int64_t>(j)); }

    constexpr bool is_zero() const { return e_ < 0; }
    /// Exponent of a nonzero symbol.
    constexpr std::uint32_t exponent() const {
        assert(!is_zero());
        return static_cast<std::uint32_t>(e_);
    }

    friend constexpr auto operator<=>(const SymbolC&, const SymbolC&) = default;

private:
    constexpr explicit SymbolC(std::int64_t e) : e_(e) {}
    std::int64_t e_ = -1;
};

struct Alphabet {
    std::uint32_t n = 1;        // root order; 0 means no roots
    bool includes_zero = false;

    std::size_t size() const { return n + (includes_zero ? 1 : 0); }
    bool contains(SymbolC s) const { return s.is_zero() ? includes_zero : s.exponent() < n; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

struct SubspaceC {
    Matrix<SymbolC> gen;  // mt x m
};

struct CodeC {
    Alphabet alphabet;
    std::size_t m = 0;
    std::size_t mt = 0;
    std::vector<SubspaceC> subspaces;
    nlohmann::json provenance = nlohmann::json::object();
};

inline CycInt to_cyc(SymbolC s, const CycRing& ring) {
    return s.is_zero() ? CycInt(ring) : root_power(ring, s.exponent());
}

inline CycMatrix to_cyc(const Matrix<SymbolC>& g, const CycRing& ring) {
    CycMatrix out(g.rows(), g.cols(), CycInt(ring));
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            out(r, c) = to_cyc(g(r, c), ring);
    return out;
}

inline SymbolC lift_symbol(FieldElem e, const FieldSpec& f) {
    return f.is_zero(e) ? SymbolC::zero() : SymbolC::root(f.log(e));
}

/// Exact all-pairs nonintersection check over Q(z_n), plus per-subspace rank.
inline VerificationReport verify_lift(const CodeC& code, std::size_t jobs = 1) {
    VerificationReport rep;
    rep.method = "exact-cyclotomic";
    rep.subspaces = code.subspaces.size();
    if (code.alphabet.n == 0 && !code.subspaces.empty())
        throw Error(Errc::InvalidArgument, "alphabet without roots cannot span a subspace");
    const CycRing ring(std::max<std::uint32_t>(code.alphabet.n, 1));
    std::vector<CycMatrix> gens;
    gens.reserve(code.subspaces.size());
    for (std::size_t i = 0; i < code.subspaces.size(); ++i) {
        const auto& g = code.subspaces[i].gen;
        gens.push_back(to_cyc(g, ring));
        if (g.rows() != code.mt || g.cols() != code.m || cyc_rank(gens.back()) != code.mt)
            rep.rank_deficient.push_back(i);
    }
    const std::size_t n = gens.size();
    rep.pairs_checked = n < 2 ? 0 : n * (n - 1) / 2;
    rep.failing_pairs = detail::failing_pairs(n, jobs, [&](std::size_t i, std::size_t j) {
        return cyc_rank(CycMatrix::stack(gens[i], gens[j])) == 2 * code.mt;
    });
    return rep;
}

/// Entrywise lift. The input must pass `verify_code_ff`.
inline CodeC lift_code(const CodeFF& code, std::size_t jobs = 1) {
    if (!verify_code_ff(code, jobs).passed())
        throw Error(Errc::UnverifiedInput, "finite-field code has intersecting or degenerate subspaces");
    CodeC out;
    out.alphabet = {code.field.q() - 1, true};
    out.m = code.m;
    out.mt = code.mt;
    out.subspaces.reserve(code.subspaces.size());
    for (const auto& s : code.subspaces) {
        Matrix<SymbolC> g(s.gen.rows(), s.gen.cols(), SymbolC::zero());
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c)
                g(r, c) = lift_symbol(s.gen.entries(r, c), code.field);
        out.subspaces.push_back({std::move(g)});
    }
    out.provenance = {
        {"construction", "lift"},
        {"source_field", {{"p", code.field.p()}, {"k", code.field.k()}, {"poly", code.field.poly()}}},
        {"map", "0 -> 0, alpha^j -> zeta_" + std::to_string(code.field.q() - 1) + "^j"},
        {"source_provenance", code.provenance},
    };
    return out;
}

}  // namespace nisp
