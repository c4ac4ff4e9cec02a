/**************************************************************************
 * poly.hpp
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

// Univariate polynomials over a finite coefficient field, used to test
// irreducibility and primitivity of field moduli. Coefficients are stored
// lowest degree first.

#include "common.hpp"

#include <concepts>
#include <cstdint>
#include <vector>

namespace nisp::poly {

template <class F>
concept CoefficientField = requires(const F& f, typename F::value_type a) {
    { f.zero() } -> std::convertible_to<typename F::value_type>;
    { f.one() } -> std::convertible_to<typename F::value_type>;
    { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.order() } -> std::convertible_to<std::uint64_t>;
};

/// GF(p) with residues 0..p-1.
struct PrimeField {
    using value_type = std::uint32_t;
    std::uint32_t p;

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p; }
    value_type add(value_type a, value_type b) const { return (a + b) % p; }
    value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(std::uint64_t{a} * b % p);
    }
    value_type inv(value_type a) const {
        if (a == 0)
            throw Error(Errc::DivisionByZero, "inverse of zero in GF(p)");
        // Fermat; p is small.
        std::uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<value_type>(r);
    }
    bool is_zero(value_type a) const { return a == 0; }
    std::uint64_t order() const { return p; }
};

template <CoefficientField F>
using Poly = std::vector<typename F::value_type>;

template <CoefficientField F>
void trim(const F& f, Poly<F>& a) {
    while (!a.empty() && f.is_zero(a.back()))
        a.pop_back();
}

template <CoefficientField F>
bool is_one(const F& f, const Poly<F>& a) {
    return a.size() == 1 && a[0] == f.one();
}

/// a mod m, m monic-normalizable and nonzero.
template <CoefficientField F>
Poly<F> mod(const F& f, Poly<F> a, const Poly<F>& m) {
    trim(f, a);
    const std::size_t dm = m.size() - 1;
    const auto lead_inv = f.inv(m.back());
    while (a.size() > dm) {
        const auto c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        trim(f, a);
    }
    return a;
}

template <CoefficientField F>
Poly<F> mul_mod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
    if (a.empty() || b.empty())
        return {};
    Poly<F> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i]))
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return mod(f, std::move(r), m);
}

template <CoefficientField F>
Poly<F> pow_mod(const F& f, Poly<F> base, std::uint64_t e, const Poly<F>& m) {
    Poly<F> r = mod(f, Poly<F>{f.one()}, m);
    base = mod(f, std::move(base), m);
    while (e) {
        if (e & 1)
            r = mul_mod(f, r, base, m);
        e >>= 1;
        if (e)
            base = mul_mod(f, base, base, m);
    }
    return r;
}

template <CoefficientField F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
    trim(f, a);
    trim(f, b);
    while (!b.empty()) {
        auto r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or: a degree-d polynomial is irreducible iff gcd(f, x^(Q^i) - x) = 1
/// for every i <= d/2, with Q the coefficient field order.
template <CoefficientField F>
bool is_irreducible(const F& f, const Poly<F>& m) {
    const std::size_t d = m.size() - 1;
    if (d == 0)
        return false;
    if (d == 1)
        return true;
    const Poly<F> x{f.zero(), f.one()};
    Poly<F> xp = mod(f, x, m);
    for (std::size_t i = 1; i <= d / 2; ++i) {
        xp = pow_mod(f, xp, f.order(), m);
        Poly<F> diff = xp;
        diff.resize(std::max<std::size_t>(diff.size(), 2), f.zero());
        diff[1] = f.sub(diff[1], f.one());
        trim(f, diff);
        if (diff.empty())
            return false;
        auto g = gcd(f, m, diff);
        if (g.size() > 1)
            return false;
    }
    return true;
}

/// True iff the class of x has multiplicative order exactly Q^d - 1 modulo m.
/// Assumes m irreducible of degree d.
template <CoefficientField F>
bool x_is_primitive(const F& f, const Poly<F>& m) {
    const std::size_t d = m.size() - 1;
    const std::uint64_t group = detail::checked_pow(f.order(), d, std::uint64_t{1} << 62) - 1;
    const Poly<F> x{f.zero(), f.one()};
    if (!is_one(f, pow_mod(f, x, group, m)))
        return false;
    for (auto l : detail::prime_factors(group))
        if (is_one(f, pow_mod(f, x, group / l, m)))
            return false;
    return true;
}

}  // namespace nisp::poly
