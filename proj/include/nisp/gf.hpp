/**************************************************************************
 * gf.hpp
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

// Finite fields GF(p^k) with log/antilog tables, and linear algebra over them.
//
// An element is stored as the integer whose base-p digits are its coordinates
// in the power basis 1, a, a^2, ..., a^(k-1), lowest degree as the least
// significant digit. Index 0 is zero. In GF(16) built on x^4 + x + 1 the
// element a^4 = 1 + a has coordinates (1,1,0,0) and index 3.

#include "common.hpp"
#include "poly.hpp"

#include <memory>
#include <optional>
#include <sstream>

namespace nisp {

/// Largest field order accepted by `field_new` and `field_default`.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

struct FieldElem {
    std::uint32_t value = 0;
    friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// An immutable GF(p^k). Copies share the tables.
class FieldSpec {
public:
    using value_type = FieldElem;

    std::uint32_t p() const { return d_->p; }
    std::uint32_t k() const { return d_->k; }
    std::uint32_t q() const { return d_->q; }
    /// k+1 coefficients over GF(p), lowest degree first, monic.
    const std::vector<std::uint32_t>& poly() const { return d_->poly; }

    /// Discrete log of a nonzero element with respect to the root of `poly`.
    std::uint32_t log(FieldElem a) const {
        if (a.value == 0)
            throw Error(Errc::DivisionByZero, "logarithm of zero");
        return d_->log[a.value];
    }
    FieldElem antilog(std::uint64_t j) const { return {d_->antilog[j % (d_->q - 1)]}; }
    FieldElem alpha() const { return antilog(1); }

    // Coefficient-field interface (see poly::CoefficientField).
    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    bool is_zero(FieldElem a) const { return a.value == 0; }
    std::uint64_t order() const { return d_->q; }

    FieldElem add(FieldElem a, FieldElem b) const {
        if (d_->p == 2)
            return {a.value ^ b.value};
        return digitwise(a, b, [p = d_->p](std::uint32_t x, std::uint32_t y) { return (x + y) % p; });
    }
    FieldElem sub(FieldElem a, FieldElem b) const {
        if (d_->p == 2)
            return {a.value ^ b.value};
        return digitwise(a, b, [p = d_->p](std::uint32_t x, std::uint32_t y) { return (x + p - y) % p; });
    }
    FieldElem neg(FieldElem a) const { return sub(zero(), a); }
    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.value == 0 || b.value == 0)
            return {0};
        return antilog(std::uint64_t{d_->log[a.value]} + d_->log[b.value]);
    }
    FieldElem inv(FieldElem a) const {
        if (a.value == 0)
            throw Error(Errc::DivisionByZero, "inverse of zero");
        const std::uint32_t n = d_->q - 1;
        return antilog((n - d_->log[a.value]) % n);
    }
    FieldElem pow(FieldElem a, std::int64_t e) const {
        if (a.value == 0) {
            if (e < 0)
                throw Error(Errc::DivisionByZero, "negative power of zero");
            return e == 0 ? one() : zero();
        }
        const std::int64_t n = d_->q - 1;
        std::int64_t r = (static_cast<std::int64_t>(d_->log[a.value]) * (e % n)) % n;
        if (r < 0)
            r += n;
        return antilog(static_cast<std::uint64_t>(r));
    }

    bool contains(FieldElem a) const { return a.value < d_->q; }

    /// Coordinates over GF(p), lowest degree first.
    std::vector<std::uint32_t> coordinates(FieldElem a) const {
        std::vector<std::uint32_t> c(d_->k);
        for (auto& x : c) {
            x = a.value % d_->p;
            a.value /= d_->p;
        }
        return c;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.d_ == b.d_ || (a.p() == b.p() && a.poly() == b.poly());
    }

    std::string describe() const {
        std::ostringstream os;
        os << "GF(" << q() << ") = GF(" << p() << ")[x]/(";
        bool first = true;
        for (std::size_t i = d_->poly.size(); i-- > 0;) {
            const auto c = d_->poly[i];
            if (c == 0)
                continue;
            if (!first)
                os << " + ";
            first = false;
            if (c != 1 || i == 0)
                os << c;
            if (i >= 1)
                os << "x";
            if (i >= 2)
                os << "^" << i;
        }
        os << ")";
        return os.str();
    }

private:
    struct Data {
        std::uint32_t p = 0, k = 0, q = 0;
        std::vector<std::uint32_t> poly;
        std::vector<std::uint32_t> log;
        std::vector<std::uint32_t> antilog;
    };
    std::shared_ptr<const Data> d_;

    template <class Op>
    FieldElem digitwise(FieldElem a, FieldElem b, Op op) const {
        std::uint32_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < d_->k; ++i) {
            out += op(a.value % d_->p, b.value % d_->p) * scale;
            a.value /= d_->p;
            b.value /= d_->p;
            scale *= d_->p;
        }
        return {out};
    }

    friend FieldSpec field_new(std::uint32_t, std::uint32_t, const std::vector<std::uint32_t>&);
};

/// Builds GF(p^k) from a monic primitive polynomial of degree k over GF(p)
/// (coefficients lowest degree first).
inline FieldSpec field_new(std::uint32_t p, std::uint32_t k, const std::vector<std::uint32_t>& poly) {
    if (!detail::is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1)
        throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
    if (poly.size() != k + 1 || poly.back() != 1)
        throw Error(Errc::InvalidArgument, "polynomial must be monic of degree k");
    for (auto c : poly)
        if (c >= p)
            throw Error(Errc::InvalidArgument, "polynomial coefficient out of range");
    const std::uint64_t q = detail::checked_pow(p, k, kMaxFieldOrder);
    if (q == 0)
        throw Error(Errc::SizeLimitExceeded, "field order exceeds 2^20");

    const poly::PrimeField fp{p};
    if (!poly::is_irreducible(fp, poly))
        throw Error(Errc::NotIrreducible, "polynomial is reducible");
    if (!poly::x_is_primitive(fp, poly))
        throw Error(Errc::NotPrimitive, "root of polynomial is not a generator");

    auto d = std::make_shared<FieldSpec::Data>();
    d->p = p;
    d->k = k;
    d->q = static_cast<std::uint32_t>(q);
    d->poly = poly;
    d->log.assign(q, 0);
    d->antilog.assign(q - 1, 0);

    // Walk a^j as a coordinate vector; multiply by x and reduce each step.
    std::vector<std::uint32_t> c(k, 0);
    c[0] = 1 % p;
    for (std::uint32_t j = 0; j + 1 < q; ++j) {
        std::uint32_t idx = 0, scale = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            idx += c[i] * scale;
            scale *= p;
        }
        d->antilog[j] = idx;
        d->log[idx] = j;
        const std::uint32_t top = c[k - 1];
        for (std::uint32_t i = k - 1; i > 0; --i)
            c[i] = c[i - 1];
        c[0] = 0;
        for (std::uint32_t i = 0; i < k; ++i)
            c[i] = fp.sub(c[i], fp.mul(top, poly[i]));
    }

    FieldSpec spec;
    spec.d_ = std::move(d);
    return spec;
}

/// The primitive polynomial of degree k over GF(p) whose coefficient integer
/// sum(c_i p^i) is smallest, i.e. the first hit when low-order coefficients
/// vary fastest. Gives x^4+x+1 for (2,4) and x^3+x+1 for (2,3).
inline std::vector<std::uint32_t> default_primitive_poly(std::uint32_t p, std::uint32_t k) {
    if (!detail::is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1)
        throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
    const std::uint64_t q = detail::checked_pow(p, k, kMaxFieldOrder);
    if (q == 0)
        throw Error(Errc::SizeLimitExceeded, "field order exceeds 2^20");
    const poly::PrimeField fp{p};
    for (std::uint64_t code = 0; code < q; ++code) {
        std::vector<std::uint32_t> f(k + 1);
        std::uint64_t rest = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[k] = 1;
        if (f[0] == 0)
            continue;
        if (poly::is_irreducible(fp, f) && poly::x_is_primitive(fp, f))
            return f;
    }
    throw Error(Errc::InternalExactnessFailure, "no primitive polynomial found");
}

inline FieldSpec field_default(std::uint32_t p, std::uint32_t k) {
    return field_new(p, k, default_primitive_poly(p, k));
}

/// Field for a prime power q, with the default polynomial.
inline FieldSpec field_for_order(std::uint64_t q) {
    if (q < 2)
        throw Error(Errc::InvalidArgument, "field order must be at least 2");
    const auto f = detail::prime_factors(q);
    if (f.size() != 1)
        throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    std::uint32_t k = 0;
    for (std::uint64_t t = q; t > 1; t /= f[0])
        ++k;
    return field_default(static_cast<std::uint32_t>(f[0]), k);
}

inline FieldElem ff_add(FieldElem a, FieldElem b, const FieldSpec& f) { return f.add(a, b); }
inline FieldElem ff_mul(FieldElem a, FieldElem b, const FieldSpec& f) { return f.mul(a, b); }
inline FieldElem ff_inv(FieldElem a, const FieldSpec& f) { return f.inv(a); }
inline FieldElem ff_pow(FieldElem a, std::int64_t e, const FieldSpec& f) { return f.pow(a, e); }

struct MatrixFF {
    FieldSpec field;
    Matrix<FieldElem> entries;

    std::size_t rows() const { return entries.rows(); }
    std::size_t cols() const { return entries.cols(); }
};

inline MatrixFF stack(const MatrixFF& top, const MatrixFF& bottom) {
    if (!(top.field == bottom.field))
        throw Error(Errc::InvalidArgument, "matrices over different fields");
    return {top.field, Matrix<FieldElem>::stack(top.entries, bottom.entries)};
}

/// Reduced row-echelon form in place; returns the rank. Pivots are 1.
inline std::size_t rref_ff_inplace(const FieldSpec& f, Matrix<FieldElem>& a) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < a.rows() && f.is_zero(a(piv, c)))
            ++piv;
        if (piv == a.rows())
            continue;
        a.swap_rows(piv, rank);
        const auto inv = f.inv(a(rank, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            a(rank, j) = f.mul(a(rank, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || f.is_zero(a(i, c)))
                continue;
            const auto factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) = f.sub(a(i, j), f.mul(factor, a(rank, j)));
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_ff(const MatrixFF& m) {
    auto work = m.entries;
    return rref_ff_inplace(m.field, work);
}

inline MatrixFF rref_ff(const MatrixFF& m) {
    MatrixFF out = m;
    rref_ff_inplace(out.field, out.entries);
    return out;
}

}  // namespace nisp
