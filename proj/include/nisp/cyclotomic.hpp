/**************************************************************************
 * cyclotomic.hpp
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

// Exact arithmetic in the cyclotomic integers Z[z], z = exp(2 pi i / n),
// stored as integer coordinates in the power basis 1, z, ..., z^(d-1) with
// d = phi(n), i.e. as the reduced residue modulo the n-th cyclotomic
// polynomial. n = 1 and n = 2 give the ordinary integers.
//
// Exact division b | a is done through the norm: a / b = a * adj(b) / N(b)
// where adj(b) is the product of the nontrivial Galois conjugates of b and
// N(b) = b * adj(b) is a rational integer.

#include "common.hpp"

#include <complex>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

namespace nisp {

namespace detail {

using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

/// Exact quotient a / b of integer polynomials, b monic up to sign.
inline IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.empty())
        return {};
    if (a.size() < b.size())
        throw Error(Errc::InternalExactnessFailure, "polynomial division left a remainder");
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0)
            continue;
        if (a[i] % b.back() != 0)
            throw Error(Errc::InternalExactnessFailure, "non-monic polynomial division");
        const BigInt c = a[i] / b.back();
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty())
        throw Error(Errc::InternalExactnessFailure, "polynomial division left a remainder");
    return q;
}

inline IntPoly cyclotomic_poly(std::uint32_t n) {
    // x^n - 1 divided by phi_d for each proper divisor d.
    IntPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d)
        if (n % d == 0)
            num = divide_exact(std::move(num), cyclotomic_poly(d));
    return num;
}

}  // namespace detail

/// Z[z_n]; immutable, copies share state.
class CycRing {
public:
    explicit CycRing(std::uint32_t n) {
        if (n < 1)
            throw Error(Errc::InvalidArgument, "root order must be at least 1");
        auto d = std::make_shared<Data>();
        d->n = n;
        auto phi = detail::cyclotomic_poly(n);
        d->degree = phi.size() - 1;
        for (const auto& c : phi)
            d->phi.push_back(static_cast<std::int64_t>(c));
        // x^j mod phi for j in [0, max(n, 2d-1)).
        const std::size_t span = std::max<std::size_t>(n, 2 * d->degree);
        std::vector<std::int64_t> cur(d->degree, 0);
        cur[0] = 1;
        for (std::size_t j = 0; j < span; ++j) {
            d->xpow.push_back(cur);
            // multiply by x and reduce
            const std::int64_t top = cur[d->degree - 1];
            for (std::size_t i = d->degree - 1; i > 0; --i)
                cur[i] = cur[i - 1];
            cur[0] = 0;
            for (std::size_t i = 0; i < d->degree; ++i)
                cur[i] -= top * d->phi[i];
        }
        for (std::uint32_t k = 2; k <= n; ++k)
            if (std::gcd(k, n) == 1 && k % n != 1 % n)
                d->conjugators.push_back(k % n);
        d_ = std::move(d);
    }

    std::uint32_t n() const { return d_->n; }
    std::size_t degree() const { return d_->degree; }
    /// Coefficients of phi_n, lowest degree first.
    const std::vector<std::int64_t>& phi() const { return d_->phi; }
    /// Power-basis coordinates of x^j mod phi_n, 0 <= j < max(n, 2 deg).
    const std::vector<std::int64_t>& xpow(std::size_t j) const { return d_->xpow[j]; }
    /// Exponents k in (Z/n)^*, k != 1, indexing the nontrivial automorphisms z -> z^k.
    const std::vector<std::uint32_t>& conjugators() const { return d_->conjugators; }

    friend bool operator==(const CycRing& a, const CycRing& b) { return a.n() == b.n(); }

private:
    struct Data {
        std::uint32_t n = 1;
        std::size_t degree = 1;
        std::vector<std::int64_t> phi;
        std::vector<std::vector<std::int64_t>> xpow;
        std::vector<std::uint32_t> conjugators;
    };
    std::shared_ptr<const Data> d_;
};

inline CycRing cyc_ring(std::uint32_t n) { return CycRing(n); }

class CycInt {
public:
    CycInt() = default;
    explicit CycInt(CycRing ring) : ring_(std::move(ring)), c_(ring_->degree(), 0) {}
    CycInt(CycRing ring, std::vector<BigInt> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        if (c_.size() != ring_->degree())
            throw Error(Errc::InvalidArgument, "coefficient count must equal ring degree");
    }

    static CycInt integer(const CycRing& ring, const BigInt& v) {
        CycInt r(ring);
        r.c_[0] = v;
        return r;
    }

    /// z^j for any integer j.
    static CycInt root_power(const CycRing& ring, std::int64_t j) {
        const std::int64_t n = ring.n();
        const auto e = static_cast<std::size_t>(((j % n) + n) % n);
        CycInt r(ring);
        const auto& xp = ring.xpow(e);
        for (std::size_t i = 0; i < xp.size(); ++i)
            r.c_[i] = xp[i];
        return r;
    }

    const CycRing& ring() const {
        assert(ring_);
        return *ring_;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool has_ring() const { return ring_.has_value(); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x == 0; });
    }
    /// Nonzero only in the constant coordinate.
    bool is_rational() const {
        return std::all_of(c_.begin() + 1, c_.end(), [](const BigInt& x) { return x == 0; });
    }

    CycInt& operator+=(const CycInt& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    CycInt& operator-=(const CycInt& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    CycInt operator-() const {
        CycInt r = *this;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.check(b);
        const std::size_t d = a.c_.size();
        std::vector<BigInt> prod(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < d; ++j)
                if (b.c_[j] != 0)
                    prod[i + j] += a.c_[i] * b.c_[j];
        }
        CycInt r(*a.ring_);
        for (std::size_t i = 0; i < d; ++i)
            r.c_[i] = std::move(prod[i]);
        for (std::size_t i = d; i < prod.size(); ++i) {
            if (prod[i] == 0)
                continue;
            const auto& xp = a.ring_->xpow(i);
            for (std::size_t t = 0; t < d; ++t)
                if (xp[t] != 0)
                    r.c_[t] += prod[i] * xp[t];
        }
        return r;
    }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    friend CycInt operator*(CycInt a, const BigInt& s) {
        for (auto& x : a.c_)
            x *= s;
        return a;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.ring_ == b.ring_ && a.c_ == b.c_;
    }

    /// Image under the automorphism z -> z^k.
    CycInt conjugate(std::uint32_t k) const {
        CycInt r(*ring_);
        const std::size_t n = ring_->n();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            const auto& xp = ring_->xpow((i * k) % n);
            for (std::size_t t = 0; t < xp.size(); ++t)
                if (xp[t] != 0)
                    r.c_[t] += c_[i] * xp[t];
        }
        return r;
    }

    /// Embedding z -> exp(2 pi i / n).
    std::complex<double> evaluate() const {
        std::complex<double> s{0.0, 0.0};
        const double step = 2.0 * std::numbers::pi / ring_->n();
        for (std::size_t i = 0; i < c_.size(); ++i)
            s += c_[i].convert_to<double>() * std::polar(1.0, step * static_cast<double>(i));
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < c_.size(); ++i)
            os << (i ? "," : "") << c_[i];
        os << "]";
        return os.str();
    }

private:
    std::optional<CycRing> ring_;
    std::vector<BigInt> c_;

    void check(const CycInt& o) const {
        if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
            throw Error(Errc::RingMismatch, "operands belong to different cyclotomic rings");
    }
};

inline CycInt root_power(const CycRing& ring, std::int64_t j) { return CycInt::root_power(ring, j); }
inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt cyc_sub(const CycInt& a, const CycInt& b) { return a - b; }
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt cyc_neg(const CycInt& a) { return -a; }
inline bool is_zero(const CycInt& a) { return a.is_zero(); }

/// Precomputed data for dividing many numerators by one fixed nonzero divisor.
class CycDivisor {
public:
    explicit CycDivisor(const CycInt& b) : adj_(CycInt::integer(b.ring(), 1)) {
        if (b.is_zero())
            throw Error(Errc::DivisionByZero, "division by zero cyclotomic integer");
        for (auto k : b.ring().conjugators())
            adj_ *= b.conjugate(k);
        const CycInt nb = b * adj_;
        if (!nb.is_rational())
            throw Error(Errc::InternalExactnessFailure, "norm is not rational: " + nb.str());
        norm_ = nb.coeffs()[0];
    }

    const CycInt& adjoint() const { return adj_; }
    const BigInt& norm() const { return norm_; }

    std::optional<CycInt> try_divide(const CycInt& a) const {
        CycInt t = a * adj_;
        std::vector<BigInt> out(t.coeffs().size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            BigInt quo, rem;
            boost::multiprecision::divide_qr(t.coeffs()[i], norm_, quo, rem);
            if (rem != 0)
                return std::nullopt;
            out[i] = std::move(quo);
        }
        return CycInt(a.ring(), std::move(out));
    }

    CycInt divide(const CycInt& a) const {
        auto r = try_divide(a);
        if (!r)
            throw Error(Errc::InternalExactnessFailure, "inexact division " + a.str());
        return *std::move(r);
    }

private:
    CycInt adj_;
    BigInt norm_;
};

inline std::optional<CycInt> try_divide(const CycInt& a, const CycInt& b) { return CycDivisor(b).try_divide(a); }

using CycMatrix = Matrix<CycInt>;

namespace detail {

struct BareissResult {
    std::size_t rank = 0;
    bool negate = false;  // odd number of row/column swaps
    CycInt last_pivot;
};

/// Fraction-free elimination with full pivoting. The pivot is the first
/// nonzero entry of the remaining block in row-major order.
inline BareissResult bareiss(CycMatrix a) {
    BareissResult res;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::optional<CycDivisor> prev;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = k; i < rows && pr == rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (!a(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows)
            break;
        if (pr != k) {
            a.swap_rows(pr, k);
            res.negate = !res.negate;
        }
        if (pc != k) {
            a.swap_cols(pc, k);
            res.negate = !res.negate;
        }
        ++res.rank;
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                CycInt v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = prev ? prev->divide(v) : std::move(v);
            }
        }
        res.last_pivot = a(k, k);
        if (k + 1 < std::min(rows, cols))
            prev.emplace(a(k, k));
    }
    return res;
}

}  // namespace detail

/// Exact rank over Q(z_n). All entries must share one ring.
inline std::size_t cyc_rank(const CycMatrix& m) {
    if (m.empty())
        return 0;
    return detail::bareiss(m).rank;
}

inline CycInt cyc_det(const CycMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::NotSquare, "determinant of a non-square matrix");
    if (m.rows() == 0)
        throw Error(Errc::InvalidArgument, "determinant of an empty matrix");
    const CycRing& ring = m(0, 0).ring();
    auto res = detail::bareiss(m);
    if (res.rank < m.rows())
        return CycInt(ring);
    return res.negate ? -res.last_pivot : res.last_pivot;
}

/// A valuation; `infinite` for the zero element.
struct Valuation {
    bool infinite = false;
    std::uint64_t value = 0;

    static Valuation inf() { return {true, 0}; }
    static Valuation of(std::uint64_t v) { return {false, v}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend Valuation operator+(Valuation a, Valuation b) {
        if (a.infinite || b.infinite)
            return inf();
        return of(a.value + b.value);
    }
};

inline Valuation nu2(const BigInt& k) {
    if (k == 0)
        return Valuation::inf();
    return Valuation::of(boost::multiprecision::lsb(k < 0 ? BigInt(-k) : k));
}
inline Valuation nu2(std::int64_t k) { return nu2(BigInt(k)); }

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Exponent of the prime 1 - z in x, for rings of order 2^r, r >= 1.
inline Valuation nu_one_minus_mu(const CycInt& x) {
    const auto n = x.ring().n();
    if (n < 2 || !is_power_of_two(n))
        throw Error(Errc::NotPowerOfTwoRing, "ring order " + std::to_string(n) + " is not a power of two >= 2");
    if (x.is_zero())
        return Valuation::inf();
    const CycRing& ring = x.ring();
    const CycDivisor prime(CycInt::integer(ring, 1) - root_power(ring, 1));
    std::uint64_t a = 0;
    CycInt cur = x;
    while (auto next = prime.try_divide(cur)) {
        cur = *std::move(next);
        ++a;
    }
    return Valuation::of(a);
}

/// Element of the fraction field Q(z_n): num / den with den > 0 and
/// gcd(den, all numerator coordinates) = 1, so equal values compare equal.
class CycFrac {
public:
    CycFrac() = default;
    explicit CycFrac(CycInt num) : num_(std::move(num)), den_(1) {}
    CycFrac(CycInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const CycInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend CycFrac operator+(const CycFrac& a, const CycFrac& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend CycFrac operator-(const CycFrac& a, const CycFrac& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend CycFrac operator*(const CycFrac& a, const CycFrac& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    CycFrac inverse() const {
        const CycDivisor d(num_);
        // 1/(u/v) = v * adj(u) / N(u)
        return {d.adjoint() * den_, d.norm()};
    }
    friend CycFrac operator/(const CycFrac& a, const CycFrac& b) { return a * b.inverse(); }

    friend bool operator==(const CycFrac& a, const CycFrac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string str() const { return num_.str() + "/" + den_.str(); }

private:
    CycInt num_;
    BigInt den_ = 1;

    void normalize() {
        if (den_ == 0)
            throw Error(Errc::DivisionByZero, "zero denominator");
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        BigInt g = den_;
        for (const auto& c : num_.coeffs())
            g = boost::multiprecision::gcd(g, BigInt(abs(c)));
        if (g > 1) {
            std::vector<BigInt> c = num_.coeffs();
            for (auto& x : c)
                x /= g;
            num_ = CycInt(num_.ring(), std::move(c));
            den_ /= g;
        }
    }
};

/// Reduced row-echelon form over Q(z_n) with unit pivots; returns the rank.
inline std::size_t cyc_rref_inplace(Matrix<CycFrac>& a) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < a.rows() && a(piv, c).is_zero())
            ++piv;
        if (piv == a.rows())
            continue;
        a.swap_rows(piv, rank);
        const CycFrac inv = a(rank, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j)
            a(rank, j) = a(rank, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || a(i, c).is_zero())
                continue;
            const CycFrac factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) = a(i, j) - factor * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace nisp
