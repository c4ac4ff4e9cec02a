/**************************************************************************
 * common.hpp
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

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace nisp {

using BigInt = boost::multiprecision::cpp_int;

enum class Errc {
    InvalidArgument,
    NotPrime,
    NotIrreducible,
    NotPrimitive,
    SizeLimitExceeded,
    DivisionByZero,
    RingMismatch,
    InternalExactnessFailure,
    NotSquare,
    NotPowerOfTwoRing,
    DivisibilityViolated,
    EmptyCode,
    UnverifiedInput,
    OddLength,
    RankDeficient,
    LimitExceeded,
    TooLarge,
    InvalidSeed,
    ParseError,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::InternalExactnessFailure: return "InternalExactnessFailure";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotPowerOfTwoRing: return "NotPowerOfTwoRing";
    case Errc::DivisibilityViolated: return "DivisibilityViolated";
    case Errc::EmptyCode: return "EmptyCode";
    case Errc::UnverifiedInput: return "UnverifiedInput";
    case Errc::OddLength: return "OddLength";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidSeed: return "InvalidSeed";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the `Errc` kinds.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Dense row-major matrix. Element type only needs to be copyable.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw Error(Errc::InvalidArgument, "matrix data size does not match shape");
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const noexcept { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }

    /// Rows of `top` followed by rows of `bottom`.
    static Matrix stack(const Matrix& top, const Matrix& bottom) {
        if (top.cols_ != bottom.cols_)
            throw Error(Errc::InvalidArgument, "cannot stack matrices with different column counts");
        Matrix out;
        out.rows_ = top.rows_ + bottom.rows_;
        out.cols_ = top.cols_;
        out.data_.reserve(out.rows_ * out.cols_);
        out.data_.insert(out.data_.end(), top.data_.begin(), top.data_.end());
        out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Unordered index pair (i < j).
struct IndexPair {
    std::size_t first;
    std::size_t second;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Outcome of an all-pairs nonintersection check. Failures are data, not errors.
struct VerificationReport {
    std::string method;
    std::size_t subspaces = 0;
    std::size_t pairs_checked = 0;
    std::vector<std::size_t> rank_deficient;  // subspaces whose generator is not full rank
    std::vector<IndexPair> failing_pairs;     // pairs whose stacked generator has rank < 2 M_t

    bool passed() const noexcept { return rank_deficient.empty() && failing_pairs.empty(); }
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

/// Returns 0 on overflow past `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > limit / base)
            return 0;
        r *= base;
    }
    return r;
}

inline std::size_t resolve_jobs(std::size_t jobs) {
    if (jobs != 0)
        return jobs;
    auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs `check(i, j)` over all pairs i < j of `count` items on up to `jobs`
/// workers and returns the pairs for which it was false, in lexicographic order.
template <class Check>
std::vector<IndexPair> failing_pairs(std::size_t count, std::size_t jobs, Check&& check) {
    jobs = std::max<std::size_t>(1, std::min(resolve_jobs(jobs), count));
    std::vector<std::vector<IndexPair>> partial(jobs);
    auto worker = [&](std::size_t w) {
        // Rows are dealt round-robin so that long and short rows mix.
        for (std::size_t i = w; i < count; i += jobs)
            for (std::size_t j = i + 1; j < count; ++j)
                if (!check(i, j))
                    partial[w].push_back({i, j});
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w)
            pool.emplace_back(worker, w);
        for (auto& t : pool)
            t.join();
    }
    std::vector<IndexPair> out;
    for (auto& p : partial)
        out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end(), [](const IndexPair& a, const IndexPair& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    return out;
}

}  // namespace detail
}  // namespace nisp
