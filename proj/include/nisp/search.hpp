/**************************************************************************
 * search.hpp
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

// Searching for large nonintersecting families as a clique problem: every
// distinct plane spanned by two alphabet vectors is a vertex, and two
// vertices are adjacent iff the planes meet only in 0.

#include "lift.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <unordered_map>

namespace nisp {

/// Deduplicated planes over an alphabet, with their exact canonical forms.
struct CandidateSet {
    Alphabet alphabet;
    std::size_t m = 0;
    std::vector<SubspaceC> planes;
    std::vector<std::string> keys;  // canonical RREF over Q(z_n), one per plane
};

/// Canonical form of the row space: reduced row-echelon form over Q(z_n)
/// with unit pivots, serialized. Empty when the generator is rank deficient.
inline std::optional<std::string> canonical_key(const CycMatrix& g) {
    Matrix<CycFrac> a(g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            a(r, c) = CycFrac(g(r, c));
    if (cyc_rref_inplace(a) != g.rows())
        return std::nullopt;
    std::string key;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            key += a(r, c).is_zero() ? std::string("0") : a(r, c).str();
            key += ';';
        }
    return key;
}

inline std::optional<std::string> canonical_key(const Matrix<SymbolC>& g, const CycRing& ring) {
    return canonical_key(to_cyc(g, ring));
}

/// Default cap on the number of vector pairs `enumerate_planes` examines.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 50'000'000;

/// All planes spanned by two vectors of A^m, one entry per distinct plane, in
/// order of first appearance. Each plane is also spanned by two vectors whose
/// first nonzero entry is 1 (rescale by a root of unity), so only those
/// projective representatives are paired.
inline CandidateSet enumerate_planes(const Alphabet& alphabet, std::size_t m,
                                     std::uint64_t limit = kDefaultEnumerationLimit) {
    if (alphabet.size() == 0)
        throw Error(Errc::InvalidArgument, "empty alphabet");
    if (m < 2)
        throw Error(Errc::InvalidArgument, "planes need m >= 2");
    std::vector<SymbolC> symbols;
    if (alphabet.includes_zero)
        symbols.push_back(SymbolC::zero());
    for (std::uint32_t j = 0; j < alphabet.n; ++j)
        symbols.push_back(SymbolC::root(j));

    const std::uint64_t total = detail::checked_pow(symbols.size(), m, limit);
    if (total == 0)
        throw Error(Errc::LimitExceeded, "|A|^m exceeds the enumeration limit");
    std::vector<std::vector<SymbolC>> reps;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<SymbolC> v(m, SymbolC::zero());
        std::uint64_t rest = code;
        for (std::size_t i = m; i-- > 0;) {
            v[i] = symbols[rest % symbols.size()];
            rest /= symbols.size();
        }
        const auto lead = std::find_if(v.begin(), v.end(), [](SymbolC s) { return !s.is_zero(); });
        if (lead != v.end() && *lead == SymbolC::root(0))
            reps.push_back(std::move(v));
    }
    const std::uint64_t pairs = reps.size() * (reps.size() - (reps.empty() ? 0 : 1)) / 2;
    if (pairs > limit)
        throw Error(Errc::LimitExceeded, std::to_string(pairs) + " vector pairs exceed the limit " +
                                             std::to_string(limit));

    CandidateSet out;
    out.alphabet = alphabet;
    out.m = m;
    const CycRing ring(std::max<std::uint32_t>(alphabet.n, 1));
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            Matrix<SymbolC> g(2, m, SymbolC::zero());
            for (std::size_t c = 0; c < m; ++c) {
                g(0, c) = reps[i][c];
                g(1, c) = reps[j][c];
            }
            auto key = canonical_key(g, ring);
            if (!key || seen.contains(*key))
                continue;
            seen.emplace(*key, out.planes.size());
            out.planes.push_back({std::move(g)});
            out.keys.push_back(std::move(*key));
        }
    return out;
}

/// Symmetric adjacency as bitsets; no self loops.
class DisjointnessGraph {
public:
    DisjointnessGraph() = default;
    explicit DisjointnessGraph(std::size_t n) : n_(n), words_((n + 63) / 64), adj_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words() const { return words_; }
    bool adjacent(std::size_t u, std::size_t v) const { return (row(u)[v / 64] >> (v % 64)) & 1u; }
    const std::uint64_t* row(std::size_t u) const { return adj_.data() + u * words_; }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v)
            return;
        adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    std::size_t degree(std::size_t u) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w)
            d += static_cast<std::size_t>(__builtin_popcountll(row(u)[w]));
        return d;
    }
    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t u = 0; u < n_; ++u)
            e += degree(u);
        return e / 2;
    }

    /// FNV-1a over the vertex count and adjacency words, as 16 hex digits.
    std::string hash() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t x) {
            for (int i = 0; i < 8; ++i) {
                h ^= (x >> (8 * i)) & 0xff;
                h *= 1099511628211ull;
            }
        };
        mix(n_);
        for (auto w : adj_)
            mix(w);
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0)
            return n == p;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1)
                composite = false;
        }
        if (composite)
            return false;
    }
    return true;
}

/// Ring map Z[z_n] -> GF(l), z -> w, with l = 1 mod n prime and w of order n.
/// Rank can only drop under it, so full rank of an image certifies full rank
/// over Q(z_n); anything less is decided by exact elimination instead.
class ResidueMap {
public:
    explicit ResidueMap(std::uint32_t n) : n_(n) {
        std::uint64_t t = ((std::uint64_t{1} << 61) - 1) / n;
        while (!is_prime_u64(t * n + 1))
            --t;
        l_ = t * n + 1;
        const auto primes = prime_factors(n);
        for (std::uint64_t h = 2;; ++h) {
            const std::uint64_t w = powmod(h, (l_ - 1) / n, l_);
            bool order_n = true;
            for (auto p : primes)
                if (powmod(w, n / p, l_) == 1)
                    order_n = false;
            if (order_n) {
                w_ = w;
                break;
            }
        }
        for (std::uint32_t j = 0; j < n; ++j)
            pow_.push_back(powmod(w_, j, l_));
    }

    std::uint64_t modulus() const { return l_; }
    std::uint64_t image(SymbolC s) const { return s.is_zero() ? 0 : pow_[s.exponent() % n_]; }

    std::size_t rank(const Matrix<SymbolC>& top, const Matrix<SymbolC>& bottom) const {
        const std::size_t rows = top.rows() + bottom.rows(), cols = top.cols();
        std::vector<std::uint64_t> a(rows * cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                a[r * cols + c] = image(r < top.rows() ? top(r, c) : bottom(r - top.rows(), c));
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t p = rank;
            while (p < rows && a[p * cols + c] == 0)
                ++p;
            if (p == rows)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[p * cols + j], a[rank * cols + j]);
            const std::uint64_t inv = powmod(a[rank * cols + c], l_ - 2, l_);
            for (std::size_t i = rank + 1; i < rows; ++i) {
                const std::uint64_t f = mulmod(a[i * cols + c], inv, l_);
                if (f == 0)
                    continue;
                for (std::size_t j = c; j < cols; ++j)
                    a[i * cols + j] = (a[i * cols + j] + l_ - mulmod(f, a[rank * cols + j], l_)) % l_;
            }
            ++rank;
        }
        return rank;
    }

private:
    std::uint32_t n_;
    std::uint64_t l_ = 0;
    std::uint64_t w_ = 1;
    std::vector<std::uint64_t> pow_;
};

}  // namespace detail

/// Exact pairwise nonintersection over Q(z_n) for every candidate pair.
inline DisjointnessGraph build_graph(const CandidateSet& c, std::size_t jobs = 1) {
    const std::size_t n = c.planes.size();
    DisjointnessGraph g(n);
    if (n < 2)
        return g;
    const std::uint32_t order = std::max<std::uint32_t>(c.alphabet.n, 1);
    const CycRing ring(order);
    const detail::ResidueMap residue(order);
    std::vector<CycMatrix> exact;
    exact.reserve(n);
    for (const auto& p : c.planes)
        exact.push_back(to_cyc(p.gen, ring));
    const std::size_t full = 2 * c.planes.front().gen.rows();
    // Collect non-edges; every other pair is an edge.
    auto non_edges = detail::failing_pairs(n, jobs, [&](std::size_t i, std::size_t j) {
        if (residue.rank(c.planes[i].gen, c.planes[j].gen) == full)
            return true;
        return cyc_rank(CycMatrix::stack(exact[i], exact[j])) == full;
    });
    std::vector<std::uint64_t> blocked(n * g.words(), 0);
    for (const auto& p : non_edges) {
        blocked[p.first * g.words() + p.second / 64] |= std::uint64_t{1} << (p.second % 64);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!((blocked[i * g.words() + j / 64] >> (j % 64)) & 1u))
                g.add_edge(i, j);
    return g;
}

struct CliqueResult {
    std::vector<std::size_t> vertices;  // ascending
    bool exact = false;                  // proven maximum
    std::uint64_t nodes = 0;             // branch nodes or local-search moves
    double wall_ms = 0.0;
    std::string note;
};

inline bool is_clique(const DisjointnessGraph& g, const std::vector<std::size_t>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= g.size())
            return false;
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j]))
                return false;
    }
    return true;
}

/// Default vertex bound for the exact search.
inline constexpr std::size_t kDefaultExactBound = 5000;

namespace detail {

/// Branch and bound with greedy-colouring bounds over bitsets, vertices
/// renumbered by non-increasing degree.
class MaxCliqueSearch {
public:
    using Clock = std::chrono::steady_clock;

    MaxCliqueSearch(const DisjointnessGraph& g, std::optional<Clock::time_point> deadline)
        : g_(g), deadline_(deadline), words_((g.size() + 63) / 64) {
        order_.resize(g.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::vector<std::size_t> deg(g.size());
        for (std::size_t v = 0; v < g.size(); ++v)
            deg[v] = g.degree(v);
        std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return deg[a] > deg[b]; });
        adj_.assign(g.size() * words_, 0);
        std::vector<std::size_t> pos(g.size());
        for (std::size_t i = 0; i < order_.size(); ++i)
            pos[order_[i]] = i;
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (std::size_t j = 0; j < order_.size(); ++j)
                if (g.adjacent(order_[i], order_[j]))
                    adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    void seed(const std::vector<std::size_t>& clique) {
        if (clique.size() > best_.size()) {
            best_.clear();
            // stored in renumbered coordinates
            std::vector<std::size_t> pos(g_.size());
            for (std::size_t i = 0; i < order_.size(); ++i)
                pos[order_[i]] = i;
            for (auto v : clique)
                best_.push_back(pos[v]);
        }
    }

    bool run() {
        std::vector<std::uint64_t> all(words_, 0);
        for (std::size_t v = 0; v < g_.size(); ++v)
            all[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::size_t> current;
        expand(current, all);
        return !timed_out_;
    }

    std::vector<std::size_t> best() const {
        std::vector<std::size_t> out;
        for (auto v : best_)
            out.push_back(order_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    const DisjointnessGraph& g_;
    std::optional<Clock::time_point> deadline_;
    std::size_t words_;
    std::vector<std::size_t> order_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;

    const std::uint64_t* nbr(std::size_t v) const { return adj_.data() + v * words_; }

    /// Greedy sequential colouring of `p`; vertices in colour order with the
    /// colour number (1-based) of each.
    void colour(const std::vector<std::uint64_t>& p, std::vector<std::size_t>& verts,
                std::vector<std::size_t>& colours) const {
        std::vector<std::uint64_t> uncoloured = p;
        std::size_t k = 0;
        while (std::any_of(uncoloured.begin(), uncoloured.end(), [](auto w) { return w != 0; })) {
            ++k;
            std::vector<std::uint64_t> q = uncoloured;
            for (std::size_t w = 0; w < words_; ++w) {
                while (q[w]) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(q[w]));
                    q[w] &= q[w] - 1;
                    uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
                    for (std::size_t t = w; t < words_; ++t)
                        q[t] &= ~nbr(v)[t];
                    verts.push_back(v);
                    colours.push_back(k);
                }
            }
        }
    }

    void expand(std::vector<std::size_t>& current, std::vector<std::uint64_t> p) {
        ++nodes_;
        if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_)
            timed_out_ = true;
        if (timed_out_)
            return;
        std::vector<std::size_t> verts, colours;
        colour(p, verts, colours);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current.size() + colours[i] <= best_.size() || timed_out_)
                return;
            const std::size_t v = verts[i];
            current.push_back(v);
            std::vector<std::uint64_t> np(words_);
            bool empty = true;
            for (std::size_t w = 0; w < words_; ++w) {
                np[w] = p[w] & nbr(v)[w];
                empty = empty && np[w] == 0;
            }
            if (empty) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(current, std::move(np));
            }
            current.pop_back();
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }
};

}  // namespace detail

/// Maximum clique by branch and bound. `exact` is false when the time budget
/// ran out; the best clique found so far is returned either way.
inline CliqueResult max_clique_exact(const DisjointnessGraph& g,
                                     std::optional<std::chrono::milliseconds> budget = std::nullopt,
                                     std::size_t vertex_bound = kDefaultExactBound) {
    if (g.size() > vertex_bound)
        throw Error(Errc::TooLarge, std::to_string(g.size()) + " vertices exceed the exact-search bound " +
                                        std::to_string(vertex_bound));
    const auto start = detail::MaxCliqueSearch::Clock::now();
    std::optional<detail::MaxCliqueSearch::Clock::time_point> deadline;
    if (budget)
        deadline = start + *budget;
    detail::MaxCliqueSearch search(g, deadline);
    CliqueResult res;
    res.exact = search.run();
    res.vertices = search.best();
    res.nodes = search.nodes();
    res.wall_ms = std::chrono::duration<double, std::milli>(detail::MaxCliqueSearch::Clock::now() - start).count();
    if (!res.exact)
        res.note = "time budget exhausted; clique is a lower bound only";
    if (!is_clique(g, res.vertices))
        throw Error(Errc::InternalExactnessFailure, "exact search returned a non-clique");
    return res;
}

namespace detail {

/// SplitMix64; fixed output for a fixed seed on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

private:
    std::uint64_t s_;
};

}  // namespace detail

/// Greedy extension of the seed followed by swap-and-extend local search.
/// The budget counts moves (the first move is the greedy extension of the
/// seed), so results are reproducible and never shrink as the budget grows.
inline CliqueResult clique_heuristic(const DisjointnessGraph& g, const std::vector<std::size_t>& seed,
                                     std::uint64_t moves, std::uint64_t rng_seed = 0x5eed) {
    if (!is_clique(g, seed))
        throw Error(Errc::InvalidSeed, "seed vertices are not a clique of the graph");
    const auto start = std::chrono::steady_clock::now();
    detail::Rng rng(rng_seed);
    const std::size_t n = g.size();
    std::vector<char> in(n, 0);
    std::vector<std::size_t> cur = seed;
    for (auto v : cur)
        in[v] = 1;
    std::vector<std::size_t> best = cur;
    std::vector<std::uint64_t> tabu_until(n, 0);

    // conflicts[v] = number of clique members not adjacent to v
    std::vector<std::size_t> conflicts(n, 0);
    auto recount = [&] {
        std::fill(conflicts.begin(), conflicts.end(), 0);
        for (auto u : cur)
            for (std::size_t v = 0; v < n; ++v)
                if (v != u && !g.adjacent(u, v))
                    ++conflicts[v];
    };
    auto add = [&](std::size_t v) {
        in[v] = 1;
        cur.push_back(v);
        for (std::size_t w = 0; w < n; ++w)
            if (w != v && !g.adjacent(v, w))
                ++conflicts[w];
    };
    auto remove = [&](std::size_t v) {
        in[v] = 0;
        cur.erase(std::find(cur.begin(), cur.end(), v));
        for (std::size_t w = 0; w < n; ++w)
            if (w != v && !g.adjacent(v, w))
                --conflicts[w];
    };
    auto extend = [&](std::uint64_t now) {
        for (;;) {
            std::vector<std::size_t> cand;
            for (std::size_t v = 0; v < n; ++v)
                if (!in[v] && conflicts[v] == 0 && tabu_until[v] <= now)
                    cand.push_back(v);
            if (cand.empty())
                return;
            std::size_t best_deg = 0;
            std::vector<std::size_t> top;
            for (auto v : cand) {
                std::size_t d = 0;
                for (auto u : cand)
                    d += (u != v && g.adjacent(u, v)) ? 1 : 0;
                if (top.empty() || d > best_deg) {
                    best_deg = d;
                    top.assign(1, v);
                } else if (d == best_deg) {
                    top.push_back(v);
                }
            }
            add(top[rng.below(top.size())]);
        }
    };

    recount();
    std::uint64_t move = 0;
    if (moves > 0 && n > 0) {
        extend(0);
        if (cur.size() > best.size())
            best = cur;
        move = 1;
    }
    for (; move < moves && n > 0; ++move) {
        // Prefer a vertex with exactly one conflict (a 1-swap), otherwise any
        // non-member; its non-neighbours leave and are tabu for a while.
        std::vector<std::size_t> one, other;
        for (std::size_t v = 0; v < n; ++v) {
            if (in[v] || tabu_until[v] > move)
                continue;
            (conflicts[v] == 1 ? one : other).push_back(v);
        }
        std::size_t v;
        if (!one.empty() && rng.below(8) != 0)
            v = one[rng.below(one.size())];
        else if (!other.empty())
            v = other[rng.below(other.size())];
        else
            break;
        std::vector<std::size_t> drop;
        for (auto u : cur)
            if (!g.adjacent(u, v))
                drop.push_back(u);
        for (auto u : drop) {
            remove(u);
            tabu_until[u] = move + 1 + 7 + rng.below(5);
        }
        add(v);
        extend(move);
        if (cur.size() > best.size())
            best = cur;
        // Occasional restart from the incumbent keeps the walk near good regions.
        if (move % 1000 == 999) {
            for (auto u : std::vector<std::size_t>(cur))
                remove(u);
            for (auto u : best)
                add(u);
        }
    }

    CliqueResult res;
    std::sort(best.begin(), best.end());
    res.vertices = std::move(best);
    res.exact = false;
    res.nodes = std::min<std::uint64_t>(move, moves);
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    res.note = "heuristic; not proven maximum";
    if (!is_clique(g, res.vertices))
        throw Error(Errc::InternalExactnessFailure, "local search produced a non-clique");
    return res;
}

/// Vertices of `c` spanning the subspaces of `code`, matched by canonical form.
inline std::vector<std::size_t> locate(const CandidateSet& c, const CodeC& code) {
    if (code.m != c.m || code.mt != 2 || !(code.alphabet.n == c.alphabet.n))
        throw Error(Errc::InvalidSeed, "seed code does not match the candidate alphabet or length");
    if (code.alphabet.includes_zero && !c.alphabet.includes_zero)
        throw Error(Errc::InvalidSeed, "seed code uses zero but the candidate alphabet does not");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < c.keys.size(); ++i)
        index.emplace(c.keys[i], i);
    const CycRing ring(std::max<std::uint32_t>(c.alphabet.n, 1));
    std::vector<std::size_t> out;
    for (const auto& s : code.subspaces) {
        auto key = canonical_key(s.gen, ring);
        if (!key)
            throw Error(Errc::InvalidSeed, "seed contains a rank-deficient generator");
        auto it = index.find(*key);
        if (it == index.end())
            throw Error(Errc::InvalidSeed, "seed plane is not among the candidates");
        out.push_back(it->second);
    }
    return out;
}

/// The code formed by the planes of a clique.
inline CodeC clique_code(const CandidateSet& c, const std::vector<std::size_t>& clique) {
    CodeC code;
    code.alphabet = c.alphabet;
    code.m = c.m;
    code.mt = 2;
    for (auto v : clique)
        code.subspaces.push_back(c.planes.at(v));
    return code;
}

}  // namespace nisp
