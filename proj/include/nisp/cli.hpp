/**************************************************************************
 * cli.hpp
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

// The `nisp` command line. Exit codes: 0 success / verified, 1 verification
// failure, 2 usage, parse or parameter error.

#include "codes_ff.hpp"
#include "codes_psk.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "lift.hpp"
#include "search.hpp"
#include "table.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>

namespace nisp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Polynomial text, highest degree first: "10011" is x^4 + x + 1. Digits
/// are coefficients; use commas for coefficients above 9 ("1,0,12").
inline std::vector<std::uint32_t> parse_poly(const std::string& text) {
    std::vector<std::uint32_t> high_first;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
                throw Error(Errc::InvalidArgument, "bad polynomial coefficient \"" + part + "\"");
            high_first.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw Error(Errc::InvalidArgument, "bad polynomial \"" + text + "\"");
            high_first.push_back(static_cast<std::uint32_t>(ch - '0'));
        }
    }
    if (high_first.empty())
        throw Error(Errc::InvalidArgument, "empty polynomial");
    return {high_first.rbegin(), high_first.rend()};
}

namespace detail {

inline void emit(const CodeFile& f, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-")
        out << write_code_file(f);
    else
        write_code_file(f, path);
}

inline void print_report(const VerificationReport& rep, std::size_t mt, std::ostream& out) {
    out << "method: " << rep.method << "\n";
    out << "subspaces: " << rep.subspaces << "\n";
    out << "pairs checked: " << rep.pairs_checked << "\n";
    for (auto i : rep.rank_deficient)
        out << "rank-deficient subspace: " << i << "\n";
    for (const auto& p : rep.failing_pairs)
        out << "intersecting pair: " << p.first << " " << p.second << " (rank < " << 2 * mt << ")\n";
    out << (rep.passed() ? "PASS: all pairs nonintersecting\n" : "FAIL\n");
}

inline CodeC complex_view(const CodeFile& f) {
    if (!f.is_finite_field())
        return f.complex();
    // Numeric geometry needs the complex realization; lift symbolwise
    // without re-verifying (the verify command owns that).
    const CodeFF& c = f.ff();
    CodeC out;
    out.alphabet = {c.field.q() - 1, true};
    out.m = c.m;
    out.mt = c.mt;
    for (const auto& s : c.subspaces) {
        Matrix<SymbolC> g(s.gen.rows(), s.gen.cols(), SymbolC::zero());
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t k = 0; k < g.cols(); ++k)
                g(r, k) = lift_symbol(s.gen.entries(r, k), c.field);
        out.subspaces.push_back({std::move(g)});
    }
    return out;
}

inline std::size_t alphabet_size(const CodeFile& f) {
    return f.is_finite_field() ? f.ff().field.q() : f.complex().alphabet.size();
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nonintersecting subspaces over finite alphabets"};
    app.require_subcommand(1);
    std::size_t jobs = 1;

    // construct-ff
    auto* cff = app.add_subcommand("construct-ff", "spread of M_t-subspaces of GF(q)^m, verified");
    std::uint64_t q = 2;
    std::size_t m = 4, mt = 2;
    std::string poly_text, base_poly_text, out_path;
    cff->add_option("--q", q, "alphabet field order (prime power)")->required();
    cff->add_option("--m", m, "block length")->required();
    cff->add_option("--mt", mt, "subspace dimension")->required();
    cff->add_option("--poly", poly_text, "primitive polynomial of GF(q^m) over GF(q), highest degree first");
    cff->add_option("--base-poly", base_poly_text, "primitive polynomial of GF(q) over GF(p), highest degree first");
    cff->add_option("-o,--out", out_path, "output file (default stdout)");
    cff->add_option("--jobs", jobs, "worker threads for pairwise checks (0 = all cores)");

    // lift
    auto* lift = app.add_subcommand("lift", "lift a verified finite-field code to roots of unity");
    std::string in_path;
    lift->add_option("--in", in_path, "finite-field code file")->required();
    lift->add_option("-o,--out", out_path, "output file (default stdout)");
    lift->add_option("--jobs", jobs, "worker threads for pairwise checks (0 = all cores)");

    // construct-psk
    auto* cpsk = app.add_subcommand("construct-psk", "recursive PSK plane construction");
    std::uint32_t r = 1;
    bool verify_now = false;
    cpsk->add_option("--r", r, "alphabet of 2^r roots of unity")->required();
    cpsk->add_option("--m", m, "even block length")->required();
    cpsk->add_flag("--verify", verify_now, "run exact pairwise verification and attach a certificate");
    cpsk->add_option("-o,--out", out_path, "output file (default stdout)");
    cpsk->add_option("--jobs", jobs, "worker threads for pairwise checks (0 = all cores)");

    // verify
    auto* ver = app.add_subcommand("verify", "exact pairwise nonintersection check");
    bool as_json = false;
    ver->add_option("--in", in_path, "code file")->required();
    ver->add_flag("--json", as_json, "machine-readable report");
    ver->add_option("--jobs", jobs, "worker threads for pairwise checks (0 = all cores)");

    // metrics
    auto* met = app.add_subcommand("metrics", "rate and principal-angle distances");
    met->add_option("--in", in_path, "code file")->required();
    met->add_flag("--json", as_json, "machine-readable report");

    // table1
    auto* tab = app.add_subcommand("table1", "plane counts for |A| in {2,4,8}, m in {4,6,8}");
    tab->add_flag("--json", as_json, "machine-readable table");

    // search
    auto* srch = app.add_subcommand("search", "clique search for large nonintersecting plane families");
    std::optional<std::uint32_t> psk_r;
    std::optional<std::uint32_t> root_order;
    bool with_zero = false;
    std::string mode = "heuristic", seed_path;
    std::int64_t budget_ms = 60000;
    std::uint64_t moves = 20000, rng_seed = 0x5eed, limit = kDefaultEnumerationLimit;
    std::size_t exact_bound = kDefaultExactBound;
    srch->add_option("--psk-r", psk_r, "alphabet of 2^r roots of unity");
    srch->add_option("--root-order", root_order, "alphabet of n-th roots of unity");
    srch->add_flag("--with-zero", with_zero, "include 0 in the alphabet");
    srch->add_option("--m", m, "block length")->required();
    srch->add_option("--mode", mode, "exact | heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
    srch->add_option("--budget-ms", budget_ms, "wall-clock budget of the exact search (ms)");
    srch->add_option("--moves", moves, "local-search moves of the heuristic");
    srch->add_option("--seed", seed_path, "code file whose planes seed the heuristic");
    srch->add_option("--rng-seed", rng_seed, "heuristic random seed");
    srch->add_option("--exact-bound", exact_bound, "largest vertex count for the exact search");
    srch->add_option("--limit", limit, "cap on vector pairs during enumeration");
    srch->add_option("-o,--out", out_path, "output file (default stdout)");
    srch->add_option("--jobs", jobs, "worker threads for pairwise checks (0 = all cores)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*cff) {
            FieldSpec base = base_poly_text.empty() ? field_for_order(q) : [&] {
                const auto pf = nisp::detail::prime_factors(q);
                if (pf.size() != 1)
                    throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
                const auto coeffs = parse_poly(base_poly_text);
                return field_new(static_cast<std::uint32_t>(pf[0]), static_cast<std::uint32_t>(coeffs.size() - 1),
                                 coeffs);
            }();
            if (base.q() != q)
                throw Error(Errc::InvalidArgument, "--base-poly degree does not match q");
            if (mt < 1 || mt > m || m % mt != 0)
                throw Error(Errc::DivisibilityViolated, "M_t must divide m");
            std::optional<std::vector<FieldElem>> ext_poly;
            if (!poly_text.empty()) {
                ext_poly.emplace();
                for (auto c : parse_poly(poly_text))
                    ext_poly->push_back({c});
            }
            CodeFile f;
            f.kind = "finite-field";
            CodeFF code = spread_construct(make_extension(base, m, ext_poly), mt);
            const auto rep = verify_code_ff(code, jobs);
            f.certificate = certificate_of(rep);
            f.code = std::move(code);
            detail::emit(f, out_path, out);
            if (!rep.passed()) {
                detail::print_report(rep, mt, err);
                return kExitVerifyFailed;
            }
            return kExitOk;
        }

        if (*lift) {
            const CodeFile in = read_code_file(in_path);
            if (!in.is_finite_field())
                throw Error(Errc::InvalidArgument, "lift expects a finite-field code");
            if (!in.certificate || !in.certificate->passed || in.certificate->method != "exact-ff")
                throw Error(Errc::UnverifiedInput, "input carries no passing exact-ff certificate");
            CodeC lifted = lift_code(in.ff(), jobs);
            const auto rep = verify_lift(lifted, jobs);
            CodeFile f;
            f.kind = "lifted";
            f.certificate = certificate_of(rep);
            f.code = std::move(lifted);
            detail::emit(f, out_path, out);
            if (!rep.passed()) {
                detail::print_report(rep, in.ff().mt, err);
                return kExitVerifyFailed;
            }
            return kExitOk;
        }

        if (*cpsk) {
            CodeFile f;
            f.kind = "psk";
            CodeC code = psk_construct(r, m);
            int status = kExitOk;
            if (verify_now) {
                const auto rep = verify_lift(code, jobs);
                f.certificate = certificate_of(rep);
                if (!rep.passed()) {
                    detail::print_report(rep, 2, err);
                    status = kExitVerifyFailed;
                }
            }
            f.code = std::move(code);
            detail::emit(f, out_path, out);
            return status;
        }

        if (*ver) {
            const CodeFile in = read_code_file(in_path);
            const VerificationReport rep =
                in.is_finite_field() ? verify_code_ff(in.ff(), jobs) : verify_lift(in.complex(), jobs);
            const std::size_t code_mt = in.is_finite_field() ? in.ff().mt : in.complex().mt;
            if (as_json) {
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& p : rep.failing_pairs)
                    pairs.push_back({p.first, p.second});
                out << nlohmann::json{{"method", rep.method},
                                      {"subspaces", rep.subspaces},
                                      {"pairs_checked", rep.pairs_checked},
                                      {"rank_deficient", rep.rank_deficient},
                                      {"failing_pairs", pairs},
                                      {"passed", rep.passed()}}
                           .dump(2)
                    << "\n";
            } else {
                detail::print_report(rep, code_mt, out);
            }
            return rep.passed() ? kExitOk : kExitVerifyFailed;
        }

        if (*met) {
            const CodeFile in = read_code_file(in_path);
            const CodeC c = detail::complex_view(in);
            const RateReport rr = rate(c.subspaces.size(), c.m, detail::alphabet_size(in));
            const DistanceSummary ds = min_distance(c);
            if (as_json) {
                nlohmann::json j{{"codewords", c.subspaces.size()},
                                 {"m", c.m},
                                 {"mt", c.mt},
                                 {"alphabet_size", detail::alphabet_size(in)},
                                 {"rate", rr.rate},
                                 {"rate_gap", rr.gap},
                                 {"pairs", ds.pairs}};
                if (ds.pairs > 0) {
                    j["lambda"] = {{"min", ds.lambda.min}, {"mean", ds.lambda.mean}, {"max", ds.lambda.max}};
                    j["chordal"] = {{"min", ds.chordal.min}, {"mean", ds.chordal.mean}, {"max", ds.chordal.max}};
                    j["argmin_lambda"] = {ds.argmin_lambda.first, ds.argmin_lambda.second};
                }
                out << j.dump(2) << "\n";
            } else {
                out << std::setprecision(6) << std::fixed;
                out << "codewords: " << c.subspaces.size() << "\n";
                out << "rate: " << rr.rate << " bits/symbol (log2|A| - R = " << rr.gap << ")\n";
                if (ds.pairs == 0) {
                    out << "no pairs\n";
                } else {
                    out << "pairs: " << ds.pairs << "\n";
                    out << "lambda  min/mean/max: " << ds.lambda.min << " " << ds.lambda.mean << " "
                        << ds.lambda.max << "\n";
                    out << "chordal min/mean/max: " << ds.chordal.min << " " << ds.chordal.mean << " "
                        << ds.chordal.max << "\n";
                    out << "argmin lambda pair: " << ds.argmin_lambda.first << " " << ds.argmin_lambda.second
                        << "\n";
                }
            }
            return kExitOk;
        }

        if (*tab) {
            if (as_json)
                out << plane_count_table_json().dump(2) << "\n";
            else
                out << format_plane_count_table();
            return kExitOk;
        }

        if (*srch) {
            if (psk_r.has_value() == root_order.has_value())
                throw Error(Errc::InvalidArgument, "give exactly one of --psk-r and --root-order");
            Alphabet alphabet;
            if (psk_r) {
                check_r(*psk_r);
                alphabet = {std::uint32_t{1} << *psk_r, with_zero};
            } else {
                alphabet = {*root_order, with_zero};
            }
            // Read the seed before the expensive enumeration so bad seeds fail fast.
            std::optional<CodeC> seed_code;
            if (!seed_path.empty()) {
                CodeFile sf;
                try {
                    sf = read_code_file(seed_path);
                } catch (const Error& e) {
                    throw Error(Errc::InvalidSeed, std::string("seed file: ") + e.what());
                }
                if (sf.is_finite_field())
                    throw Error(Errc::InvalidSeed, "seed must be a complex code");
                seed_code = sf.complex();
            }

            const CandidateSet cand = enumerate_planes(alphabet, m, limit);
            const DisjointnessGraph graph = build_graph(cand, jobs);

            std::vector<std::size_t> seed;
            std::string seed_origin = "none";
            if (seed_code) {
                seed = locate(cand, *seed_code);
                seed_origin = seed_path;
            } else if (mode == "heuristic" && psk_r && !with_zero && m % 2 == 0 && m >= 2) {
                seed = locate(cand, psk_construct(*psk_r, m));
                seed_origin = "psk_construct";
            }

            CliqueResult res;
            std::string ran = mode;
            if (mode == "exact" && graph.size() > exact_bound) {
                res = clique_heuristic(graph, {}, moves, rng_seed);
                ran = "heuristic";
                res.note = "WARNING: " + std::to_string(graph.size()) +
                           " candidates exceed the exact bound; fell back to the heuristic. " + res.note;
            } else if (mode == "exact") {
                res = max_clique_exact(graph, std::chrono::milliseconds(budget_ms), exact_bound);
            } else {
                res = clique_heuristic(graph, seed, moves, rng_seed);
            }

            CodeC best = clique_code(cand, res.vertices);
            const auto rep = verify_lift(best, jobs);
            if (!rep.passed())
                throw Error(Errc::InternalExactnessFailure, "clique failed independent re-verification");
            best.provenance = {{"construction", "clique-search"}};

            CodeFile f;
            f.kind = "search";
            f.certificate = certificate_of(rep);
            f.search = {{"alphabet", {{"n", alphabet.n}, {"includes_zero", alphabet.includes_zero}}},
                        {"m", m},
                        {"candidates", cand.planes.size()},
                        {"edges", graph.edge_count()},
                        {"graph_hash", graph.hash()},
                        {"mode", ran},
                        {"best_size", res.vertices.size()},
                        {"exact", res.exact},
                        {"clique", res.vertices},
                        {"seed", seed_origin},
                        {"seed_size", seed.size()},
                        {"rng_seed", rng_seed},
                        {"moves", moves},
                        {"budget_ms", budget_ms},
                        {"nodes", res.nodes},
                        {"wall_ms", res.wall_ms},
                        {"jobs", jobs},
                        {"note", res.note}};
            f.code = std::move(best);
            if (!out_path.empty() && out_path != "-")
                write_code_file(f, out_path);
            out << "candidates: " << cand.planes.size() << "\n";
            out << "edges: " << graph.edge_count() << "\n";
            out << "graph hash: " << graph.hash() << "\n";
            out << "mode: " << ran << "\n";
            out << "best clique: " << res.vertices.size() << (res.exact ? " (proven maximum)" : "") << "\n";
            if (!res.note.empty())
                out << "note: " << res.note << "\n";
            if (out_path.empty())
                out << write_code_file(f);
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::InternalExactnessFailure ? kExitVerifyFailed : kExitUsage;
    }
    return kExitUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace nisp::cli
