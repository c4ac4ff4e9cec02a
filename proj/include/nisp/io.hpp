/**************************************************************************
 * io.hpp
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

// Code files: JSON documents holding a code symbolically.
//
//   {
//     "format_version": 1,
//     "kind": "finite-field" | "lifted" | "psk" | "search",
//     "field":    {"p": 2, "k": 1, "poly": [1, 1]},          finite-field only
//     "alphabet": {"n": 7, "includes_zero": true},           other kinds
//     "m": 4, "mt": 2,
//     "subspaces": [ [[row], [row]], ... ],
//     "provenance": {...},
//     "certificate": {"method": "exact-ff", "pairs_checked": 10, "passed": true},
//     "search": {...}                                         search only
//   }
//
// Finite-field rows hold element indices; complex rows hold "Z" for zero or
// the exponent j of z_n^j.

#include "lift.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <variant>

namespace nisp {

inline constexpr int kFormatVersion = 1;

struct Certificate {
    std::string method;  // "exact-ff" | "exact-cyclotomic"
    std::size_t pairs_checked = 0;
    bool passed = false;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline Certificate certificate_of(const VerificationReport& r) { return {r.method, r.pairs_checked, r.passed()}; }

struct CodeFile {
    std::string kind;
    std::variant<CodeFF, CodeC> code;
    std::optional<Certificate> certificate;
    nlohmann::json search;  // null unless kind == "search"

    bool is_finite_field() const { return std::holds_alternative<CodeFF>(code); }
    const CodeFF& ff() const { return std::get<CodeFF>(code); }
    const CodeC& complex() const { return std::get<CodeC>(code); }
    std::size_t size() const {
        return is_finite_field() ? ff().subspaces.size() : complex().subspaces.size();
    }
};

inline bool same_code(const CodeFF& a, const CodeFF& b) {
    if (!(a.field == b.field) || a.m != b.m || a.mt != b.mt || a.subspaces.size() != b.subspaces.size() ||
        a.provenance != b.provenance)
        return false;
    for (std::size_t i = 0; i < a.subspaces.size(); ++i)
        if (!(a.subspaces[i].gen.entries == b.subspaces[i].gen.entries))
            return false;
    return true;
}

inline bool same_code(const CodeC& a, const CodeC& b) {
    if (!(a.alphabet == b.alphabet) || a.m != b.m || a.mt != b.mt || a.subspaces.size() != b.subspaces.size() ||
        a.provenance != b.provenance)
        return false;
    for (std::size_t i = 0; i < a.subspaces.size(); ++i)
        if (!(a.subspaces[i].gen == b.subspaces[i].gen))
            return false;
    return true;
}

inline bool operator==(const CodeFile& a, const CodeFile& b) {
    if (a.kind != b.kind || a.certificate != b.certificate || a.search != b.search ||
        a.code.index() != b.code.index())
        return false;
    return a.is_finite_field() ? same_code(a.ff(), b.ff()) : same_code(a.complex(), b.complex());
}

namespace detail {

inline nlohmann::json rows_json(const SubspaceFF& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < s.gen.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < s.gen.cols(); ++k)
            row.push_back(s.gen.entries(r, k).value);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json rows_json(const SubspaceC& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < s.gen.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < s.gen.cols(); ++k) {
            const SymbolC x = s.gen(r, k);
            if (x.is_zero())
                row.push_back("Z");
            else
                row.push_back(x.exponent());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

template <class T>
T get_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        parse_fail(std::string("bad field \"") + key + "\": " + e.what());
    }
}

inline std::uint64_t get_uint(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_unsigned())
        parse_fail(std::string("field \"") + key + "\" must be a nonnegative integer");
    return j.at(key).get<std::uint64_t>();
}

}  // namespace detail

/// Serialized text; one subspace per line, otherwise compact.
inline std::string write_code_file(const CodeFile& f) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"format_version\": " << kFormatVersion << ",\n";
    os << "  \"kind\": " << nlohmann::json(f.kind).dump() << ",\n";
    std::size_t m = 0, mt = 0;
    std::vector<std::string> lines;
    nlohmann::json provenance;
    if (f.is_finite_field()) {
        const CodeFF& c = f.ff();
        nlohmann::json field = {{"p", c.field.p()}, {"k", c.field.k()}, {"poly", c.field.poly()}};
        os << "  \"field\": " << field.dump() << ",\n";
        m = c.m;
        mt = c.mt;
        for (const auto& s : c.subspaces)
            lines.push_back(detail::rows_json(s).dump());
        provenance = c.provenance;
    } else {
        const CodeC& c = f.complex();
        nlohmann::json alphabet = {{"n", c.alphabet.n}, {"includes_zero", c.alphabet.includes_zero}};
        os << "  \"alphabet\": " << alphabet.dump() << ",\n";
        m = c.m;
        mt = c.mt;
        for (const auto& s : c.subspaces)
            lines.push_back(detail::rows_json(s).dump());
        provenance = c.provenance;
    }
    os << "  \"m\": " << m << ",\n";
    os << "  \"mt\": " << mt << ",\n";
    os << "  \"subspaces\": [";
    for (std::size_t i = 0; i < lines.size(); ++i)
        os << (i ? ",\n    " : "\n    ") << lines[i];
    os << (lines.empty() ? "],\n" : "\n  ],\n");
    os << "  \"provenance\": " << provenance.dump();
    if (f.certificate) {
        nlohmann::json cert = {{"method", f.certificate->method},
                               {"pairs_checked", f.certificate->pairs_checked},
                               {"passed", f.certificate->passed}};
        os << ",\n  \"certificate\": " << cert.dump();
    }
    if (!f.search.is_null())
        os << ",\n  \"search\": " << f.search.dump();
    os << "\n}\n";
    return os.str();
}

inline CodeFile parse_code_file(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        detail::parse_fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        detail::parse_fail("top level must be an object");
    if (detail::get_uint(j, "format_version") != static_cast<std::uint64_t>(kFormatVersion))
        detail::parse_fail("unsupported format_version");
    CodeFile f;
    f.kind = detail::get_field<std::string>(j, "kind");
    if (f.kind != "finite-field" && f.kind != "lifted" && f.kind != "psk" && f.kind != "search")
        detail::parse_fail("unknown kind \"" + f.kind + "\"");
    const std::size_t m = detail::get_uint(j, "m");
    const std::size_t mt = detail::get_uint(j, "mt");
    if (mt < 1 || mt > m)
        detail::parse_fail("need 1 <= mt <= m");
    if (!j.contains("subspaces") || !j.at("subspaces").is_array())
        detail::parse_fail("\"subspaces\" must be an array");
    const auto& subs = j.at("subspaces");
    nlohmann::json provenance = j.contains("provenance") ? j.at("provenance") : nlohmann::json::object();

    auto check_shape = [&](const nlohmann::json& s) {
        if (!s.is_array() || s.size() != mt)
            detail::parse_fail("each subspace needs mt rows");
        for (const auto& row : s)
            if (!row.is_array() || row.size() != m)
                detail::parse_fail("each row needs m entries");
    };

    if (f.kind == "finite-field") {
        const auto& fj = j.contains("field") ? j.at("field") : nlohmann::json();
        const auto p = detail::get_uint(fj, "p");
        const auto k = detail::get_uint(fj, "k");
        const auto poly = detail::get_field<std::vector<std::uint32_t>>(fj, "poly");
        CodeFF c;
        try {
            c.field = field_new(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), poly);
        } catch (const Error& e) {
            detail::parse_fail(std::string("invalid field: ") + e.what());
        }
        c.m = m;
        c.mt = mt;
        for (const auto& s : subs) {
            check_shape(s);
            Matrix<FieldElem> g(mt, m);
            for (std::size_t r = 0; r < mt; ++r)
                for (std::size_t col = 0; col < m; ++col) {
                    const auto& x = s[r][col];
                    if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= c.field.q())
                        detail::parse_fail("field element out of range: " + x.dump());
                    g(r, col) = {x.get<std::uint32_t>()};
                }
            c.subspaces.push_back({MatrixFF{c.field, std::move(g)}});
        }
        c.provenance = std::move(provenance);
        f.code = std::move(c);
    } else {
        const auto& aj = j.contains("alphabet") ? j.at("alphabet") : nlohmann::json();
        CodeC c;
        c.alphabet.n = static_cast<std::uint32_t>(detail::get_uint(aj, "n"));
        c.alphabet.includes_zero = detail::get_field<bool>(aj, "includes_zero");
        c.m = m;
        c.mt = mt;
        for (const auto& s : subs) {
            check_shape(s);
            Matrix<SymbolC> g(mt, m, SymbolC::zero());
            for (std::size_t r = 0; r < mt; ++r)
                for (std::size_t col = 0; col < m; ++col) {
                    const auto& x = s[r][col];
                    SymbolC sym = SymbolC::zero();
                    if (x.is_string() && x.get<std::string>() == "Z") {
                        sym = SymbolC::zero();
                    } else if (x.is_number_unsigned() && x.get<std::uint64_t>() < c.alphabet.n) {
                        sym = SymbolC::root(x.get<std::uint32_t>());
                    } else {
                        detail::parse_fail("invalid symbol " + x.dump());
                    }
                    if (!c.alphabet.contains(sym))
                        detail::parse_fail("symbol " + x.dump() + " is not in the declared alphabet");
                    g(r, col) = sym;
                }
            c.subspaces.push_back({std::move(g)});
        }
        c.provenance = std::move(provenance);
        f.code = std::move(c);
    }
    if (j.contains("certificate")) {
        const auto& cj = j.at("certificate");
        Certificate cert;
        cert.method = detail::get_field<std::string>(cj, "method");
        cert.pairs_checked = detail::get_uint(cj, "pairs_checked");
        cert.passed = detail::get_field<bool>(cj, "passed");
        f.certificate = cert;
    }
    if (j.contains("search"))
        f.search = j.at("search");
    return f;
}

inline CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::ParseError, "cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_code_file(text);
}

inline void write_code_file(const CodeFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::InvalidArgument, "cannot write " + path);
    out << write_code_file(f);
}

}  // namespace nisp
