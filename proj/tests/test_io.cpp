/**************************************************************************
 * test_io.cpp
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

#include "nisp/codes_psk.hpp"
#include "nisp/io.hpp"
#include "nisp/table.hpp"
#include "support.hpp"

#include <filesystem>

using namespace nisp;

namespace {

CodeFile ff_file(std::uint64_t q, std::size_t m, std::size_t mt) {
    CodeFile f;
    f.kind = "finite-field";
    CodeFF c = spread_construct(field_for_order(q), m, mt);
    f.certificate = certificate_of(verify_code_ff(c));
    f.code = std::move(c);
    return f;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
    const auto at = s.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    if (at != std::string::npos)
        s.replace(at, from.size(), to);
    return s;
}

}  // namespace

TEST(CodeFileIo, RoundTripsEveryKind) {
    std::vector<CodeFile> files;
    files.push_back(ff_file(2, 4, 2));
    files.push_back(ff_file(9, 2, 1));
    files.push_back(ff_file(4, 6, 3));
    CodeFile lifted;
    lifted.kind = "lifted";
    lifted.code = lift_code(files[0].ff());
    files.push_back(lifted);
    CodeFile psk;
    psk.kind = "psk";
    psk.code = psk_construct(3, 4);
    files.push_back(psk);
    CodeFile search = psk;
    search.kind = "search";
    search.search = {{"best_size", 64}, {"graph_hash", "abc"}};
    files.push_back(search);
    CodeFile empty = psk;
    std::get<CodeC>(empty.code).subspaces.clear();
    files.push_back(empty);

    for (const auto& f : files) {
        const std::string text = write_code_file(f);
        const CodeFile back = parse_code_file(text);
        EXPECT_EQ(back, f) << f.kind;
        EXPECT_EQ(write_code_file(back), text);
    }
}

TEST(CodeFileIo, OneSubspacePerLine) {
    const std::string text = write_code_file(ff_file(2, 4, 2));
    EXPECT_NE(text.find("[[1,0,0,0],[0,1,1,0]]"), std::string::npos);
    EXPECT_NE(text.find("\"format_version\": 1"), std::string::npos);
}

TEST(CodeFileIo, ZeroSymbolEncoding) {
    CodeFile f;
    f.kind = "lifted";
    f.code = lift_code(spread_construct(field_for_order(4), 2, 1));
    const std::string text = write_code_file(f);
    EXPECT_NE(text.find("\"Z\""), std::string::npos);
}

TEST(CodeFileIo, RejectsCorruption) {
    CodeFile psk;
    psk.kind = "psk";
    psk.code = psk_construct(1, 4);
    const std::string good = write_code_file(psk);
    const std::string ff = write_code_file(ff_file(2, 4, 2));
    EXPECT_ERRC(parse_code_file(""), Errc::ParseError);
    EXPECT_ERRC(parse_code_file("[]"), Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(good, "\"format_version\": 1", "\"format_version\": 2")),
                Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(good, "\"psk\"", "\"other\"")), Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(good, "[[0,0,0,0]", "[[0,0,0,2]")), Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(good, "[[0,0,0,0]", "[[0,0,0,\"Q\"]")), Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(good, "[[0,0,0,0]", "[[0,0,0,\"Z\"]")), Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(good, "[[0,0,0,0]", "[[0,0,0]")), Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(good, "\"mt\": 2", "\"mt\": 5")), Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(ff, "[[1,0,0,0]", "[[1,0,0,2]")), Errc::ParseError);
    EXPECT_ERRC(parse_code_file(replace_once(ff, "\"poly\":[1,1]", "\"poly\":[0,1,1]")), Errc::ParseError);
    EXPECT_ERRC(read_code_file("/nonexistent/nisp/code.json"), Errc::ParseError);
}

TEST(CodeFileIo, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "nisp_io_roundtrip.json";
    const CodeFile f = ff_file(3, 4, 2);
    write_code_file(f, path.string());
    EXPECT_EQ(read_code_file(path.string()), f);
    std::filesystem::remove(path);
}

TEST(PlaneTable, CellsAndStableText) {
    const auto cells = plane_count_table();
    ASSERT_EQ(cells.size(), 9u);
    auto cell = [&](std::uint32_t a, std::size_t m) {
        for (const auto& c : cells)
            if (c.alphabet_size == a && c.m == m)
                return c;
        ADD_FAILURE() << a << " " << m;
        return cells[0];
    };
    EXPECT_EQ(cell(4, 6).finite_field, 273);
    EXPECT_EQ(cell(4, 6).psk_lower, 256);
    EXPECT_EQ(cell(4, 6).psk_upper, 512);
    EXPECT_EQ(cell(2, 8).finite_field, 85);
    EXPECT_EQ(cell(2, 8).psk_lower, 64);
    EXPECT_EQ(cell(2, 8).psk_upper, 64);
    EXPECT_EQ(cell(8, 8).finite_field, 266305);
    EXPECT_EQ(cell(8, 8).psk_lower, 262144);
    EXPECT_EQ(cell(8, 8).psk_upper, 1048576);
    EXPECT_EQ(format_plane_count_table(), format_plane_count_table());
    EXPECT_EQ(plane_count_table_json().size(), 9u);
}
