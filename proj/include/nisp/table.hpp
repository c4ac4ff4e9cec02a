/**************************************************************************
 * table.hpp
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

// Plane counts (M_t = 2) for alphabets of size 2, 4, 8 and m = 4, 6, 8:
// the finite-field spread size next to the PSK construction size and the
// PSK counting bound.

#include "codes_ff.hpp"
#include "codes_psk.hpp"

#include <iomanip>

namespace nisp {

struct PlaneCountCell {
    std::uint32_t alphabet_size;
    std::size_t m;
    BigInt finite_field;  // (q^m - 1)/(q^2 - 1)
    BigInt psk_lower;     // 2^((m-2) r)
    BigInt psk_upper;     // 2^((m-1) r - 1)
};

inline std::vector<PlaneCountCell> plane_count_table() {
    std::vector<PlaneCountCell> cells;
    for (std::uint32_t r = 1; r <= 3; ++r)
        for (std::size_t m : {4u, 6u, 8u}) {
            const std::uint32_t a = std::uint32_t{1} << r;
            cells.push_back({a, m, bound_ff(a, m, 2).value, psk_lower_bound(r, m), psk_upper_bound(r, m)});
        }
    return cells;
}

inline std::string format_plane_count_table() {
    const auto cells = plane_count_table();
    std::ostringstream os;
    os << "Pairwise nonintersecting planes in C^m (M_t = 2)\n";
    os << "top: finite-field spread; bottom: PSK construction - PSK upper bound\n\n";
    constexpr int w = 18;
    os << std::left << std::setw(8) << "|A|";
    for (std::size_t m : {4u, 6u, 8u})
        os << std::setw(w) << ("m=" + std::to_string(m));
    os << "\n";
    for (std::size_t row = 0; row < 3; ++row) {
        os << std::setw(8) << cells[row * 3].alphabet_size;
        for (std::size_t col = 0; col < 3; ++col)
            os << std::setw(w) << cells[row * 3 + col].finite_field.str();
        os << "\n" << std::setw(8) << "";
        for (std::size_t col = 0; col < 3; ++col) {
            const auto& c = cells[row * 3 + col];
            os << std::setw(w) << (c.psk_lower.str() + "-" + c.psk_upper.str());
        }
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json plane_count_table_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : plane_count_table())
        out.push_back({{"alphabet_size", c.alphabet_size},
                       {"m", c.m},
                       {"finite_field", c.finite_field.str()},
                       {"psk_lower", c.psk_lower.str()},
                       {"psk_upper", c.psk_upper.str()}});
    return out;
}

}  // namespace nisp
