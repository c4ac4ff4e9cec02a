/**************************************************************************
 * support.hpp
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

#include "nisp/common.hpp"

#include <gtest/gtest.h>

// Asserts that `stmt` throws nisp::Error carrying `errc`.
#define EXPECT_ERRC(stmt, errc)                                                        \
    do {                                                                               \
        bool nisp_thrown_ = false;                                                     \
        try {                                                                          \
            stmt;                                                                      \
        } catch (const ::nisp::Error& e) {                                             \
            nisp_thrown_ = true;                                                       \
            EXPECT_EQ(e.code(), errc) << e.what();                                     \
        }                                                                              \
        EXPECT_TRUE(nisp_thrown_) << "expected nisp::Error from " #stmt;               \
    } while (0)
