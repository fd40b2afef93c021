// Copyright 2026 The symf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMF_TESTS_FIXTURES_H
#define SYMF_TESTS_FIXTURES_H

#include <cmath>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "symf/error.h"
#include "symf/matcore.h"

namespace symf::testing {

inline void expect_code(ErrorCode code, const std::function<void()> &fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << error_code_name(code);
    } catch (const SymfError &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

inline IntMatrix conf_c() {
    IntMatrix c(4, 4);
    c << 0, 1, 1, 1, -1, 0, -1, 1, -1, 1, 0, -1, -1, -1, 1, 0;
    return c;
}

inline IntMatrix conf_k() {
    return conf_c().bottomRightCorner(3, 3);
}

inline RealMatrix tight_g() {
    RealMatrix g(3, 3);
    g << 0, 0, -2, 0, 0, 1, 2, -1, 0;
    return g / std::sqrt(5.0);
}

inline RealMatrix basic_phi() {
    RealMatrix phi(2, 3);
    phi << 1, 0, 0, 0, 1, 1;
    return phi;
}

inline RealMatrix omega2() {
    RealMatrix o(2, 2);
    o << 0, 1, -1, 0;
    return o;
}

inline RealMatrix random_matrix(int rows, int cols, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    RealMatrix m(rows, cols);
    for (Eigen::Index k = 0; k < m.size(); ++k) {
        m(k) = u(rng);
    }
    return m;
}

inline RealMatrix random_skew(int n, std::mt19937_64 &rng) {
    RealMatrix m = random_matrix(n, n, rng);
    return m - m.transpose();
}

inline IntMatrix random_tournament(int n, std::mt19937_64 &rng) {
    IntMatrix s = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            s(i, j) = (rng() & 1u) ? 1 : -1;
            s(j, i) = -s(i, j);
        }
    }
    return s;
}

/// The tournament whose Seidel matrix has bit k of `mask` on the k-th upper pair.
inline IntMatrix tournament_from_mask(int n, std::uint64_t mask) {
    IntMatrix s = IntMatrix::Zero(n, n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            s(i, j) = ((mask >> bit) & 1u) ? 1 : -1;
            s(j, i) = -s(i, j);
        }
    }
    return s;
}

/// Vertex i beats j whenever i < j.
inline IntMatrix transitive_tournament(int n) {
    IntMatrix s = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            s(i, j) = 1;
            s(j, i) = -1;
        }
    }
    return s;
}

}  // namespace symf::testing

#endif
