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

#ifndef SYMF_TOURNAMENT_H
#define SYMF_TOURNAMENT_H

#include <cstdint>
#include <optional>
#include <vector>

#include "symf/sympframe.h"

namespace symf {

/// Seidel adjacency matrix of a tournament: zero diagonal, s_ij = -s_ji = ±1 off it.
/// s_ij = +1 means vertex i dominates vertex j.
class SeidelMatrix {
   public:
    /// Throws InvalidSeidel if the pattern is not a tournament.
    explicit SeidelMatrix(IntMatrix s);

    int n() const {
        return static_cast<int>(s_.rows());
    }
    const IntMatrix &matrix() const {
        return s_;
    }
    std::int64_t operator()(int i, int j) const {
        return s_(i, j);
    }

    bool operator==(const SeidelMatrix &other) const {
        return s_ == other.s_;
    }

   private:
    IntMatrix s_;
};

struct DegreeStats {
    std::vector<int> out_degrees;
    std::vector<int> in_degrees;
    /// common_out(i, j) = |N⁺(i) ∩ N⁺(j)|.
    IntMatrix common_out;
};

/// A ±1 diagonal used to switch Seidel matrices.
class SwitchingVector {
   public:
    /// Throws BadParameters if an entry is not ±1.
    explicit SwitchingVector(std::vector<int> eps);

    static SwitchingVector ones(int n) {
        return SwitchingVector(std::vector<int>(static_cast<size_t>(n), 1));
    }

    int size() const {
        return static_cast<int>(eps_.size());
    }
    int operator[](int i) const {
        return eps_[static_cast<size_t>(i)];
    }
    const std::vector<int> &values() const {
        return eps_;
    }

   private:
    std::vector<int> eps_;
};

SeidelMatrix seidel_from_gram(const GramSkew &g, const ToleranceProfile &tol = {});

DegreeStats degree_stats(const SeidelMatrix &s);

/// |N⁺(i) ∩ N⁻(j)| + |N⁻(i) ∩ N⁺(j)|, counted from the edge sets.
int gamma(const SeidelMatrix &s, int i, int j);

/// Exact integer S².
IntMatrix seidel_square(const SeidelMatrix &s);

/// Number of 4-vertex subsets whose principal minor is 9.
std::int64_t count_diamonds_bruteforce(const SeidelMatrix &s);

/// Closed form δ = n²(n-1)(n-2)/96 - (1/16) Σ_{i<j} ((S²)_ij)².
std::int64_t count_diamonds_formula(const SeidelMatrix &s);

/// 96 · n(n-1)(n-3)(n+1)/96, i.e. the diamond bound scaled to an exact integer.
std::int64_t diamond_bound_times96(int n);

/// n(n-1)(n-3)(n+1)/96 for odd n. Integral when n ≡ 3 (mod 4), not in general.
double diamond_upper_bound(int n);

/// True iff n is odd and δ equals the upper bound.
bool saturates_diamond_bound(const SeidelMatrix &s);

bool is_doubly_regular(const SeidelMatrix &s);

SeidelMatrix switch_tournament(const SeidelMatrix &s, const SwitchingVector &d);

/// The ±1 vector spanning a one-dimensional kernel with uniform-modulus entries,
/// normalized so its first entry is +1.
std::optional<SwitchingVector> flat_kernel(const SeidelMatrix &s, const ToleranceProfile &tol = {});

/// Exact determinant of a small integer matrix (cofactor expansion).
std::int64_t integer_determinant(const IntMatrix &m);

}  // namespace symf

#endif
