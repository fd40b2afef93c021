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

#ifndef SYMF_SEARCH_H
#define SYMF_SEARCH_H

#include <cstdint>
#include <variant>
#include <vector>

#include "symf/potential.h"
#include "symf/tournament.h"

namespace symf {

struct SearchConfig {
    std::uint64_t seed = 0;
    int restarts = 1;
    int max_iters = 5000;
    double step = 0.5;
    double target_residual = 1e-6;

    /// Throws BadParameters on restarts < 1, max_iters < 1, step <= 0 or target < 0.
    void validate() const;
};

struct SearchOutcome {
    bool success = false;
    double best_value = 0.0;
    /// Synthesis matrix for the continuous search, tournament for the discrete one.
    std::variant<RealMatrix, SeidelMatrix> best_object = RealMatrix();
    int iterations_used = 0;
    int restart_index = 0;
    int successful_restarts = 0;
    /// Final objective of every restart, in restart order.
    std::vector<double> restart_values;
};

/// Maintains S² under single-edge flips of a tournament in O(n) per flip.
class SeidelSquareTracker {
   public:
    explicit SeidelSquareTracker(const SeidelMatrix &s);

    int n() const {
        return static_cast<int>(s_.rows());
    }
    /// Σ_{i<j} ((S²)_ij)².
    std::int64_t objective() const {
        return objective_;
    }
    /// Change of objective() if edge {i, j} were reversed.
    std::int64_t flip_delta(int i, int j) const;
    void flip(int i, int j);

    const IntMatrix &square() const {
        return sq_;
    }
    SeidelMatrix seidel() const {
        return SeidelMatrix(s_);
    }

   private:
    IntMatrix s_;
    IntMatrix sq_;
    std::int64_t objective_ = 0;
};

/// Seeded generator for one restart; identical (seed, restart) give identical streams.
std::uint64_t restart_seed(std::uint64_t seed, int restart_index);

/// Projected gradient descent on SF_p at fixed nuclear norm √(d n (n-1)).
SearchOutcome continuous_etf_search(int d, int n, double p, const SearchConfig &cfg);

/// Edge-flip local search minimizing Σ_{i<j} ((S²)_ij)².
SearchOutcome discrete_diamond_search(int n, const SearchConfig &cfg);

/// Minimum numerical rank over all 2^{n(n-1)/2} Seidel sign patterns, 2 <= n <= 6.
int gerzon_oracle(int n, const ToleranceProfile &tol = {});

}  // namespace symf

#endif
