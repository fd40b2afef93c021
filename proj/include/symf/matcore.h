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

#ifndef SYMF_MATCORE_H
#define SYMF_MATCORE_H

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace symf {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Thresholds shared by every numerical certificate. All three must lie in (0, 1).
struct ToleranceProfile {
    double rank_rel_tol = 1e-10;
    double residual_rel_tol = 1e-9;
    double entry_tol = 1e-9;

    /// Throws BadParameters unless every field is strictly between 0 and 1.
    void validate() const;
};

/// Orthogonal w and block scales with
///   a = wᵀ (0_{n-2r} ⊕ λ_1 J ⊕ ... ⊕ λ_r J) w,   J = [[0,1],[-1,0]],
/// lambdas strictly positive and descending; rank = 2r.
struct SkewSpectralForm {
    RealMatrix w;
    std::vector<double> lambdas;
    int rank = 0;

    /// The block-diagonal middle factor 0_{n-2r} ⊕ 𝒟Ω.
    RealMatrix canonical() const;
    /// wᵀ · canonical() · w.
    RealMatrix reconstruct() const;
};

SkewSpectralForm skew_spectral_form(const RealMatrix &a, const ToleranceProfile &tol = {});

/// Numerical rank: the number of singular values above rank_rel_tol·σ_max.
int rank_by_sv(const RealMatrix &a, const ToleranceProfile &tol = {});

/// Singular values in descending order.
RealVector singular_values(const RealMatrix &a);
double nuclear_norm(const RealMatrix &a);

bool all_finite(const RealMatrix &a);
bool all_finite(const ComplexMatrix &a);
void require_finite(const RealMatrix &a);
void require_square(const RealMatrix &a);

RealMatrix to_real(const IntMatrix &m);

/// Rounds every entry to the nearest integer; returns false (leaving `out` unspecified)
/// if some entry is farther than `tol` from an integer.
bool round_to_int(const RealMatrix &m, double tol, IntMatrix &out);

}  // namespace symf

#endif
