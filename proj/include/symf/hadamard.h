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

#ifndef SYMF_HADAMARD_H
#define SYMF_HADAMARD_H

#include <utility>

#include "symf/sympframe.h"
#include "symf/tournament.h"

namespace symf {

/// ±1 matrix H = C + I with C skew and HHᵀ = order·I.
class SkewHadamard {
   public:
    /// Throws NotSkewHadamard if the exact integer checks fail.
    explicit SkewHadamard(IntMatrix h);

    int order() const {
        return static_cast<int>(h_.rows());
    }
    const IntMatrix &matrix() const {
        return h_;
    }

   private:
    IntMatrix h_;
};

/// Zero diagonal, ±1 off it, Cᵀ = -C and CCᵀ = (order-1)·I.
class SkewConference {
   public:
    /// Throws NotSkewConference if the exact integer checks fail.
    explicit SkewConference(IntMatrix c);

    int order() const {
        return static_cast<int>(c_.rows());
    }
    const IntMatrix &matrix() const {
        return c_;
    }

   private:
    IntMatrix c_;
};

struct DoublingCoefficients {
    double a = 0.0;
    double b = 0.0;
    double y = 0.0;
    double z = 0.0;
    int d = 0;
};

bool is_skew_hadamard(const IntMatrix &h);
bool is_skew_conference(const IntMatrix &c);

/// DCD with first row (0, 1, ..., 1), plus the D used (D_11 = +1).
std::pair<SkewConference, SwitchingVector> normalize_conference(const SkewConference &c);

/// Lower-right (order-1)×(order-1) block of a normalized conference matrix.
SeidelMatrix core(const SkewConference &c);

SkewHadamard etf_to_hadamard_square(const GramSkew &g, const ToleranceProfile &tol = {});
GramSkew hadamard_to_etf_square(const SkewHadamard &h);
GramSkew hadamard_to_etf_core(const SkewHadamard &h);
SkewHadamard etf_core_to_hadamard(const GramSkew &g, const ToleranceProfile &tol = {});

/// [[H, H], [H - 2I, -H + 2I]].
SkewHadamard double_hadamard(const SkewHadamard &h);

DoublingCoefficients doubling_coefficients(int d);

/// Direct sum of d/2 copies of diag(1, -1); satisfies BᵀΩB = -Ω.
RealMatrix default_b_matrix(int d);

/// [[G, G + μI], [G - μI, -G]] for a d×d ETF Gram G with coherence μ.
RealMatrix doubled_gram(const RealMatrix &g, double mu);

/// 2d×2d ETF [[aμ⁻¹ΦΦ^†Φ, bΦ], [yBΦ, zBΦ]] whose Gram is doubled_gram(gram(Φ), μ).
SynthesisMatrix double_frame(const SynthesisMatrix &phi, const RealMatrix &b, const ToleranceProfile &tol = {});

/// Skew Hadamard matrix of a power-of-two order, from [1], [[1,1],[-1,1]] and doubling.
SkewHadamard seed_hadamard(int order);

}  // namespace symf

#endif
