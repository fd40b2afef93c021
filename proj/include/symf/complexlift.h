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

#ifndef SYMF_COMPLEXLIFT_H
#define SYMF_COMPLEXLIFT_H

#include "symf/sympframe.h"
#include "symf/tournament.h"

namespace symf {

/// Hermitian, zero diagonal, unimodular off-diagonal n×n matrix.
class HermitianSignature {
   public:
    /// Throws InvalidSignature if the structure fails within `tol.entry_tol`.
    explicit HermitianSignature(ComplexMatrix q, const ToleranceProfile &tol = {});

    int n() const {
        return static_cast<int>(q_.rows());
    }
    const ComplexMatrix &matrix() const {
        return q_;
    }

   private:
    ComplexMatrix q_;
};

/// A d_c×n complex matrix of full row rank.
class ComplexSynthesis {
   public:
    /// Throws RankMismatch unless the rank equals the row count.
    explicit ComplexSynthesis(ComplexMatrix psi, const ToleranceProfile &tol = {});

    int d_c() const {
        return static_cast<int>(psi_.rows());
    }
    int n() const {
        return static_cast<int>(psi_.cols());
    }
    const ComplexMatrix &matrix() const {
        return psi_;
    }

   private:
    ComplexMatrix psi_;
};

/// Unimodular β = -1/√(d+2) + i·√(1 - 1/(d+2)).
struct BetaConstant {
    int d = 0;
    double re = 0.0;
    double im = 0.0;
};

BetaConstant beta_constant(int d);

struct SquareLift {
    ComplexMatrix gram;
    HermitianSignature signature;
    /// Im(gram) = alpha · g.
    double alpha = 0.0;
    /// gram = I + scale · signature.
    double scale = 0.0;
    int d_c = 0;
};

struct CoreLift {
    HermitianSignature signature;
    SwitchingVector switching;
    /// Im(I + scale·Q) = alpha · g.
    double alpha = 0.0;
    /// √(d+2)/d, which sends the negative eigenvalue of Q to zero.
    double scale = 0.0;
    int d_c = 0;
};

/// ‖Q² - cQ - (n-1)I‖_F ≤ residual_rel_tol·n with c = (n-2d_c)√((n-1)/(d_c(n-d_c))).
bool signature_check(const HermitianSignature &q, int d_c, const ToleranceProfile &tol = {});
double signature_residual(const HermitianSignature &q, int d_c);

SquareLift lift_square(const GramSkew &g, const ToleranceProfile &tol = {});
CoreLift lift_core(const GramSkew &g, const ToleranceProfile &tol = {});

/// Recovers the ±1 core K = Im(Q)/Im(β) from a core signature of size d+1.
IntMatrix recover_core(const HermitianSignature &q, const ToleranceProfile &tol = {});

/// Factor I + scale·Q = Ψ*Ψ with Ψ of rank d_c.
ComplexSynthesis synthesis_from_signature(const HermitianSignature &q, int d_c, double scale,
                                          const ToleranceProfile &tol = {});

/// Rows Re(ψ_1), Im(ψ_1), Re(ψ_2), ...; satisfies Im(Ψ*Ψ) = Ψ_⋄ᵀΩΨ_⋄.
SynthesisMatrix realify(const ComplexSynthesis &psi);

}  // namespace symf

#endif
