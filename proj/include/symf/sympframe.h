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

#ifndef SYMF_SYMPFRAME_H
#define SYMF_SYMPFRAME_H

#include <optional>
#include <set>

#include "symf/matcore.h"

namespace symf {

/// A d×n real matrix whose columns are vectors of the symplectic space R_S^d.
class SynthesisMatrix {
   public:
    /// Throws OddDimension unless rows are even and ≥ 2, BadDimension if there are no columns.
    explicit SynthesisMatrix(RealMatrix m);

    int d() const {
        return static_cast<int>(m_.rows());
    }
    int n() const {
        return static_cast<int>(m_.cols());
    }
    const RealMatrix &matrix() const {
        return m_;
    }

   private:
    RealMatrix m_;
};

/// A skew-symmetric n×n matrix Φ^†Φ = ΦᵀΩΦ.
class GramSkew {
   public:
    /// Validates squareness, finiteness and skew symmetry against `tol.entry_tol`.
    explicit GramSkew(RealMatrix g, const ToleranceProfile &tol = {});

    int n() const {
        return static_cast<int>(g_.rows());
    }
    const RealMatrix &matrix() const {
        return g_;
    }

   private:
    RealMatrix g_;
};

struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct EtfCertificate {
    int d = 0;
    int n = 0;
    double mu = 0.0;
    double c = 0.0;
    double equiangular_residual = 0.0;
    double tightness_residual = 0.0;
};

/// Kind of bilinear form carried by a space; selects the adjoint formula.
enum class FormKind { Euclidean, Symplectic };

/// The d×d direct sum of [[0,1],[-1,0]] blocks.
RealMatrix omega(int d);

/// Adjoint of A : (domain, form) → (codomain, form): Q_domain⁻¹ Aᵀ Q_codomain.
RealMatrix adjoint(const RealMatrix &a, FormKind domain, FormKind codomain);

RealMatrix analysis(const SynthesisMatrix &phi);
GramSkew gram(const SynthesisMatrix &phi);
RealMatrix frame_operator(const SynthesisMatrix &phi);

bool is_frame(const SynthesisMatrix &phi, const ToleranceProfile &tol = {});
FrameBounds frame_bounds(const SynthesisMatrix &phi, const ToleranceProfile &tol = {});
SynthesisMatrix dual_frame(const SynthesisMatrix &phi, const ToleranceProfile &tol = {});

/// Φ = DU with gram(Φ) = g and d = rank(g).
SynthesisMatrix factor_gram(const GramSkew &g, const ToleranceProfile &tol = {});

std::optional<double> is_tight(const GramSkew &g, int d, const ToleranceProfile &tol = {});
std::optional<double> is_equiangular(const GramSkew &g, const ToleranceProfile &tol = {});
std::optional<EtfCertificate> certify_etf(const GramSkew &g, int d, const ToleranceProfile &tol = {});

/// Frame sizes n not ruled out for a d×n ETF in R_S^d. Necessary condition only.
std::set<int> admissible_sizes(int d);

/// Symplectic M with MΨ = Φ, where Ψ = factor_gram(gram(Φ)).
RealMatrix symplectic_witness(const SynthesisMatrix &phi, const ToleranceProfile &tol = {});

}  // namespace symf

#endif
