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

#ifndef SYMF_POTENTIAL_H
#define SYMF_POTENTIAL_H

#include "symf/sympframe.h"

namespace symf {

/// Order p of a symplectic frame potential: a finite real >= 1 or infinity.
class PotentialOrder {
   public:
    /// Throws InvalidOrder if p < 1 or p is not finite.
    static PotentialOrder finite(double p);
    static PotentialOrder infinity();

    bool is_infinite() const {
        return infinite_;
    }
    /// Throws InvalidOrder when called on the infinite order.
    double value() const;

   private:
    PotentialOrder(double p, bool infinite) : p_(p), infinite_(infinite) {
    }
    double p_;
    bool infinite_;
};

struct PotentialReport {
    PotentialOrder p;
    double value;
    double bound;
    double slack;
};

/// SF_p: Σ_{i,j} |g_ij|^{2p} for finite p, max_{i≠j} |g_ij| for p = ∞.
double frame_potential(const GramSkew &g, PotentialOrder p);

/// Sharp lower bound on SF_p over n vectors in R_S^d with ‖G‖_* = √(d n (n-1)).
double potential_bound(int d, int n, PotentialOrder p);

PotentialReport potential_report(const GramSkew &g, int d, PotentialOrder p);

/// Rescales g so that its nuclear norm is √(d n (n-1)).
GramSkew normalize_nuclear(const GramSkew &g, int d, int n);

/// ∂ SF_p(gram(Φ)) / ∂Φ for finite p.
RealMatrix potential_gradient(const SynthesisMatrix &phi, PotentialOrder p);

/// ∂ ‖gram(Φ)‖_* / ∂Φ; the normal of the nuclear-norm constraint surface.
RealMatrix nuclear_norm_gradient(const SynthesisMatrix &phi, const ToleranceProfile &tol = {});

/// Removes from `direction` its component along nuclear_norm_gradient(phi).
RealMatrix project_to_constraint_tangent(const SynthesisMatrix &phi, const RealMatrix &direction,
                                         const ToleranceProfile &tol = {});

}  // namespace symf

#endif
