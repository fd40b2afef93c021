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

#include "symf/potential.h"

#include <cmath>
#include <sstream>

#include "symf/error.h"

namespace symf {

PotentialOrder PotentialOrder::finite(double p) {
    if (!std::isfinite(p) || p < 1.0) {
        std::ostringstream msg;
        msg << "potential order must be a finite real >= 1, got " << p;
        throw SymfError(ErrorCode::InvalidOrder, msg.str());
    }
    return PotentialOrder(p, false);
}

PotentialOrder PotentialOrder::infinity() {
    return PotentialOrder(0.0, true);
}

double PotentialOrder::value() const {
    if (infinite_) {
        throw SymfError(ErrorCode::InvalidOrder, "the infinite order has no finite value");
    }
    return p_;
}

double frame_potential(const GramSkew &g, PotentialOrder p) {
    const RealMatrix &m = g.matrix();
    if (p.is_infinite()) {
        double best = 0.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                if (i != j) {
                    best = std::max(best, std::abs(m(i, j)));
                }
            }
        }
        return best;
    }
    double exponent = 2.0 * p.value();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            sum += std::pow(std::abs(m(i, j)), exponent);
        }
    }
    return sum;
}

double potential_bound(int d, int n, PotentialOrder p) {
    if (d < 2 || n < d) {
        std::ostringstream msg;
        msg << "need n >= d >= 2, got d=" << d << " n=" << n;
        throw SymfError(ErrorCode::BadParameters, msg.str());
    }
    if (p.is_infinite()) {
        return 1.0;
    }
    // p = 1 reduces to Σσ_i² >= (Σσ_i)²/d = n(n-1); p > 1 adds Hölder over the
    // off-diagonal entries and lands on the same value.
    return static_cast<double>(n) * (n - 1);
}

PotentialReport potential_report(const GramSkew &g, int d, PotentialOrder p) {
    double value = frame_potential(g, p);
    double bound = potential_bound(d, g.n(), p);
    return PotentialReport{p, value, bound, value - bound};
}

GramSkew normalize_nuclear(const GramSkew &g, int d, int n) {
    double nuc = nuclear_norm(g.matrix());
    if (!(nuc > 0.0)) {
        throw SymfError(ErrorCode::ZeroMatrix, "nuclear norm is zero");
    }
    double target = std::sqrt(static_cast<double>(d) * n * (n - 1));
    return GramSkew(g.matrix() * (target / nuc));
}

RealMatrix potential_gradient(const SynthesisMatrix &phi, PotentialOrder p) {
    if (p.is_infinite()) {
        throw SymfError(ErrorCode::InvalidOrder, "gradient needs a finite order");
    }
    const double order = p.value();
    const RealMatrix m = gram(phi).matrix();
    // E = ∂SF_p/∂G = 2p |G|^{2p-2} G (entrywise), skew because G is.
    RealMatrix e(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            double v = m(i, j);
            e(i, j) = v == 0.0 ? 0.0 : 2.0 * order * std::pow(std::abs(v), 2.0 * order - 1.0) * (v > 0 ? 1.0 : -1.0);
        }
    }
    // dG = dΦᵀΩΦ + ΦᵀΩdΦ  ⇒  ∇_Φ = ΩΦ(Eᵀ - E).
    return omega(phi.d()) * phi.matrix() * (e.transpose() - e);
}

RealMatrix nuclear_norm_gradient(const SynthesisMatrix &phi, const ToleranceProfile &tol) {
    const RealMatrix m = gram(phi).matrix();
    Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RealVector &sv = svd.singularValues();
    RealMatrix polar = RealMatrix::Zero(m.rows(), m.cols());
    if (sv.size() > 0 && sv(0) > 0.0) {
        for (Eigen::Index k = 0; k < sv.size(); ++k) {
            if (sv(k) > tol.rank_rel_tol * sv(0)) {
                polar += svd.matrixU().col(k) * svd.matrixV().col(k).transpose();
            }
        }
    }
    return omega(phi.d()) * phi.matrix() * (polar.transpose() - polar);
}

RealMatrix project_to_constraint_tangent(const SynthesisMatrix &phi, const RealMatrix &direction,
                                         const ToleranceProfile &tol) {
    RealMatrix normal = nuclear_norm_gradient(phi, tol);
    double nn = normal.squaredNorm();
    if (nn == 0.0) {
        return direction;
    }
    return direction - (direction.cwiseProduct(normal).sum() / nn) * normal;
}

}  // namespace symf
