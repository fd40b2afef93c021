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

#include "symf/sympframe.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symf/error.h"

namespace symf {

namespace {

double scale_of(const RealMatrix &m) {
    return std::max(1.0, m.norm());
}

}  // namespace

SynthesisMatrix::SynthesisMatrix(RealMatrix m) : m_(std::move(m)) {
    if (m_.rows() < 2 || m_.rows() % 2 != 0) {
        std::ostringstream msg;
        msg << "symplectic dimension must be even and >= 2, got " << m_.rows();
        throw SymfError(ErrorCode::OddDimension, msg.str());
    }
    if (m_.cols() < 1) {
        throw SymfError(ErrorCode::BadDimension, "a frame needs at least one vector");
    }
    require_finite(m_);
}

GramSkew::GramSkew(RealMatrix g, const ToleranceProfile &tol) : g_(std::move(g)) {
    require_square(g_);
    require_finite(g_);
    double scale = scale_of(g_);
    double asym = (g_ + g_.transpose()).norm();
    if (asym > tol.entry_tol * scale) {
        std::ostringstream msg;
        msg << "‖g + gᵀ‖_F = " << asym;
        throw SymfError(ErrorCode::NotSkewSymmetric, msg.str());
    }
    if (g_.rows() > 0 && g_.diagonal().cwiseAbs().maxCoeff() > tol.entry_tol * scale) {
        throw SymfError(ErrorCode::NotSkewSymmetric, "nonzero diagonal entry");
    }
}

RealMatrix omega(int d) {
    if (d < 2 || d % 2 != 0) {
        std::ostringstream msg;
        msg << "omega needs an even dimension >= 2, got " << d;
        throw SymfError(ErrorCode::OddDimension, msg.str());
    }
    RealMatrix w = RealMatrix::Zero(d, d);
    for (int k = 0; k < d; k += 2) {
        w(k, k + 1) = 1.0;
        w(k + 1, k) = -1.0;
    }
    return w;
}

RealMatrix adjoint(const RealMatrix &a, FormKind domain, FormKind codomain) {
    // A : R^cols → R^rows, so A^† = Q_dom⁻¹ Aᵀ Q_cod with Ω⁻¹ = -Ω.
    RealMatrix out = a.transpose();
    if (codomain == FormKind::Symplectic) {
        out = out * omega(static_cast<int>(a.rows()));
    }
    if (domain == FormKind::Symplectic) {
        out = -omega(static_cast<int>(a.cols())) * out;
    }
    return out;
}

RealMatrix analysis(const SynthesisMatrix &phi) {
    return phi.matrix().transpose() * omega(phi.d());
}

GramSkew gram(const SynthesisMatrix &phi) {
    RealMatrix g = analysis(phi) * phi.matrix();
    // Exact skew symmetry; the product is skew only up to rounding.
    RealMatrix skew = 0.5 * (g - g.transpose());
    return GramSkew(std::move(skew));
}

RealMatrix frame_operator(const SynthesisMatrix &phi) {
    return phi.matrix() * analysis(phi);
}

bool is_frame(const SynthesisMatrix &phi, const ToleranceProfile &tol) {
    return rank_by_sv(phi.matrix(), tol) == phi.d();
}

static void require_frame(const SynthesisMatrix &phi, const ToleranceProfile &tol) {
    if (!is_frame(phi, tol)) {
        std::ostringstream msg;
        msg << "columns do not span R_S^" << phi.d();
        throw SymfError(ErrorCode::NotAFrame, msg.str());
    }
}

FrameBounds frame_bounds(const SynthesisMatrix &phi, const ToleranceProfile &tol) {
    require_frame(phi, tol);
    // The nonzero singular values of the Gram are the moduli of σ(ΦΦ^†).
    RealVector sv = singular_values(gram(phi).matrix());
    return FrameBounds{sv(phi.d() - 1), sv(0)};
}

SynthesisMatrix dual_frame(const SynthesisMatrix &phi, const ToleranceProfile &tol) {
    require_frame(phi, tol);
    RealMatrix f = frame_operator(phi);
    return SynthesisMatrix(f.partialPivLu().solve(phi.matrix()));
}

SynthesisMatrix factor_gram(const GramSkew &g, const ToleranceProfile &tol) {
    int rank = rank_by_sv(g.matrix(), tol);
    if (rank == 0) {
        throw SymfError(ErrorCode::ZeroRank, "cannot factor a zero Gram matrix");
    }
    if (rank % 2 != 0) {
        std::ostringstream msg;
        msg << "numerical rank " << rank << " is odd; tolerance inconsistent with the input";
        throw SymfError(ErrorCode::OddRankDetected, msg.str());
    }
    SkewSpectralForm form = skew_spectral_form(g.matrix(), tol);
    if (form.rank != rank) {
        std::ostringstream msg;
        msg << "spectral form rank " << form.rank << " disagrees with singular-value rank " << rank;
        throw SymfError(ErrorCode::OddRankDetected, msg.str());
    }
    RealMatrix u = form.w.bottomRows(rank);
    for (int k = 0; k < rank / 2; ++k) {
        double s = std::sqrt(form.lambdas[k]);
        u.row(2 * k) *= s;
        u.row(2 * k + 1) *= s;
    }
    return SynthesisMatrix(std::move(u));
}

std::optional<double> is_tight(const GramSkew &g, int d, const ToleranceProfile &tol) {
    const RealMatrix &m = g.matrix();
    if (m.size() == 0 || rank_by_sv(m, tol) != d) {
        return std::nullopt;
    }
    double c = singular_values(m)(0);
    if (!(c > 0.0)) {
        return std::nullopt;
    }
    double residual = (m * m * m + c * c * m).norm();
    if (residual > tol.residual_rel_tol * c * c * m.norm()) {
        return std::nullopt;
    }
    return c;
}

std::optional<double> is_equiangular(const GramSkew &g, const ToleranceProfile &tol) {
    const RealMatrix &m = g.matrix();
    const Eigen::Index n = m.rows();
    if (n < 2) {
        return std::nullopt;
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j) {
                sum += std::abs(m(i, j));
            }
        }
    }
    double mu = sum / static_cast<double>(n * (n - 1));
    if (!(mu > 0.0)) {
        return std::nullopt;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j && std::abs(std::abs(m(i, j)) - mu) > tol.entry_tol * mu) {
                return std::nullopt;
            }
        }
    }
    return mu;
}

std::optional<EtfCertificate> certify_etf(const GramSkew &g, int d, const ToleranceProfile &tol) {
    const int n = g.n();
    if (d < 2 || d % 2 != 0 || (n != d && n != d + 1)) {
        return std::nullopt;
    }
    std::optional<double> c = is_tight(g, d, tol);
    if (!c) {
        return std::nullopt;
    }
    std::optional<double> mu = is_equiangular(g, tol);
    if (!mu) {
        return std::nullopt;
    }
    double expected_c = (n == d) ? *mu * std::sqrt(n - 1.0) : *mu * std::sqrt(static_cast<double>(n));
    if (std::abs(*c - expected_c) > (tol.residual_rel_tol + tol.entry_tol) * *c) {
        return std::nullopt;
    }

    const RealMatrix &m = g.matrix();
    EtfCertificate cert;
    cert.d = d;
    cert.n = n;
    cert.mu = *mu;
    cert.c = *c;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                worst = std::max(worst, std::abs(std::abs(m(i, j)) - *mu));
            }
        }
    }
    cert.equiangular_residual = worst / *mu;
    cert.tightness_residual = (m * m * m + *c * *c * m).norm() / (*c * *c * m.norm());
    return cert;
}

std::set<int> admissible_sizes(int d) {
    if (d < 2 || d % 2 != 0) {
        std::ostringstream msg;
        msg << "symplectic dimension must be even and >= 2, got " << d;
        throw SymfError(ErrorCode::OddDimension, msg.str());
    }
    if (d == 2) {
        return {2, 3};
    }
    if (d % 4 == 0) {
        return {d};
    }
    return {d + 1};
}

RealMatrix symplectic_witness(const SynthesisMatrix &phi, const ToleranceProfile &tol) {
    require_frame(phi, tol);
    SynthesisMatrix canonical = factor_gram(gram(phi), tol);
    const RealMatrix &psi = canonical.matrix();
    RealMatrix psi_psi_t = psi * psi.transpose();
    RealMatrix rhs = phi.matrix() * psi.transpose();
    // M = Φ Ψᵀ (Ψ Ψᵀ)⁻¹, solved as (ΨΨᵀ) Mᵀ = (ΦΨᵀ)ᵀ.
    return psi_psi_t.ldlt().solve(rhs.transpose()).transpose();
}

}  // namespace symf
