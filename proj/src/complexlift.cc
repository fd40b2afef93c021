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

#include "symf/complexlift.h"

#include <cmath>
#include <complex>
#include <sstream>

#include "symf/error.h"
#include "symf/hadamard.h"

namespace symf {

namespace {

using cd = std::complex<double>;

int complex_rank(const ComplexMatrix &a, const ToleranceProfile &tol) {
    if (a.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const RealVector &sv = svd.singularValues();
    if (sv(0) == 0.0) {
        return 0;
    }
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol.rank_rel_tol * sv(0)) {
            ++rank;
        }
    }
    return rank;
}

}  // namespace

HermitianSignature::HermitianSignature(ComplexMatrix q, const ToleranceProfile &tol) : q_(std::move(q)) {
    if (q_.rows() != q_.cols() || q_.rows() < 2) {
        throw SymfError(ErrorCode::InvalidSignature, "signature must be square of order >= 2");
    }
    if (!all_finite(q_)) {
        throw SymfError(ErrorCode::NonFinite, "signature has NaN or infinite entries");
    }
    const Eigen::Index n = q_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(q_(i, i)) > tol.entry_tol) {
            throw SymfError(ErrorCode::InvalidSignature, "nonzero diagonal entry");
        }
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (std::abs(q_(i, j) - std::conj(q_(j, i))) > tol.entry_tol ||
                std::abs(std::abs(q_(i, j)) - 1.0) > tol.entry_tol) {
                std::ostringstream msg;
                msg << "entry (" << i << "," << j << ") is not Hermitian and unimodular";
                throw SymfError(ErrorCode::InvalidSignature, msg.str());
            }
        }
    }
}

ComplexSynthesis::ComplexSynthesis(ComplexMatrix psi, const ToleranceProfile &tol) : psi_(std::move(psi)) {
    if (psi_.rows() < 1 || psi_.cols() < 1) {
        throw SymfError(ErrorCode::BadDimension, "complex synthesis matrix is empty");
    }
    int r = complex_rank(psi_, tol);
    if (r != psi_.rows()) {
        std::ostringstream msg;
        msg << "rank " << r << " but " << psi_.rows() << " rows";
        throw SymfError(ErrorCode::RankMismatch, msg.str());
    }
}

BetaConstant beta_constant(int d) {
    if (d < 2 || d % 2 != 0) {
        throw SymfError(ErrorCode::OddDimension, "β needs an even d >= 2");
    }
    BetaConstant b;
    b.d = d;
    b.re = -1.0 / std::sqrt(d + 2.0);
    b.im = std::sqrt(1.0 - 1.0 / (d + 2.0));
    return b;
}

double signature_residual(const HermitianSignature &q, int d_c) {
    const int n = q.n();
    if (d_c < 1 || d_c >= n) {
        std::ostringstream msg;
        msg << "need 1 <= d_c < n, got d_c=" << d_c << " n=" << n;
        throw SymfError(ErrorCode::BadDimension, msg.str());
    }
    const double c = (n - 2.0 * d_c) * std::sqrt((n - 1.0) / (static_cast<double>(d_c) * (n - d_c)));
    const ComplexMatrix &m = q.matrix();
    ComplexMatrix r = m * m - c * m - (n - 1.0) * ComplexMatrix::Identity(n, n);
    return r.norm();
}

bool signature_check(const HermitianSignature &q, int d_c, const ToleranceProfile &tol) {
    return signature_residual(q, d_c) <= tol.residual_rel_tol * q.n();
}

SquareLift lift_square(const GramSkew &g, const ToleranceProfile &tol) {
    const int d = g.n();
    std::optional<EtfCertificate> cert = certify_etf(g, d, tol);
    if (!cert) {
        throw SymfError(ErrorCode::NotSquareEtf, "input is not the Gram matrix of a d×d ETF");
    }
    RealMatrix c = g.matrix() / cert->mu;
    const double scale = 1.0 / std::sqrt(d - 1.0);
    ComplexMatrix q = cd(0.0, 1.0) * c.cast<cd>();
    ComplexMatrix gc = ComplexMatrix::Identity(d, d) + scale * q;
    return SquareLift{gc, HermitianSignature(q, tol), scale / cert->mu, scale, d / 2};
}

CoreLift lift_core(const GramSkew &g, const ToleranceProfile &tol) {
    const int n = g.n();
    const int d = n - 1;
    std::optional<EtfCertificate> cert = (n >= 3) ? certify_etf(g, d, tol) : std::nullopt;
    if (!cert) {
        throw SymfError(ErrorCode::NotCoreEtf, "input is not the Gram matrix of a d×(d+1) ETF");
    }
    SeidelMatrix k = seidel_from_gram(g, tol);
    std::optional<SwitchingVector> x = flat_kernel(k, tol);
    if (!x) {
        throw SymfError(ErrorCode::FlatKernelMissing, "kernel is not spanned by a ±1 vector");
    }

    // DKD borders to a normalized conference matrix; split it as A - Aᵀ.
    const BetaConstant beta = beta_constant(d);
    const cd b(beta.re, beta.im);
    ComplexMatrix q = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const int sign = (*x)[i] * (*x)[j];
            const bool plus = sign * k(i, j) == 1;
            q(i, j) = static_cast<double>(sign) * (plus ? b : std::conj(b));
        }
    }
    HermitianSignature sig(q, tol);
    const double scale = std::sqrt(d + 2.0) / d;
    return CoreLift{sig, *x, scale * beta.im / cert->mu, scale, d / 2};
}

IntMatrix recover_core(const HermitianSignature &q, const ToleranceProfile &tol) {
    const int d = q.n() - 1;
    const BetaConstant beta = beta_constant(d);
    IntMatrix k;
    if (!round_to_int(q.matrix().imag() / beta.im, tol.entry_tol, k)) {
        throw SymfError(ErrorCode::RoundingFailure, "Im(Q)/Im(β) is not an integer pattern");
    }
    return k;
}

ComplexSynthesis synthesis_from_signature(const HermitianSignature &q, int d_c, double scale,
                                          const ToleranceProfile &tol) {
    if (!signature_check(q, d_c, tol)) {
        throw SymfError(ErrorCode::InvalidSignature, "signature quadratic fails for this d_c");
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw SymfError(ErrorCode::BadParameters, "scale must be positive and finite");
    }
    const int n = q.n();
    ComplexMatrix gc = ComplexMatrix::Identity(n, n) + scale * q.matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gc);
    const RealVector &vals = eig.eigenvalues();
    const double top = vals(n - 1);
    const double cutoff = tol.rank_rel_tol * std::max(1.0, std::abs(top)) + tol.entry_tol;
    if (vals(0) < -cutoff) {
        std::ostringstream msg;
        msg << "I + scale·Q has eigenvalue " << vals(0);
        throw SymfError(ErrorCode::NotPSD, msg.str());
    }
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        if (vals(k) > cutoff) {
            ++rank;
        }
    }
    if (rank != d_c) {
        std::ostringstream msg;
        msg << "I + scale·Q has rank " << rank << ", expected " << d_c;
        throw SymfError(ErrorCode::RankMismatch, msg.str());
    }
    ComplexMatrix psi(d_c, n);
    for (int k = 0; k < d_c; ++k) {
        const int col = n - 1 - k;
        psi.row(k) = std::sqrt(vals(col)) * eig.eigenvectors().col(col).adjoint();
    }
    return ComplexSynthesis(std::move(psi), tol);
}

SynthesisMatrix realify(const ComplexSynthesis &psi) {
    const int d_c = psi.d_c();
    RealMatrix out(2 * d_c, psi.n());
    for (int k = 0; k < d_c; ++k) {
        out.row(2 * k) = psi.matrix().row(k).real();
        out.row(2 * k + 1) = psi.matrix().row(k).imag();
    }
    return SynthesisMatrix(std::move(out));
}

}  // namespace symf
