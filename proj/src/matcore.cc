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

#include "symf/matcore.h"

#include <cmath>
#include <complex>
#include <sstream>

#include "symf/error.h"

namespace symf {

void ToleranceProfile::validate() const {
    for (double t : {rank_rel_tol, residual_rel_tol, entry_tol}) {
        if (!(t > 0.0 && t < 1.0)) {
            std::ostringstream msg;
            msg << "tolerance " << t << " outside (0, 1)";
            throw SymfError(ErrorCode::BadParameters, msg.str());
        }
    }
}

bool all_finite(const RealMatrix &a) {
    return a.allFinite();
}

bool all_finite(const ComplexMatrix &a) {
    return a.real().allFinite() && a.imag().allFinite();
}

void require_finite(const RealMatrix &a) {
    if (!a.allFinite()) {
        throw SymfError(ErrorCode::NonFinite, "matrix has NaN or infinite entries");
    }
}

void require_square(const RealMatrix &a) {
    if (a.rows() != a.cols()) {
        std::ostringstream msg;
        msg << "expected a square matrix, got " << a.rows() << "x" << a.cols();
        throw SymfError(ErrorCode::NotSquare, msg.str());
    }
}

RealMatrix to_real(const IntMatrix &m) {
    return m.cast<double>();
}

bool round_to_int(const RealMatrix &m, double tol, IntMatrix &out) {
    out.resize(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            double r = std::round(m(i, j));
            if (!(std::abs(m(i, j) - r) <= tol)) {
                return false;
            }
            out(i, j) = static_cast<std::int64_t>(r);
        }
    }
    return true;
}

RealVector singular_values(const RealMatrix &a) {
    if (a.size() == 0) {
        return RealVector();
    }
    Eigen::JacobiSVD<RealMatrix> svd(a);
    return svd.singularValues();
}

double nuclear_norm(const RealMatrix &a) {
    return singular_values(a).sum();
}

int rank_by_sv(const RealMatrix &a, const ToleranceProfile &tol) {
    RealVector sv = singular_values(a);
    if (sv.size() == 0 || sv(0) == 0.0) {
        return 0;
    }
    double cutoff = tol.rank_rel_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

RealMatrix SkewSpectralForm::canonical() const {
    Eigen::Index n = w.rows();
    RealMatrix m = RealMatrix::Zero(n, n);
    Eigen::Index offset = n - rank;
    for (size_t k = 0; k < lambdas.size(); ++k) {
        Eigen::Index p = offset + 2 * static_cast<Eigen::Index>(k);
        m(p, p + 1) = lambdas[k];
        m(p + 1, p) = -lambdas[k];
    }
    return m;
}

RealMatrix SkewSpectralForm::reconstruct() const {
    return w.transpose() * canonical() * w;
}

SkewSpectralForm skew_spectral_form(const RealMatrix &a, const ToleranceProfile &tol) {
    require_square(a);
    require_finite(a);
    double norm = a.norm();
    double asym = (a + a.transpose()).norm();
    if (asym > tol.entry_tol * norm) {
        std::ostringstream msg;
        msg << "‖a + aᵀ‖_F = " << asym << " exceeds " << tol.entry_tol << "·‖a‖_F";
        throw SymfError(ErrorCode::NotSkewSymmetric, msg.str());
    }

    const Eigen::Index n = a.rows();
    SkewSpectralForm form;
    form.w = RealMatrix::Identity(n, n);
    if (norm == 0.0) {
        return form;
    }

    // i·a is Hermitian. An eigenpair (λ > 0, x + iy) gives a·x = λy and
    // a·y = -λx, so the rows (√2·y, √2·x) form one canonical 2x2 block.
    RealMatrix skew = 0.5 * (a - a.transpose());
    ComplexMatrix herm = std::complex<double>(0.0, 1.0) * skew.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm);
    const RealVector &vals = eig.eigenvalues();
    double sigma_max = vals.cwiseAbs().maxCoeff();
    double cutoff = tol.rank_rel_tol * sigma_max;

    std::vector<Eigen::Index> positive;
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        if (vals(k) > cutoff) {
            positive.push_back(k);
        }
    }
    const Eigen::Index r = static_cast<Eigen::Index>(positive.size());
    form.rank = static_cast<int>(2 * r);

    RealMatrix blocks(2 * r, n);
    for (Eigen::Index k = 0; k < r; ++k) {
        Eigen::VectorXcd v = eig.eigenvectors().col(positive[k]);
        v.normalize();
        blocks.row(2 * k) = std::sqrt(2.0) * v.imag().transpose();
        blocks.row(2 * k + 1) = std::sqrt(2.0) * v.real().transpose();
        form.lambdas.push_back(vals(positive[k]));
    }

    // Orthonormal completion of the block rows spans the kernel.
    Eigen::Index kernel_dim = n - 2 * r;
    if (kernel_dim > 0) {
        RealMatrix span = blocks.transpose();
        Eigen::HouseholderQR<RealMatrix> qr(span);
        RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, n);
        form.w.topRows(kernel_dim) = q.rightCols(kernel_dim).transpose();
    }
    form.w.bottomRows(2 * r) = blocks;
    return form;
}

}  // namespace symf
