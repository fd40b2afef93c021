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

#include "symf/hadamard.h"

#include <cmath>
#include <sstream>

#include "symf/error.h"

namespace symf {

namespace {

bool is_square_int(const IntMatrix &m) {
    return m.rows() == m.cols();
}

IntMatrix int_identity(Eigen::Index n) {
    return IntMatrix::Identity(n, n);
}

}  // namespace

bool is_skew_hadamard(const IntMatrix &h) {
    if (!is_square_int(h)) {
        return false;
    }
    const Eigen::Index n = h.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (h(i, i) != 1) {
            return false;
        }
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if ((h(i, j) != 1 && h(i, j) != -1) || h(j, i) != -h(i, j)) {
                return false;
            }
        }
    }
    return h * h.transpose() == static_cast<std::int64_t>(n) * int_identity(n);
}

bool is_skew_conference(const IntMatrix &c) {
    if (!is_square_int(c)) {
        return false;
    }
    const Eigen::Index n = c.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (c(i, i) != 0) {
            return false;
        }
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if ((c(i, j) != 1 && c(i, j) != -1) || c(j, i) != -c(i, j)) {
                return false;
            }
        }
    }
    return c * c.transpose() == static_cast<std::int64_t>(n - 1) * int_identity(n);
}

SkewHadamard::SkewHadamard(IntMatrix h) : h_(std::move(h)) {
    if (!is_skew_hadamard(h_)) {
        throw SymfError(ErrorCode::NotSkewHadamard, "matrix is not a skew Hadamard matrix");
    }
}

SkewConference::SkewConference(IntMatrix c) : c_(std::move(c)) {
    if (!is_skew_conference(c_)) {
        throw SymfError(ErrorCode::NotSkewConference, "matrix is not a skew conference matrix");
    }
}

std::pair<SkewConference, SwitchingVector> normalize_conference(const SkewConference &c) {
    const int n = c.order();
    std::vector<int> eps(static_cast<size_t>(n), 1);
    for (int j = 1; j < n; ++j) {
        eps[static_cast<size_t>(j)] = static_cast<int>(c.matrix()(0, j));
    }
    IntMatrix out = c.matrix();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(i, j) *= eps[static_cast<size_t>(i)] * eps[static_cast<size_t>(j)];
        }
    }
    return {SkewConference(std::move(out)), SwitchingVector(std::move(eps))};
}

SeidelMatrix core(const SkewConference &c) {
    const int n = c.order();
    if (n < 2) {
        throw SymfError(ErrorCode::NotNormalized, "order-1 conference matrix has no core");
    }
    for (int j = 1; j < n; ++j) {
        if (c.matrix()(0, j) != 1) {
            throw SymfError(ErrorCode::NotNormalized, "first row is not (0, 1, ..., 1)");
        }
    }
    return SeidelMatrix(c.matrix().bottomRightCorner(n - 1, n - 1));
}

SkewHadamard etf_to_hadamard_square(const GramSkew &g, const ToleranceProfile &tol) {
    const int n = g.n();
    std::optional<EtfCertificate> cert = certify_etf(g, n, tol);
    if (!cert) {
        throw SymfError(ErrorCode::NotSquareEtf, "input is not the Gram matrix of a d×d ETF");
    }
    IntMatrix c;
    if (!round_to_int(g.matrix() / cert->mu, tol.entry_tol, c)) {
        throw SymfError(ErrorCode::RoundingFailure, "G/μ is not an integer pattern");
    }
    IntMatrix h = c + int_identity(n);
    if (!is_skew_hadamard(h)) {
        throw SymfError(ErrorCode::RoundingFailure, "I + G/μ failed skew Hadamard verification");
    }
    return SkewHadamard(std::move(h));
}

GramSkew hadamard_to_etf_square(const SkewHadamard &h) {
    if (h.order() < 2) {
        throw SymfError(ErrorCode::OrderTooSmall, "square ETFs need order >= 2");
    }
    IntMatrix c = h.matrix() - int_identity(h.order());
    GramSkew g(to_real(c));
    if (!certify_etf(g, h.order())) {
        throw SymfError(ErrorCode::VerificationFailed, "H - I did not certify as an ETF Gram");
    }
    return g;
}

GramSkew hadamard_to_etf_core(const SkewHadamard &h) {
    const int m = h.order();
    if (m < 4) {
        throw SymfError(ErrorCode::OrderTooSmall, "core ETFs need order >= 4");
    }
    SkewConference conf(h.matrix() - int_identity(m));
    SeidelMatrix k = core(normalize_conference(conf).first);
    GramSkew g(to_real(k.matrix()));
    if (!certify_etf(g, m - 2)) {
        throw SymfError(ErrorCode::VerificationFailed, "core did not certify as a (m-2)×(m-1) ETF");
    }
    return g;
}

SkewHadamard etf_core_to_hadamard(const GramSkew &g, const ToleranceProfile &tol) {
    const int n = g.n();
    if (n < 3 || !certify_etf(g, n - 1, tol)) {
        throw SymfError(ErrorCode::NotCoreEtf, "input is not the Gram matrix of a d×(d+1) ETF");
    }
    SeidelMatrix s = seidel_from_gram(g, tol);
    std::optional<SwitchingVector> x = flat_kernel(s, tol);
    if (!x) {
        throw SymfError(ErrorCode::FlatKernelMissing, "kernel is not spanned by a ±1 vector");
    }
    IntMatrix h = IntMatrix::Identity(n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
        h(0, i + 1) = (*x)[i];
        h(i + 1, 0) = -(*x)[i];
    }
    h.bottomRightCorner(n, n) += s.matrix();
    if (!is_skew_hadamard(h)) {
        throw SymfError(ErrorCode::VerificationFailed, "bordered core failed skew Hadamard verification");
    }
    return SkewHadamard(std::move(h));
}

SkewHadamard double_hadamard(const SkewHadamard &h) {
    const int m = h.order();
    IntMatrix two_i = 2 * int_identity(m);
    IntMatrix out(2 * m, 2 * m);
    out.topLeftCorner(m, m) = h.matrix();
    out.topRightCorner(m, m) = h.matrix();
    out.bottomLeftCorner(m, m) = h.matrix() - two_i;
    out.bottomRightCorner(m, m) = -h.matrix() + two_i;
    return SkewHadamard(std::move(out));
}

DoublingCoefficients doubling_coefficients(int d) {
    if (d < 2) {
        std::ostringstream msg;
        msg << "doubling needs d >= 2, got " << d;
        throw SymfError(ErrorCode::BadDimension, msg.str());
    }
    const double k = d - 1.0;
    DoublingCoefficients co;
    co.d = d;
    co.a = std::sqrt((std::sqrt(4.0 * k * k + 1.0) + 2.0 * d - 3.0) / (2.0 * k * k));
    const double ak = co.a * k;
    const double root = std::sqrt(ak * ak + 1.0);
    co.b = 1.0 / ak;
    co.y = -ak / root;
    co.z = root / ak;
    return co;
}

RealMatrix default_b_matrix(int d) {
    if (d < 2 || d % 2 != 0) {
        std::ostringstream msg;
        msg << "B needs an even dimension, got " << d;
        throw SymfError(ErrorCode::OddDimension, msg.str());
    }
    RealMatrix b = RealMatrix::Zero(d, d);
    for (int k = 0; k < d; k += 2) {
        b(k, k) = 1.0;
        b(k + 1, k + 1) = -1.0;
    }
    return b;
}

RealMatrix doubled_gram(const RealMatrix &g, double mu) {
    const Eigen::Index d = g.rows();
    RealMatrix id = mu * RealMatrix::Identity(d, d);
    RealMatrix out(2 * d, 2 * d);
    out.topLeftCorner(d, d) = g;
    out.topRightCorner(d, d) = g + id;
    out.bottomLeftCorner(d, d) = g - id;
    out.bottomRightCorner(d, d) = -g;
    return out;
}

SynthesisMatrix double_frame(const SynthesisMatrix &phi, const RealMatrix &b, const ToleranceProfile &tol) {
    const int d = phi.d();
    GramSkew g = gram(phi);
    std::optional<EtfCertificate> cert = (phi.n() == d) ? certify_etf(g, d, tol) : std::nullopt;
    if (!cert) {
        throw SymfError(ErrorCode::NotSquareEtf, "doubling needs a d×d ETF");
    }
    RealMatrix om = omega(d);
    if (b.rows() != d || b.cols() != d ||
        (b.transpose() * om * b + om).norm() > tol.entry_tol * std::max(1.0, b.squaredNorm())) {
        throw SymfError(ErrorCode::InvalidB, "B must be d×d with BᵀΩB = -Ω");
    }
    const DoublingCoefficients co = doubling_coefficients(d);
    const RealMatrix &p = phi.matrix();
    RealMatrix bp = b * p;
    RealMatrix f(2 * d, 2 * d);
    f.topLeftCorner(d, d) = (co.a / cert->mu) * frame_operator(phi) * p;
    f.topRightCorner(d, d) = co.b * p;
    f.bottomLeftCorner(d, d) = co.y * bp;
    f.bottomRightCorner(d, d) = co.z * bp;
    SynthesisMatrix out(std::move(f));

    RealMatrix expected = doubled_gram(g.matrix(), cert->mu);
    double residual = (gram(out).matrix() - expected).norm();
    if (residual > tol.residual_rel_tol * expected.norm()) {
        std::ostringstream msg;
        msg << "doubled Gram residual " << residual;
        throw SymfError(ErrorCode::VerificationFailed, msg.str());
    }
    return out;
}

SkewHadamard seed_hadamard(int order) {
    if (order < 1 || (order & (order - 1)) != 0) {
        std::ostringstream msg;
        msg << "order " << order << " is not a power of two";
        throw SymfError(ErrorCode::UnsupportedOrder, msg.str());
    }
    if (order == 1) {
        return SkewHadamard(IntMatrix::Ones(1, 1));
    }
    IntMatrix two(2, 2);
    two << 1, 1, -1, 1;
    SkewHadamard h(std::move(two));
    while (h.order() < order) {
        h = double_hadamard(h);
    }
    return h;
}

}  // namespace symf
