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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "symf/hadamard.h"

using namespace symf;
using namespace symf::testing;

namespace {

PotentialOrder P(double p) {
    return PotentialOrder::finite(p);
}

double finite_difference_error(const RealMatrix &phi0, double p) {
    const double h = 1e-6;
    RealMatrix analytic = potential_gradient(SynthesisMatrix(phi0), P(p));
    RealMatrix numeric(phi0.rows(), phi0.cols());
    for (Eigen::Index k = 0; k < phi0.size(); ++k) {
        RealMatrix a = phi0, b = phi0;
        a(k) += h;
        b(k) -= h;
        numeric(k) = (frame_potential(gram(SynthesisMatrix(a)), P(p)) -
                      frame_potential(gram(SynthesisMatrix(b)), P(p))) /
                     (2 * h);
    }
    return (analytic - numeric).norm() / std::max(1e-12, numeric.norm());
}

}  // namespace

TEST(PotentialOrder, Validation) {
    expect_code(ErrorCode::InvalidOrder, [] { PotentialOrder::finite(0.5); });
    expect_code(ErrorCode::InvalidOrder, [] { PotentialOrder::finite(std::nan("")); });
    expect_code(ErrorCode::InvalidOrder, [] { PotentialOrder::finite(INFINITY); });
    expect_code(ErrorCode::InvalidOrder, [] { PotentialOrder::infinity().value(); });
    EXPECT_TRUE(PotentialOrder::infinity().is_infinite());
    EXPECT_EQ(P(2.5).value(), 2.5);
}

TEST(FramePotential, Examples) {
    EXPECT_NEAR(frame_potential(GramSkew(omega2()), P(1)), 2.0, 1e-15);
    GramSkew c(to_real(conf_c()));
    EXPECT_NEAR(frame_potential(normalize_nuclear(c, 4, 4), P(2)), 12.0, 1e-9);
    RealMatrix g = to_real(conf_c());
    g(0, 1) = 2;
    g(1, 0) = -2;
    EXPECT_EQ(frame_potential(GramSkew(g), PotentialOrder::infinity()), 2.0);
}

TEST(PotentialBound, Values) {
    EXPECT_EQ(potential_bound(4, 4, P(2)), 12.0);
    EXPECT_EQ(potential_bound(2, 3, P(3)), 6.0);
    EXPECT_EQ(potential_bound(4, 4, PotentialOrder::infinity()), 1.0);
    EXPECT_EQ(potential_bound(6, 6, PotentialOrder::infinity()), 1.0);
    // Under ‖G‖_* = √(dn(n-1)) the sharp p = 1 value is n(n-1), attained by every ETF.
    EXPECT_EQ(potential_bound(4, 4, P(1)), 12.0);
    expect_code(ErrorCode::BadParameters, [] { potential_bound(4, 3, P(2)); });
    expect_code(ErrorCode::BadParameters, [] { potential_bound(1, 3, P(2)); });
}

TEST(PotentialBound, EtfsAttainEveryFiniteOrder) {
    std::vector<std::pair<GramSkew, int>> etfs = {{GramSkew(omega2()), 2},
                                                  {GramSkew(to_real(conf_c())), 4},
                                                  {GramSkew(to_real(conf_k())), 2}};
    for (int m : {8, 16}) {
        etfs.emplace_back(hadamard_to_etf_square(seed_hadamard(m)), m);
        etfs.emplace_back(hadamard_to_etf_core(seed_hadamard(m)), m - 2);
    }
    for (const auto &[g, d] : etfs) {
        GramSkew normalized = normalize_nuclear(GramSkew(7.0 * g.matrix()), d, g.n());
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            PotentialReport r = potential_report(normalized, d, P(p));
            EXPECT_NEAR(r.slack, 0.0, 1e-8 * r.bound) << "d=" << d << " n=" << g.n() << " p=" << p;
        }
        EXPECT_NEAR(frame_potential(normalized, PotentialOrder::infinity()), 1.0, 1e-12);
    }
}

TEST(PotentialBound, RandomGramsStayAbove) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        int d = 2 * (1 + static_cast<int>(rng() % 3));
        int n = d + static_cast<int>(rng() % (9 - d));
        GramSkew g = normalize_nuclear(gram(SynthesisMatrix(random_matrix(d, n, rng))), d, n);
        for (double p : {1.0, 2.0, 3.0}) {
            PotentialReport r = potential_report(g, d, P(p));
            EXPECT_GE(r.slack, -1e-9 * r.bound);
        }
    }
}

TEST(PotentialBound, SlackVanishesExactlyOnEtfs) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 * (1 + static_cast<int>(rng() % 2));
        int n = d + static_cast<int>(rng() % 2);
        GramSkew g = normalize_nuclear(gram(SynthesisMatrix(random_matrix(d, n, rng))), d, n);
        bool etf = certify_etf(g, d).has_value();
        bool tight_bound = potential_report(g, d, P(2)).slack <= 1e-8;
        EXPECT_EQ(etf, tight_bound);
    }
}

TEST(NormalizeNuclear, Examples) {
    EXPECT_LE((normalize_nuclear(GramSkew(omega2()), 2, 2).matrix() - omega2()).norm(), 1e-14);
    EXPECT_LE((normalize_nuclear(GramSkew(to_real(conf_c())), 4, 4).matrix() - to_real(conf_c())).norm(), 1e-12);
    EXPECT_LE((normalize_nuclear(GramSkew(5.0 * omega2()), 2, 2).matrix() - omega2()).norm(), 1e-14);
    expect_code(ErrorCode::ZeroMatrix, [] { normalize_nuclear(GramSkew(RealMatrix::Zero(2, 2)), 2, 2); });
    std::mt19937_64 rng(53);
    GramSkew g = normalize_nuclear(gram(SynthesisMatrix(random_matrix(4, 6, rng))), 4, 6);
    EXPECT_NEAR(nuclear_norm(g.matrix()), std::sqrt(4.0 * 6 * 5), 1e-10 * std::sqrt(120.0));
}

TEST(PotentialInvariance, SymplecticMapsAndSignedPermutations) {
    std::mt19937_64 rng(59);
    SynthesisMatrix phi(random_matrix(4, 5, rng));
    double base = frame_potential(gram(phi), P(2));
    // Ω itself is symplectic.
    EXPECT_NEAR(frame_potential(gram(SynthesisMatrix(omega(4) * phi.matrix())), P(2)), base, 1e-10 * base);
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(5);
    perm.indices() << 3, 0, 4, 1, 2;
    RealMatrix signs = RealVector::Ones(5).asDiagonal();
    signs(1, 1) = -1;
    signs(4, 4) = -1;
    RealMatrix moved = phi.matrix() * perm * signs;
    EXPECT_NEAR(frame_potential(gram(SynthesisMatrix(moved)), P(2)), base, 1e-10 * base);
}

TEST(PotentialGradient, SingleColumnIsZero) {
    RealMatrix phi(2, 1);
    phi << 0.3, -1.2;
    EXPECT_EQ(potential_gradient(SynthesisMatrix(phi), P(2)).norm(), 0.0);
    expect_code(ErrorCode::InvalidOrder,
                [&] { potential_gradient(SynthesisMatrix(phi), PotentialOrder::infinity()); });
}

TEST(PotentialGradient, MatchesFiniteDifferences) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 2 * (1 + static_cast<int>(rng() % 2));
        int n = 2 + static_cast<int>(rng() % 5);
        double p = 1.0 + static_cast<double>(rng() % 3);
        RealMatrix phi = random_matrix(d, n, rng);
        EXPECT_LE(finite_difference_error(phi, p), 1e-4) << "d=" << d << " n=" << n << " p=" << p;
    }
}

TEST(PotentialGradient, VanishesOnTangentAtEtf) {
    for (const IntMatrix &c : std::vector<IntMatrix>{conf_c(), seed_hadamard(8).matrix() - IntMatrix::Identity(8, 8)}) {
        const int d = static_cast<int>(c.rows());
        GramSkew g = normalize_nuclear(GramSkew(to_real(c)), d, d);
        SynthesisMatrix phi = factor_gram(g);
        RealMatrix grad = potential_gradient(phi, P(2));
        RealMatrix tangent = project_to_constraint_tangent(phi, grad);
        EXPECT_GT(grad.norm(), 1.0);
        EXPECT_LE(tangent.norm(), 1e-6);
    }
}

TEST(NuclearNormGradient, MatchesFiniteDifferences) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        RealMatrix phi = random_matrix(4, 5, rng);
        RealMatrix analytic = nuclear_norm_gradient(SynthesisMatrix(phi));
        RealMatrix numeric(4, 5);
        for (Eigen::Index k = 0; k < phi.size(); ++k) {
            RealMatrix a = phi, b = phi;
            a(k) += 1e-6;
            b(k) -= 1e-6;
            numeric(k) = (nuclear_norm(gram(SynthesisMatrix(a)).matrix()) -
                          nuclear_norm(gram(SynthesisMatrix(b)).matrix())) /
                         2e-6;
        }
        EXPECT_LE((analytic - numeric).norm(), 1e-5 * numeric.norm());
        // The tangent projection is orthogonal to the normal.
        RealMatrix t = project_to_constraint_tangent(SynthesisMatrix(phi), random_matrix(4, 5, rng));
        EXPECT_NEAR(t.cwiseProduct(analytic).sum(), 0.0, 1e-10 * analytic.norm() * t.norm());
    }
}
