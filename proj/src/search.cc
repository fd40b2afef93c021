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

#include "symf/search.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "symf/error.h"
#include "symf/hadamard.h"

namespace symf {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, int restart_index) {
    return std::mt19937_64(restart_seed(seed, restart_index));
}

double nuclear_target(int d, int n) {
    return std::sqrt(static_cast<double>(d) * n * (n - 1));
}

// Scales Φ so that ‖ΦᵀΩΦ‖_* hits the target; the Gram is quadratic in Φ.
bool renormalize(RealMatrix &phi, double target) {
    RealMatrix g = phi.transpose() * omega(static_cast<int>(phi.rows())) * phi;
    double nn = nuclear_norm(g);
    if (!(nn > 0.0) || !std::isfinite(nn)) {
        return false;
    }
    phi *= std::sqrt(target / nn);
    return true;
}

double potential_of(const RealMatrix &phi, PotentialOrder p) {
    RealMatrix g = phi.transpose() * omega(static_cast<int>(phi.rows())) * phi;
    return frame_potential(GramSkew(0.5 * (g - g.transpose())), p);
}

// The rounded sign pattern of an almost equiangular Gram, certified exactly.
bool certify_sign_pattern(const RealMatrix &phi, int d) {
    const int n = static_cast<int>(phi.cols());
    RealMatrix g = phi.transpose() * omega(d) * phi;
    IntMatrix s = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                s(i, j) = g(i, j) > 0.0 ? 1 : -1;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (s(i, j) != -s(j, i)) {
                return false;
            }
        }
    }
    return certify_etf(GramSkew(to_real(s)), d).has_value();
}

struct ContinuousRun {
    RealMatrix phi;
    double value = 0.0;
    int iterations = 0;
};

ContinuousRun descend(int d, int n, PotentialOrder p, const SearchConfig &cfg, int restart) {
    std::mt19937_64 rng = make_rng(cfg.seed, restart);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double target = nuclear_target(d, n);
    const double bound = static_cast<double>(n) * (n - 1);

    ContinuousRun run;
    run.phi = RealMatrix(d, n);
    do {
        for (Eigen::Index k = 0; k < run.phi.size(); ++k) {
            run.phi(k) = normal(rng);
        }
    } while (!renormalize(run.phi, target));

    run.value = potential_of(run.phi, p);
    double eta = cfg.step;
    for (run.iterations = 0; run.iterations < cfg.max_iters; ++run.iterations) {
        if (run.value - bound <= cfg.target_residual) {
            break;
        }
        RealMatrix grad = project_to_constraint_tangent(SynthesisMatrix(run.phi),
                                                        potential_gradient(SynthesisMatrix(run.phi), p));
        double gn = grad.norm();
        if (!(gn > 0.0)) {
            break;
        }
        RealMatrix dir = grad * (run.phi.norm() / gn);
        bool moved = false;
        while (eta > 1e-14) {
            RealMatrix trial = run.phi - eta * dir;
            if (renormalize(trial, target)) {
                double v = potential_of(trial, p);
                if (v < run.value) {
                    run.phi = std::move(trial);
                    run.value = v;
                    moved = true;
                    break;
                }
            }
            eta *= 0.5;
        }
        if (!moved) {
            break;
        }
        eta = std::min(2.0 * eta, cfg.step);
    }
    return run;
}

void random_tournament(IntMatrix &s, std::mt19937_64 &rng) {
    const Eigen::Index n = s.rows();
    s.setZero();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            s(i, j) = (rng() & 1u) ? 1 : -1;
            s(j, i) = -s(i, j);
        }
    }
}

bool discrete_success(const SeidelSquareTracker &t) {
    const int n = t.n();
    if (n % 2 == 0) {
        return t.objective() == 0;
    }
    // δ·96 = n²(n-1)(n-2) - 6·objective.
    const std::int64_t m = n;
    return m * m * (m - 1) * (m - 2) - 6 * t.objective() == diamond_bound_times96(n);
}

}  // namespace

void SearchConfig::validate() const {
    if (restarts < 1 || max_iters < 1 || !(step > 0.0) || !std::isfinite(step) || !(target_residual >= 0.0)) {
        std::ostringstream msg;
        msg << "invalid search config: restarts=" << restarts << " max_iters=" << max_iters << " step=" << step
            << " target=" << target_residual;
        throw SymfError(ErrorCode::BadParameters, msg.str());
    }
}

std::uint64_t restart_seed(std::uint64_t seed, int restart_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart_index)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

SeidelSquareTracker::SeidelSquareTracker(const SeidelMatrix &s) : s_(s.matrix()), sq_(s_ * s_) {
    for (int i = 0; i < n(); ++i) {
        for (int j = i + 1; j < n(); ++j) {
            objective_ += sq_(i, j) * sq_(i, j);
        }
    }
}

std::int64_t SeidelSquareTracker::flip_delta(int i, int j) const {
    // Only rows (and by symmetry columns) i and j move; (S²)_ij itself is unchanged.
    const std::int64_t s = s_(i, j);
    std::int64_t delta = 0;
    for (int b = 0; b < n(); ++b) {
        if (b == i || b == j) {
            continue;
        }
        const std::int64_t ni = sq_(i, b) - 2 * s * s_(j, b);
        const std::int64_t nj = sq_(j, b) + 2 * s * s_(i, b);
        delta += ni * ni - sq_(i, b) * sq_(i, b) + nj * nj - sq_(j, b) * sq_(j, b);
    }
    return delta;
}

void SeidelSquareTracker::flip(int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= n() || j >= n()) {
        throw SymfError(ErrorCode::IndexOutOfRange, "flip needs two distinct vertices");
    }
    objective_ += flip_delta(i, j);
    const std::int64_t s = s_(i, j);
    // S' = S + Δ with Δ = -2s(e_i e_jᵀ - e_j e_iᵀ); S'² = S² + ΔS + SΔ + Δ².
    IntVector row_i = s_.row(i).transpose();
    IntVector row_j = s_.row(j).transpose();
    IntVector col_i = s_.col(i);
    IntVector col_j = s_.col(j);
    sq_.row(i) -= 2 * s * row_j.transpose();
    sq_.row(j) += 2 * s * row_i.transpose();
    sq_.col(j) -= 2 * s * col_i;
    sq_.col(i) += 2 * s * col_j;
    sq_(i, i) -= 4;
    sq_(j, j) -= 4;
    s_(i, j) = -s;
    s_(j, i) = s;
}

SearchOutcome continuous_etf_search(int d, int n, double p, const SearchConfig &cfg) {
    cfg.validate();
    if (d < 2 || d % 2 != 0 || n < d || !(p > 1.0) || !std::isfinite(p)) {
        std::ostringstream msg;
        msg << "continuous search needs even d >= 2, n >= d and finite p > 1; got d=" << d << " n=" << n
            << " p=" << p;
        throw SymfError(ErrorCode::BadParameters, msg.str());
    }
    const PotentialOrder order = PotentialOrder::finite(p);
    const double bound = static_cast<double>(n) * (n - 1);

    SearchOutcome out;
    out.best_value = std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.restarts; ++r) {
        ContinuousRun run = descend(d, n, order, cfg, r);
        bool ok = run.value - bound <= cfg.target_residual && certify_sign_pattern(run.phi, d);
        out.restart_values.push_back(run.value);
        out.successful_restarts += ok ? 1 : 0;
        // Prefer certified runs, then the lower potential, then the earlier restart.
        bool better = (ok && !out.success) || (ok == out.success && run.value < out.best_value);
        if (better) {
            out.success = ok;
            out.best_value = run.value;
            out.best_object = run.phi;
            out.iterations_used = run.iterations;
            out.restart_index = r;
        }
    }
    return out;
}

SearchOutcome discrete_diamond_search(int n, const SearchConfig &cfg) {
    cfg.validate();
    if (n < 2) {
        throw SymfError(ErrorCode::BadParameters, "discrete search needs n >= 2");
    }
    SearchOutcome out;
    out.best_value = std::numeric_limits<double>::infinity();
    std::vector<std::pair<int, int>> ties;
    for (int r = 0; r < cfg.restarts; ++r) {
        std::mt19937_64 rng = make_rng(cfg.seed, r);
        IntMatrix s(n, n);
        random_tournament(s, rng);
        SeidelSquareTracker tracker{SeidelMatrix(s)};
        SeidelSquareTracker best = tracker;
        bool ok = discrete_success(tracker);
        int plateau = 0;
        int iters = 0;
        for (; iters < cfg.max_iters && !ok; ++iters) {
            std::int64_t min_delta = std::numeric_limits<std::int64_t>::max();
            ties.clear();
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    std::int64_t dv = tracker.flip_delta(i, j);
                    if (dv < min_delta) {
                        min_delta = dv;
                        ties.clear();
                    }
                    if (dv == min_delta) {
                        ties.emplace_back(i, j);
                    }
                }
            }
            if (min_delta < 0) {
                tracker.flip(ties.front().first, ties.front().second);
                plateau = 0;
            } else if (min_delta == 0 && plateau < n) {
                // A seeded choice among sideways moves avoids undoing the previous one.
                std::uniform_int_distribution<size_t> pick(0, ties.size() - 1);
                const auto &e = ties[pick(rng)];
                tracker.flip(e.first, e.second);
                ++plateau;
            } else {
                random_tournament(s, rng);
                tracker = SeidelSquareTracker{SeidelMatrix(s)};
                plateau = 0;
            }
            if (tracker.objective() < best.objective()) {
                best = tracker;
            }
            ok = discrete_success(tracker);
        }
        if (ok) {
            best = tracker;
        }
        const double value = static_cast<double>(best.objective());
        out.restart_values.push_back(value);
        out.successful_restarts += ok ? 1 : 0;
        bool better = (ok && !out.success) || (ok == out.success && value < out.best_value);
        if (better) {
            out.success = ok;
            out.best_value = value;
            out.best_object = best.seidel();
            out.iterations_used = iters;
            out.restart_index = r;
        }
    }
    // Success is re-verified independently of the tracker.
    if (out.success) {
        const SeidelMatrix &t = std::get<SeidelMatrix>(out.best_object);
        out.success = (n % 2 == 0) ? is_skew_conference(t.matrix()) : saturates_diamond_bound(t);
    }
    return out;
}

int gerzon_oracle(int n, const ToleranceProfile &tol) {
    if (n < 2) {
        throw SymfError(ErrorCode::BadParameters, "oracle needs n >= 2");
    }
    if (n > 6) {
        std::ostringstream msg;
        msg << "2^" << n * (n - 1) / 2 << " patterns is too many to enumerate";
        throw SymfError(ErrorCode::TooLarge, msg.str());
    }
    const int edges = n * (n - 1) / 2;
    int best = n;
    RealMatrix s = RealMatrix::Zero(n, n);
    for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
        int bit = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++bit) {
                s(i, j) = ((mask >> bit) & 1u) ? 1.0 : -1.0;
                s(j, i) = -s(i, j);
            }
        }
        best = std::min(best, rank_by_sv(s, tol));
    }
    return best;
}

}  // namespace symf
