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

#include "symf/tournament.h"

#include <cmath>
#include <sstream>

#include "symf/error.h"

namespace symf {

SeidelMatrix::SeidelMatrix(IntMatrix s) : s_(std::move(s)) {
    if (s_.rows() != s_.cols()) {
        throw SymfError(ErrorCode::InvalidSeidel, "Seidel matrix must be square");
    }
    for (Eigen::Index i = 0; i < s_.rows(); ++i) {
        if (s_(i, i) != 0) {
            throw SymfError(ErrorCode::InvalidSeidel, "nonzero diagonal");
        }
        for (Eigen::Index j = i + 1; j < s_.cols(); ++j) {
            if ((s_(i, j) != 1 && s_(i, j) != -1) || s_(j, i) != -s_(i, j)) {
                std::ostringstream msg;
                msg << "entry (" << i << "," << j << ") is not a tournament edge";
                throw SymfError(ErrorCode::InvalidSeidel, msg.str());
            }
        }
    }
}

SwitchingVector::SwitchingVector(std::vector<int> eps) : eps_(std::move(eps)) {
    for (int e : eps_) {
        if (e != 1 && e != -1) {
            throw SymfError(ErrorCode::BadParameters, "switching entries must be +1 or -1");
        }
    }
}

SeidelMatrix seidel_from_gram(const GramSkew &g, const ToleranceProfile &tol) {
    std::optional<double> mu = is_equiangular(g, tol);
    if (!mu) {
        throw SymfError(ErrorCode::NotEquiangular, "off-diagonal moduli are not constant");
    }
    IntMatrix rounded;
    if (!round_to_int(g.matrix() / *mu, tol.entry_tol, rounded)) {
        throw SymfError(ErrorCode::RoundingFailure, "g/μ is not an integer pattern");
    }
    try {
        return SeidelMatrix(std::move(rounded));
    } catch (const SymfError &e) {
        throw SymfError(ErrorCode::RoundingFailure, e.what());
    }
}

DegreeStats degree_stats(const SeidelMatrix &s) {
    const int n = s.n();
    DegreeStats stats;
    stats.out_degrees.assign(static_cast<size_t>(n), 0);
    stats.in_degrees.assign(static_cast<size_t>(n), 0);
    stats.common_out = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (s(i, j) == 1) {
                ++stats.out_degrees[static_cast<size_t>(i)];
            } else if (s(i, j) == -1) {
                ++stats.in_degrees[static_cast<size_t>(i)];
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::int64_t common = 0;
            for (int k = 0; k < n; ++k) {
                if (s(i, k) == 1 && s(j, k) == 1) {
                    ++common;
                }
            }
            stats.common_out(i, j) = common;
        }
    }
    return stats;
}

int gamma(const SeidelMatrix &s, int i, int j) {
    const int n = s.n();
    if (i < 0 || j < 0 || i >= n || j >= n) {
        throw SymfError(ErrorCode::IndexOutOfRange, "vertex index out of range");
    }
    if (i == j) {
        throw SymfError(ErrorCode::EqualIndices, "gamma needs two distinct vertices");
    }
    int count = 0;
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) {
            continue;
        }
        bool i_beats_k = s(i, k) == 1;
        bool k_beats_j = s(k, j) == 1;
        // k ∈ N⁺(i)∩N⁻(j) or k ∈ N⁻(i)∩N⁺(j)
        if ((i_beats_k && k_beats_j) || (!i_beats_k && !k_beats_j)) {
            ++count;
        }
    }
    return count;
}

IntMatrix seidel_square(const SeidelMatrix &s) {
    return s.matrix() * s.matrix();
}

std::int64_t integer_determinant(const IntMatrix &m) {
    // Bareiss fraction-free elimination; every division is exact.
    const Eigen::Index n = m.rows();
    if (n == 0) {
        return 1;
    }
    std::vector<std::vector<__int128>> a(static_cast<size_t>(n), std::vector<__int128>(static_cast<size_t>(n)));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a[i][j] = m(i, j);
        }
    }
    __int128 prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            Eigen::Index swap = k + 1;
            while (swap < n && a[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

std::int64_t count_diamonds_bruteforce(const SeidelMatrix &s) {
    const int n = s.n();
    std::int64_t count = 0;
    IntMatrix minor(4, 4);
    int idx[4];
    for (idx[0] = 0; idx[0] < n; ++idx[0]) {
        for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1]) {
            for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2]) {
                for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3]) {
                    for (int a = 0; a < 4; ++a) {
                        for (int b = 0; b < 4; ++b) {
                            minor(a, b) = s(idx[a], idx[b]);
                        }
                    }
                    std::int64_t det = integer_determinant(minor);
                    if (det == 9) {
                        ++count;
                    } else if (det != 1) {
                        std::ostringstream msg;
                        msg << "4x4 principal minor has determinant " << det;
                        throw SymfError(ErrorCode::InvalidSeidel, msg.str());
                    }
                }
            }
        }
    }
    return count;
}

std::int64_t count_diamonds_formula(const SeidelMatrix &s) {
    const std::int64_t n = s.n();
    IntMatrix sq = seidel_square(s);
    std::int64_t sum_sq = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            sum_sq += sq(i, j) * sq(i, j);
        }
    }
    std::int64_t numerator = n * n * (n - 1) * (n - 2) - 6 * sum_sq;
    if (numerator < 0 || numerator % 96 != 0) {
        std::ostringstream msg;
        msg << "closed form gives " << numerator << "/96";
        throw SymfError(ErrorCode::NonIntegerResult, msg.str());
    }
    return numerator / 96;
}

std::int64_t diamond_bound_times96(int n) {
    if (n < 1 || n % 2 == 0) {
        std::ostringstream msg;
        msg << "diamond bound needs odd n, got " << n;
        throw SymfError(ErrorCode::EvenN, msg.str());
    }
    std::int64_t m = n;
    return m * (m - 1) * (m - 3) * (m + 1);
}

double diamond_upper_bound(int n) {
    return static_cast<double>(diamond_bound_times96(n)) / 96.0;
}

bool saturates_diamond_bound(const SeidelMatrix &s) {
    if (s.n() % 2 == 0) {
        return false;
    }
    return 96 * count_diamonds_formula(s) == diamond_bound_times96(s.n());
}

bool is_doubly_regular(const SeidelMatrix &s) {
    const int n = s.n();
    if (n % 4 != 3) {
        return false;
    }
    DegreeStats stats = degree_stats(s);
    for (int i = 0; i < n; ++i) {
        if (stats.out_degrees[static_cast<size_t>(i)] != (n - 1) / 2) {
            return false;
        }
        for (int j = 0; j < n; ++j) {
            if (i != j && stats.common_out(i, j) != (n - 3) / 4) {
                return false;
            }
        }
    }
    return true;
}

SeidelMatrix switch_tournament(const SeidelMatrix &s, const SwitchingVector &d) {
    if (d.size() != s.n()) {
        throw SymfError(ErrorCode::LengthMismatch, "switching vector length differs from n");
    }
    IntMatrix out = s.matrix();
    for (int i = 0; i < s.n(); ++i) {
        for (int j = 0; j < s.n(); ++j) {
            out(i, j) *= d[i] * d[j];
        }
    }
    return SeidelMatrix(std::move(out));
}

std::optional<SwitchingVector> flat_kernel(const SeidelMatrix &s, const ToleranceProfile &tol) {
    const int n = s.n();
    if (n == 0) {
        return std::nullopt;
    }
    RealMatrix m = to_real(s.matrix());
    if (n - rank_by_sv(m, tol) != 1) {
        return std::nullopt;
    }
    Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullV);
    RealVector v = svd.matrixV().col(n - 1) * std::sqrt(static_cast<double>(n));
    double flat_tol = std::sqrt(tol.entry_tol);
    std::vector<int> signs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (std::abs(std::abs(v(i)) - 1.0) > flat_tol) {
            return std::nullopt;
        }
        signs[static_cast<size_t>(i)] = v(i) > 0 ? 1 : -1;
    }
    if (signs[0] < 0) {
        for (int &e : signs) {
            e = -e;
        }
    }
    IntVector x(n);
    for (int i = 0; i < n; ++i) {
        x(i) = signs[static_cast<size_t>(i)];
    }
    if ((s.matrix() * x).cwiseAbs().maxCoeff() != 0) {
        return std::nullopt;
    }
    return SwitchingVector(std::move(signs));
}

}  // namespace symf
