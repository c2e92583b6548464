#ifndef DELBOUND_SIMPLEX_HPP
#define DELBOUND_SIMPLEX_HPP

// Dense tableau simplex for  max c^T x  s.t.  A x <= b, x >= 0  with b >= 0,
// so the slack basis is feasible from the start. Bland's rule throughout.

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "delbound/errors.hpp"

namespace delbound {

enum class LPStatus { optimal, infeasible, unbounded };

std::string to_string(LPStatus status);

template <typename Scalar>
struct SimplexResult {
    LPStatus status = LPStatus::infeasible;
    Scalar value{};
    std::vector<Scalar> x;
    int iterations = 0;
};

template <typename Scalar>
struct PivotTraits {
    // Exact scalars compare against zero directly.
    static bool positive(const Scalar& v) { return v > Scalar(0); }
};

template <>
struct PivotTraits<double> {
    static bool positive(double v) { return v > 1e-12; }
};

/// `a` is row-major m x n.
template <typename Scalar>
SimplexResult<Scalar> simplex_maximize(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                                       const std::vector<Scalar>& c, int iteration_cap = 10000)
{
    using Traits = PivotTraits<Scalar>;
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw ValidationError("simplex: ragged constraint matrix");
        if (b[i] < Scalar(0)) throw ValidationError("simplex: right-hand side must be nonnegative");
    }
    const std::size_t cols = n + m + 1;
    // Row m is the objective row, holding -c so optimality means no negative entry.
    std::vector<std::vector<Scalar>> t(m + 1, std::vector<Scalar>(cols, Scalar(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = Scalar(1);
        t[i][cols - 1] = b[i];
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    SimplexResult<Scalar> result;
    for (;;) {
        if (result.iterations >= iteration_cap) {
            throw NumericError("simplex iteration cap " + std::to_string(iteration_cap) + " exceeded");
        }
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (Traits::positive(-t[m][j])) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Scalar best_ratio{};
        for (std::size_t i = 0; i < m; ++i) {
            if (!Traits::positive(t[i][enter])) continue;
            const Scalar ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            result.status = LPStatus::unbounded;
            return result;
        }

        const Scalar pivot = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == Scalar(0)) continue;
            const Scalar factor = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
        ++result.iterations;
    }

    result.status = LPStatus::optimal;
    result.value = t[m][cols - 1];
    result.x.assign(n, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) result.x[basis[i]] = t[i][cols - 1];
    }
    return result;
}

}  // namespace delbound

#endif
