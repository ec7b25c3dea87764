#include "effa/lp.hpp"

#include "effa/error.hpp"

namespace effa {

std::optional<RVec> nonneg_solution(const Matrix& a, const RVec& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) {
        throw InterfaceError("right-hand side dimension mismatch");
    }
    // Tableau over columns [x (n) | artificials (m) | rhs]; rows flipped so b >= 0.
    const std::size_t width = n + m + 1;
    std::vector<RVec> t(m, RVec(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = b[r].sign() < 0;
        for (std::size_t c = 0; c < n; ++c) {
            t[r][c] = flip ? -a(r, c) : a(r, c);
        }
        t[r][n + r] = Rational(1);
        t[r][n + m] = flip ? -b[r] : b[r];
        basis[r] = n + r;
    }
    // reduced costs of the phase-one objective (minimize sum of artificials)
    RVec cost(width);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (c < n || c == n + m) {
                cost[c] -= t[r][c];
            }
        }
    }
    for (;;) {
        // Bland: entering column = lowest index with negative reduced cost
        std::size_t enter = width;
        for (std::size_t c = 0; c + 1 < width; ++c) {
            if (cost[c].sign() < 0) {
                enter = c;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (t[r][enter].sign() <= 0) {
                continue;
            }
            Rational ratio = t[r][width - 1] / t[r][enter];
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = std::move(ratio);
            }
        }
        if (leave == m) {
            // cannot happen for a bounded phase-one objective
            throw IntegrityError("unbounded phase-one simplex");
        }
        const Rational inv = Rational(1) / t[leave][enter];
        for (auto& x : t[leave]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || t[r][enter].is_zero()) {
                continue;
            }
            const Rational f = t[r][enter];
            for (std::size_t c = 0; c < width; ++c) {
                if (!t[leave][c].is_zero()) {
                    t[r][c] -= f * t[leave][c];
                }
            }
        }
        if (!cost[enter].is_zero()) {
            const Rational f = cost[enter];
            for (std::size_t c = 0; c < width; ++c) {
                if (!t[leave][c].is_zero()) {
                    cost[c] -= f * t[leave][c];
                }
            }
        }
        basis[leave] = enter;
    }
    if (!cost[width - 1].is_zero()) {
        return std::nullopt;
    }
    RVec x(n);
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) {
            x[basis[r]] = t[r][width - 1];
        } else if (!t[r][width - 1].is_zero()) {
            return std::nullopt;
        }
    }
    return x;
}

std::optional<RVec> convex_coefficients(const std::vector<RVec>& points, const RVec& target) {
    if (points.empty()) {
        return std::nullopt;
    }
    const std::size_t d = target.size();
    Matrix a(d + 1, points.size());
    RVec b(d + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != d) {
            throw InterfaceError("point dimension mismatch");
        }
        for (std::size_t i = 0; i < d; ++i) {
            a(i, j) = points[j][i];
        }
        a(d, j) = Rational(1);
    }
    for (std::size_t i = 0; i < d; ++i) {
        b[i] = target[i];
    }
    b[d] = Rational(1);
    return nonneg_solution(a, b);
}

} // namespace effa
