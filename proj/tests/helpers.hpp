#pragma once

#include "effa/effects.hpp"
#include "effa/matrix.hpp"

#include <functional>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace effa::testing {

inline Dist D(std::initializer_list<std::pair<Index, Rational>> ws) {
    Support s;
    for (const auto& [x, w] : ws) {
        s[x] += w;
    }
    return Dist(std::move(s));
}

inline WeightedVec W(const SemiringPtr& s, std::initializer_list<std::pair<Index, Weight>> ws) {
    WeightedVec v(s);
    for (const auto& [x, w] : ws) {
        v.add(x, w);
    }
    return v;
}

/// Every distribution on n points whose weights are multiples of 1/denom.
inline std::vector<Dist> all_dists(std::size_t n, long denom) {
    std::vector<Dist> out;
    std::vector<long> parts(n);
    std::function<void(std::size_t, long)> go = [&](std::size_t i, long left) {
        if (i + 1 == n) {
            parts[i] = left;
            Support s;
            for (std::size_t k = 0; k < n; ++k) {
                s.emplace(k, Rational(parts[k], denom));
            }
            out.emplace_back(std::move(s));
            return;
        }
        for (long v = 0; v <= left; ++v) {
            parts[i] = v;
            go(i + 1, left - v);
        }
    };
    go(0, denom);
    return out;
}

/// A random distribution on n points with weights k/denom.
inline Dist random_dist(std::mt19937& rng, std::size_t n, long denom) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    Support s;
    for (long k = 0; k < denom; ++k) {
        s[pick(rng)] += Rational(1, denom);
    }
    return Dist(std::move(s));
}

inline Channel random_dist_channel(std::mt19937& rng, const Carrier& x, const Carrier& y,
                                   long denom) {
    std::vector<Effect> rows;
    for (std::size_t i = 0; i < x.size(); ++i) {
        rows.push_back(random_dist(rng, y.size(), denom));
    }
    return Channel(Monad::dist(), x, y, std::move(rows));
}

/// Row-stochastic matrix of a distribution channel, built independently of bind.
inline Matrix matrix_of(const Channel& c) {
    Matrix m(c.dom.size(), c.cod.size());
    for (std::size_t x = 0; x < c.dom.size(); ++x) {
        for (const auto& [y, w] : std::get<Dist>(c.rows[x]).weights()) {
            m(x, y) = w;
        }
    }
    return m;
}

} // namespace effa::testing
