// Independent test oracles: cofactor-expansion determinants, exact
// Gauss-Jordan inversion, and random matrix generators. Deliberately
// naive and kept apart from the library's computation paths.
#ifndef TREETP_TESTS_ORACLES_HPP
#define TREETP_TESTS_ORACLES_HPP

#include <random>
#include <stdexcept>
#include <vector>

#include "treetp/exact_matrix.hpp"

namespace oracles {

using treetp::ExactMatrix;
using treetp::OrderedIndexList;
using treetp::Rational;

// Textbook cofactor expansion along the first row. O(n!), for n <= 7.
inline Rational cofactor_det(const ExactMatrix& m) {
    const int n = m.dim();
    if (n > 7) throw std::invalid_argument("cofactor_det: too large");
    if (n == 1) return m(0, 0);
    Rational acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        ExactMatrix sub(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        Rational term = m(0, j) * cofactor_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Exact inverse by Gauss-Jordan with partial (first nonzero) pivoting.
// Throws if singular.
inline ExactMatrix exact_inverse(const ExactMatrix& m) {
    const int n = m.dim();
    ExactMatrix a = m;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("exact_inverse: singular");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        const Rational p = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) /= p;
            inv(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

inline ExactMatrix random_int_matrix(int n, std::mt19937_64& rng, long lo = -5,
                                     long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = treetp::make_rational(dist(rng));
    return m;
}

inline ExactMatrix random_rational_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = treetp::make_rational(num(rng), den(rng));
    return m;
}

// Random nonsingular integer matrix (resamples on det == 0).
inline ExactMatrix random_nonsingular(int n, std::mt19937_64& rng) {
    for (;;) {
        ExactMatrix m = random_int_matrix(n, rng);
        if (cofactor_det(m) != 0) return m;
    }
}

inline OrderedIndexList random_ordered_subset(int n, int k, std::mt19937_64& rng) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return OrderedIndexList(std::vector<int>(labels.begin(), labels.begin() + k));
}

// Random symmetric matrix with positive entries: real spectrum, Perron
// pair well defined.
inline ExactMatrix random_positive_symmetric(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, 9);
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m(i, j) = treetp::make_rational(dist(rng), 2);
            m(j, i) = m(i, j);
        }
    return m;
}

}  // namespace oracles

#endif
