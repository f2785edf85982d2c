#include "treetp/search.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "treetp/ttp.hpp"

namespace treetp {

namespace {

const Rational kMargin = make_rational(1, 1000);

// Snap to a dyadic grid so candidate denominators stay bounded and every
// exact evaluation stays cheap. Fine enough that the smallest
// distance-kernel entries on small-diameter trees survive rounding.
const long kGrid = 1 << 20;

Rational snap(const Rational& q) {
    Rational scaled = q * kGrid;
    Integer rounded;
    // round to nearest: floor(x + 1/2)
    Rational shifted = scaled + make_rational(1, 2);
    mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num().get_mpz_t(),
               shifted.get_den().get_mpz_t());
    Rational out(rounded, kGrid);
    out.canonicalize();
    return out;
}

Rational clamp(const Rational& q, const Rational& lo, const Rational& hi) {
    if (q < lo) return lo;
    if (q > hi) return hi;
    return q;
}

// Uniform dyadic rational in [-1, 1] with denominator 1024.
Rational dyadic_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-1024, 1024);
    return make_rational(dist(rng), 1024);
}

// Warm start for non-path trees: the tree-distance kernel
// a_ij = q^(d(i,j)^2), seed-jittered. Within any tree path the hop
// distance equals the position difference along the path, so each path
// submatrix is a Gaussian-kernel matrix at equally spaced points, which
// is strictly totally positive.
ExactMatrix distance_kernel_start(const LabelledTree& t, std::mt19937_64& rng,
                                  const SearchConfig& cfg) {
    const int n = t.vertex_count();
    const Rational q = make_rational(1, 2);
    ExactMatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int d = t.distance(i, j);
            Rational base = 1;
            for (int e = 0; e < d * d; ++e) base *= q;
            Rational jitter = 1 + dyadic_unit(rng) * make_rational(1, 32);
            a(i - 1, j - 1) =
                clamp(snap(base * jitter), cfg.entry_min, cfg.entry_max);
        }
    return a;
}

Rational hinge(const Rational& threshold, const Rational& value) {
    return value < threshold ? threshold - value : Rational(0);
}

Rational negdet_penalty(const ExactMatrix& a) {
    // Requires det <= -margin for a zero penalty.
    Rational d = det(a);
    Rational shifted = d + kMargin;
    return shifted > 0 ? shifted : Rational(0);
}

struct AnnealTarget {
    const LabelledTree& tree;
    bool want_negative_det;

    Rational score(const ExactMatrix& a) const {
        Rational s = violation_score(a, tree);
        if (want_negative_det) s += negdet_penalty(a);
        return s;
    }
    bool verify(const ExactMatrix& a) const {
        if (!is_ttp(a, tree).pass) return false;
        return !want_negative_det || sign(det(a)) < 0;
    }
};

SearchOutcome anneal(const LabelledTree& t, const SearchConfig& cfg,
                     const AnnealTarget& target) {
    const int n = t.vertex_count();
    std::mt19937_64 rng(cfg.seed);

    SearchOutcome outcome;
    if (cfg.budget == 0) return outcome;

    auto warm_start = [&]() {
        return t.is_natural_path() ? generate_tp(n, rng()) : distance_kernel_start(t, rng, cfg);
    };

    ExactMatrix current = warm_start();
    Rational cur_score = target.score(current);
    ++outcome.evaluations;
    if (cfg.log) *cfg.log << outcome.evaluations << ' ' << to_string(cur_score) << '\n';

    double temperature = std::max(to_double(cur_score), 1e-3) * 0.1;
    const double initial_temperature = temperature;
    int non_improving = 0;
    int coolings = 0;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    while (outcome.evaluations < cfg.budget) {
        if (cur_score == 0 && target.verify(current)) {
            outcome.found = true;
            outcome.matrix = current;
            outcome.final_score = 0;
            outcome.hypotheses_hold = check_hypotheses(current, t).all_hold;
            return outcome;
        }

        const int i = pick(rng), j = pick(rng);
        Rational factor = 1 + cfg.step_scale * dyadic_unit(rng);
        Rational proposed = clamp(snap(current(i, j) * factor), cfg.entry_min, cfg.entry_max);

        const Rational saved = current(i, j);
        current(i, j) = proposed;
        Rational new_score = target.score(current);
        ++outcome.evaluations;

        const double delta = to_double(new_score - cur_score);
        const bool accept =
            new_score <= cur_score || unit(rng) < std::exp(-delta / temperature);
        if (accept && new_score < cur_score) {
            non_improving = 0;
        } else {
            ++non_improving;
        }
        if (accept) {
            cur_score = std::move(new_score);
            if (cfg.log) *cfg.log << outcome.evaluations << ' ' << to_string(cur_score) << '\n';
        } else {
            current(i, j) = saved;
        }

        if (non_improving >= 100) {
            non_improving = 0;
            temperature *= cfg.anneal;
            if (++coolings >= 10) {
                coolings = 0;
                temperature = initial_temperature;
                current = warm_start();
                cur_score = target.score(current);
                ++outcome.evaluations;
            }
        }
    }
    if (cur_score == 0 && target.verify(current)) {
        outcome.found = true;
        outcome.matrix = current;
        outcome.hypotheses_hold = check_hypotheses(current, t).all_hold;
    }
    outcome.final_score = cur_score;
    return outcome;
}

}  // namespace

ExactMatrix generate_tp(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_tp: n >= 1 required");
    std::mt19937_64 rng(seed);

    // Vandermonde matrix a_ij = x_i^(j-1) at nodes 0 < x_1 < ... < x_n.
    // Every minor is a generalized Vandermonde determinant at positive
    // increasing nodes, hence strictly positive; random row scaling
    // keeps all minors positive and varies the instances.
    std::uniform_int_distribution<long> frac(1, 7), scale(2, 9);
    ExactMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const Rational x = (i + 1) + make_rational(frac(rng), 8);
        const Rational row_scale = make_rational(scale(rng), 4);
        Rational power = 1;
        for (int j = 0; j < n; ++j) {
            a(i, j) = row_scale * power;
            power *= x;
        }
    }
    return a;
}

Rational violation_score(const ExactMatrix& a, const LabelledTree& t) {
    if (a.dim() != t.vertex_count())
        throw std::invalid_argument("violation_score: dimension mismatch");
    const int n = a.dim();

    // The hinge margin only shapes the search gradient; feasibility is
    // strict positivity. Contiguous minors suffice for full total
    // positivity of each path submatrix, so strictly_feasible here is
    // exactly the T-TP condition.
    bool strictly_feasible = true;
    Rational score = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            score += hinge(kMargin, a(i, j));
            strictly_feasible = strictly_feasible && sign(a(i, j)) > 0;
        }

    for (const auto& path : t.enumerate_paths()) {
        const ExactMatrix sub = a.principal_submatrix(path);
        const int m = sub.dim();
        for (int k = 1; k <= m; ++k)
            for (int r0 = 1; r0 + k - 1 <= m; ++r0)
                for (int c0 = 1; c0 + k - 1 <= m; ++c0) {
                    std::vector<int> rows(static_cast<std::size_t>(k)),
                        cols(static_cast<std::size_t>(k));
                    for (int x = 0; x < k; ++x) {
                        rows[static_cast<std::size_t>(x)] = r0 + x;
                        cols[static_cast<std::size_t>(x)] = c0 + x;
                    }
                    const Rational m_val = minor_det(sub, OrderedIndexList(rows),
                                                     OrderedIndexList(cols));
                    score += hinge(kMargin, m_val);
                    strictly_feasible = strictly_feasible && sign(m_val) > 0;
                }
    }
    return strictly_feasible ? Rational(0) : score;
}

SearchOutcome search_ttp(const LabelledTree& t, const SearchConfig& cfg) {
    return anneal(t, cfg, AnnealTarget{t, false});
}

SearchOutcome hunt_negative_det(const LabelledTree& t, const SearchConfig& cfg) {
    if (t.is_natural_path())
        throw std::invalid_argument(
            "hunt_negative_det: vacuous on a naturally labelled path (TP implies det > 0)");
    return anneal(t, cfg, AnnealTarget{t, true});
}

}  // namespace treetp
