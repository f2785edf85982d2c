#ifndef TREETP_SEARCH_HPP
#define TREETP_SEARCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "treetp/exact_matrix.hpp"
#include "treetp/tree.hpp"

namespace treetp {

struct SearchConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = 100000;       // max candidate evaluations
    Rational step_scale = make_rational(1, 8);
    Rational entry_min = make_rational(1, 1 << 20);
    Rational entry_max = make_rational(16);
    double anneal = 0.9;                 // cooling factor per plateau
    std::ostream* log = nullptr;         // optional "evaluations score" lines
};

struct SearchOutcome {
    bool found = false;
    std::optional<ExactMatrix> matrix;   // re-verified exactly when found
    std::uint64_t evaluations = 0;
    Rational final_score;
    bool hypotheses_hold = false;        // theorem hypotheses on the found matrix
};

/// Strictly totally positive matrix: a row-scaled Vandermonde matrix at
/// random increasing positive rational nodes. Entries stay small enough
/// that downstream exact verification is cheap.
ExactMatrix generate_tp(int n, std::uint64_t seed);

/// Search objective: 0 iff is_ttp passes; otherwise the sum of hinge
/// penalties max(0, eps - m) over every required contiguous path minor
/// m and every entry, with margin eps = 1/1000 shaping the gradient.
Rational violation_score(const ExactMatrix& a, const LabelledTree& t);

/// Simulated annealing over positive rational matrices minimizing
/// violation_score. Deterministic for a fixed config. A found matrix is
/// re-verified with the exact T-TP checker before being reported.
SearchOutcome search_ttp(const LabelledTree& t, const SearchConfig& cfg);

/// Searches for a matrix that is T-TP with det < 0, witnessing that the
/// theorem's hypotheses are not implied by T-TP alone. Rejects naturally
/// labelled path trees (a path-ordered TP matrix always has det > 0).
SearchOutcome hunt_negative_det(const LabelledTree& t, const SearchConfig& cfg);

}  // namespace treetp

#endif
