#ifndef TREETP_TPCHECK_HPP
#define TREETP_TPCHECK_HPP

#include "treetp/exact_matrix.hpp"
#include "treetp/verdict.hpp"

namespace treetp {

/// Total positivity via Fekete's criterion: every minor with contiguous
/// row set and contiguous column set must be > 0, which implies that all
/// minors are. Minors are visited by increasing size, then lexicographic
/// (row offset, column offset); the witness is the first failure in that
/// order.
VerdictReport is_tp(const ExactMatrix& m);

/// Literal definition: every minor over every equal-size pair of index
/// subsets must be > 0. Exponential; guarded to dim <= 7 (throws
/// std::invalid_argument beyond). Retained as the oracle for is_tp.
VerdictReport is_tp_bruteforce(const ExactMatrix& m);

/// P-matrix: all 2^n - 1 principal minors > 0. Guarded to dim <= 20.
VerdictReport is_p_matrix(const ExactMatrix& m);

}  // namespace treetp

#endif
