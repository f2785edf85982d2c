#ifndef TREETP_TTP_HPP
#define TREETP_TTP_HPP

#include <map>

#include "treetp/exact_matrix.hpp"
#include "treetp/tpcheck.hpp"
#include "treetp/tree.hpp"
#include "treetp/verdict.hpp"

namespace treetp {

/// The three hypotheses of the main theorem: the matrix is T-TP, its
/// determinant is positive, and deleting any pendant vertex leaves a
/// P-matrix.
struct HypothesisReport {
    VerdictReport ttp;
    Rational det_value;
    bool det_positive = false;
    std::map<int, VerdictReport> pendant_reports;  // pendant vertex -> P-matrix verdict
    bool all_hold = false;
};

/// Sign comparison of the exact adjoint against the sigma_i * sigma_j
/// outer product. Mismatches are classified by whether the row/column
/// index is a pendant vertex; zero entries count as mismatches but are
/// tallied separately from wrong signs.
struct SignPatternReport {
    struct Mismatch {
        int row = 0, col = 0;  // 1-based
        int actual = 0;        // sign of the adjoint entry; 0 = zero entry
        int expected = 0;
    };
    struct ClassSummary {
        std::uint64_t checked = 0;
        std::uint64_t wrong_sign = 0;
        std::uint64_t zero = 0;
    };

    int n = 0;
    std::vector<int> entry_signs;  // row-major, values in {-1, 0, +1}
    std::vector<int> expected;     // row-major sigma_i * sigma_j
    std::vector<Mismatch> mismatches;
    ClassSummary pendant_pendant, pendant_other, other_other;

    bool clean() const { return mismatches.empty(); }
};

/// T-TP per the defining property: all entries > 0 and for every tree
/// path P the ordered submatrix A[P] is TP. Witnesses carry the path and
/// the offending minor in ambient (1-based) labels.
VerdictReport is_ttp(const ExactMatrix& a, const LabelledTree& t);

/// Evaluates all three theorem hypotheses. Requires dim(a) = n(t) >= 2.
HypothesisReport check_hypotheses(const ExactMatrix& a, const LabelledTree& t);

/// Residual of the three-term adjoint identity
///   A[i,N;i,N] adj(k,i) + A[j,N;i,N] adj(k,j) + A[k,N;i,N] adj(k,k),
/// N = (1..n) with i, j, k removed, ascending. Identically zero for
/// every square matrix with n >= 3 and distinct i, j, k (1-based).
Rational lemma22_residual(const ExactMatrix& a, int i, int j, int k);

/// Checks sign(adj(a)_{ij}) == sigma_i * sigma_j for all i, j.
SignPatternReport adjoint_sign_check(const ExactMatrix& a, const LabelledTree& t);

/// Equivalent formulation: D adj(a) D entrywise positive, D = diag(sigma).
/// Passes exactly when adjoint_sign_check reports no mismatches.
VerdictReport equivalence_sigma_conjugation(const ExactMatrix& a, const LabelledTree& t);

}  // namespace treetp

#endif
