#ifndef TREETP_SPECTRAL_HPP
#define TREETP_SPECTRAL_HPP

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>

#include "treetp/charpoly.hpp"
#include "treetp/exact_matrix.hpp"
#include "treetp/ttp.hpp"

namespace treetp {

/// Floating-point shadow of ExactMatrix for eigen computations.
using FloatMatrix = Eigen::MatrixXd;

FloatMatrix to_float(const ExactMatrix& m);

/// Exact lift of a double matrix: every finite double is a dyadic
/// rational, so the conversion is lossless.
ExactMatrix to_exact(const FloatMatrix& m);

struct EigenPair {
    double value = 0.0;
    Eigen::VectorXd vector;  // unit norm, canonically oriented
    double residual = 0.0;   // ||Av - lambda v||_2
    bool simple = true;      // eigenvalue gap above tolerance
};

class SpectralError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Minimum of the real spectrum via exact characteristic-polynomial root
/// isolation, eigenvector by inverse iteration at that shift. Throws
/// SpectralError when A is singular, when no real eigenvalue exists or a
/// complex eigenvalue lies below the smallest real one, or on
/// non-convergence. simple = false when another eigenvalue is within
/// 1e-8 * ||A||_F.
EigenPair smallest_eigenpair(const FloatMatrix& a, double tol = 1e-10, int max_iter = 1000);

/// Perron pair of an entrywise-positive matrix by power iteration;
/// returned vector is entrywise positive.
EigenPair largest_eigenpair(const FloatMatrix& a, double tol = 1e-10, int max_iter = 20000);

/// Pass iff every component exceeds zero_tol in magnitude and the sign
/// pattern equals +sigma or -sigma. Witness = first violating vertex.
VerdictReport signing_verdict(const Eigen::VectorXd& v, const VertexSigning& sigma,
                              double zero_tol = 1e-8);

enum class TheoremStatus {
    hypotheses_not_met,  // theorem untested
    pass,
    fail,          // hypotheses hold but a conclusion check failed
    solver_error,  // numerics did not converge / spectrum not as assumed
};

struct TheoremVerdict {
    TheoremStatus status = TheoremStatus::hypotheses_not_met;
    HypothesisReport hypotheses;
    SignPatternReport sign_pattern;   // exact route; set when hypotheses hold
    std::optional<EigenPair> smallest;
    VerdictReport signing;
    bool routes_agree = false;  // exact sign pattern vs spectral signing verdict
    std::string error;
};

/// Full conclusion check: gated on the hypotheses, then runs both the
/// exact adjoint sign-pattern route and the spectral route (smallest
/// eigenpair real, simple, eigenvector signed by the tree) and reports
/// whether they agree.
TheoremVerdict verify_theorem(const ExactMatrix& a, const LabelledTree& t,
                              double tol = 1e-10);

}  // namespace treetp

#endif
