#include "treetp/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace treetp {

FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix out(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

ExactMatrix to_exact(const FloatMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw std::invalid_argument("to_exact: square matrix required");
    ExactMatrix out(static_cast<int>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!std::isfinite(m(i, j)))
                throw std::invalid_argument("to_exact: non-finite entry");
            out(i, j) = Rational(m(i, j));  // exact dyadic conversion
        }
    return out;
}

namespace {

void canonical_orientation(Eigen::VectorXd& v) {
    int lead = 0;
    for (int i = 1; i < v.size(); ++i)
        if (std::abs(v(i)) > std::abs(v(lead))) lead = i;
    if (v(lead) < 0) v = -v;
}

double spectrum_gap(const FloatMatrix& a, double lambda) {
    Eigen::EigenSolver<FloatMatrix> solver(a);
    const auto& vals = solver.eigenvalues();
    // Skip the single eigenvalue closest to lambda, measure the next one.
    int closest = 0;
    for (int i = 1; i < vals.size(); ++i)
        if (std::abs(vals(i) - std::complex<double>(lambda)) <
            std::abs(vals(closest) - std::complex<double>(lambda)))
            closest = i;
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < vals.size(); ++i)
        if (i != closest)
            gap = std::min(gap, std::abs(vals(i) - std::complex<double>(lambda)));
    return gap;
}

Eigen::VectorXd inverse_iteration(const FloatMatrix& a, double shift, double tol_abs,
                                  int max_iter, double* residual_out, double lambda) {
    const int n = static_cast<int>(a.rows());
    FloatMatrix shifted = a - shift * FloatMatrix::Identity(n, n);
    Eigen::PartialPivLU<FloatMatrix> lu(shifted);

    Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized();
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd next = lu.solve(v);
        const double norm = next.norm();
        if (!std::isfinite(norm) || norm == 0.0)
            throw SpectralError("inverse iteration: shifted solve degenerated");
        v = next / norm;
        const double residual = (a * v - lambda * v).norm();
        if (residual <= tol_abs) {
            canonical_orientation(v);
            *residual_out = residual;
            return v;
        }
    }
    throw SpectralError("inverse iteration: no convergence within max_iter");
}

}  // namespace

EigenPair smallest_eigenpair(const FloatMatrix& a, double tol, int max_iter) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw std::invalid_argument("smallest_eigenpair: square matrix required");
    const int n = static_cast<int>(a.rows());
    const double scale = std::max(a.norm(), 1.0);  // Frobenius

    const ExactMatrix exact = to_exact(a);
    const Polynomial p = char_poly(exact);
    if (p.coefficient(0) == 0) throw SpectralError("smallest_eigenpair: singular matrix");

    const Rational root_tol = Rational(1e-12) * Rational(scale);
    const auto roots = p.real_roots(root_tol);
    if (roots.empty())
        throw SpectralError("smallest_eigenpair: no real eigenvalue (complex spectrum)");
    const double lambda = to_double(roots.front());

    // A complex eigenvalue below the smallest real one makes "smallest
    // eigenvalue" ambiguous; refuse rather than guess.
    Eigen::EigenSolver<FloatMatrix> solver(a);
    const double imag_tol = 1e-8 * scale;
    for (int i = 0; i < n; ++i) {
        const auto z = solver.eigenvalues()(i);
        if (std::abs(z.imag()) > imag_tol && z.real() < lambda - imag_tol)
            throw SpectralError(
                "smallest_eigenpair: complex eigenvalue below the smallest real one");
    }

    EigenPair pair;
    pair.value = lambda;
    pair.simple = spectrum_gap(a, lambda) > 1e-8 * scale;

    // Shift slightly off the eigenvalue so the shifted matrix stays
    // invertible in floating point.
    const double shift = lambda + 1e-10 * scale;
    pair.vector =
        inverse_iteration(a, shift, tol * scale, max_iter, &pair.residual, lambda);
    return pair;
}

EigenPair largest_eigenpair(const FloatMatrix& a, double tol, int max_iter) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw std::invalid_argument("largest_eigenpair: square matrix required");
    if ((a.array() <= 0.0).any())
        throw std::invalid_argument("largest_eigenpair: entrywise positive matrix required");
    const int n = static_cast<int>(a.rows());
    const double scale = std::max(a.norm(), 1.0);

    Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized();
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd next = a * v;
        const double norm = next.norm();
        if (norm == 0.0) throw SpectralError("largest_eigenpair: iterate vanished");
        v = next / norm;
        const double lambda = v.dot(a * v);
        const double residual = (a * v - lambda * v).norm();
        if (residual <= tol * scale) {
            canonical_orientation(v);
            EigenPair pair;
            pair.value = lambda;
            pair.vector = v;
            pair.residual = residual;
            pair.simple = spectrum_gap(a, lambda) > 1e-8 * scale;
            return pair;
        }
    }
    throw SpectralError("largest_eigenpair: no convergence within max_iter");
}

VerdictReport signing_verdict(const Eigen::VectorXd& v, const VertexSigning& sigma,
                              double zero_tol) {
    if (v.size() != sigma.size())
        throw std::invalid_argument("signing_verdict: vector/signing size mismatch");

    VerdictReport report;
    for (int k = 0; k < v.size(); ++k) {
        ++report.minors_checked;
        if (std::abs(v(k)) <= zero_tol) {
            report.pass = false;
            report.witness = MinorWitness{{k + 1},
                                          {},
                                          Rational(v(k)),
                                          {},
                                          "eigenvector entry below zero tolerance"};
            return report;
        }
    }
    // Global flip c: fix it from the first component.
    const int c = (v(0) > 0 ? 1 : -1) * sigma(1);
    for (int k = 0; k < v.size(); ++k) {
        const int expected = c * sigma(k + 1);
        if ((v(k) > 0 ? 1 : -1) != expected) {
            report.pass = false;
            report.witness = MinorWitness{{k + 1},
                                          {},
                                          Rational(v(k)),
                                          {},
                                          "eigenvector sign differs from tree signing"};
            return report;
        }
    }
    return report;
}

TheoremVerdict verify_theorem(const ExactMatrix& a, const LabelledTree& t, double tol) {
    TheoremVerdict verdict;
    verdict.hypotheses = check_hypotheses(a, t);
    if (!verdict.hypotheses.all_hold) {
        verdict.status = TheoremStatus::hypotheses_not_met;
        return verdict;
    }

    verdict.sign_pattern = adjoint_sign_check(a, t);

    try {
        verdict.smallest = smallest_eigenpair(to_float(a), tol);
    } catch (const SpectralError& e) {
        verdict.status = TheoremStatus::solver_error;
        verdict.error = e.what();
        return verdict;
    }

    verdict.signing = signing_verdict(verdict.smallest->vector, t.signing());
    verdict.routes_agree = (verdict.sign_pattern.clean() == verdict.signing.pass);

    const bool spectral_ok =
        verdict.smallest->simple && verdict.signing.pass;
    verdict.status = (spectral_ok && verdict.sign_pattern.clean()) ? TheoremStatus::pass
                                                                   : TheoremStatus::fail;
    return verdict;
}

}  // namespace treetp
