#ifndef TREETP_EXACT_MATRIX_HPP
#define TREETP_EXACT_MATRIX_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "treetp/index_list.hpp"
#include "treetp/rational.hpp"

namespace treetp {

/// Square matrix of exact rationals. Immutable use is the norm after
/// construction; every operation below is a pure function.
class ExactMatrix {
  public:
    explicit ExactMatrix(int n) : n_(check_dim(n)), e_(static_cast<std::size_t>(n) * n) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(int n);

    int dim() const { return n_; }

    const Rational& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }
    Rational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Re-ordered submatrix: row k of the result is row rows[k] of *this
    /// (1-based labels), likewise for columns.
    ExactMatrix submatrix(const OrderedIndexList& rows, const OrderedIndexList& cols) const;

    /// Principal submatrix selected by the same ordered labels for rows
    /// and columns.
    ExactMatrix principal_submatrix(const OrderedIndexList& labels) const {
        return submatrix(labels, labels);
    }

    /// Principal submatrix with one row/column (1-based) deleted.
    ExactMatrix delete_vertex(int label) const;

    Rational trace() const;

    bool operator==(const ExactMatrix& o) const = default;

  private:
    static int check_dim(int n);
    int n_;
    std::vector<Rational> e_;
};

/// Exact determinant by fraction-free Bareiss elimination over a common
/// integer denominator.
Rational det(const ExactMatrix& m);

/// det A[rows; cols] with row/column order as given; a transposition of
/// two row (or column) labels flips the sign.
Rational minor_det(const ExactMatrix& m, const OrderedIndexList& rows,
                   const OrderedIndexList& cols);

/// Classical adjugate: entry (i,j) is (-1)^{i+j} times the minor with row
/// j and column i deleted; satisfies M * adj(M) = det(M) * I exactly.
/// Requires dim >= 2.
ExactMatrix adjoint(const ExactMatrix& m);

/// Residual of the ordered-index Sylvester (Dodgson condensation)
/// identity, in cross-multiplied denominator-free form:
///   A[a;b] A['a';'b'] - A[a';b'] A['a;'b] + A[a';'b] A['a;b'].
/// Identically zero for every square matrix; |a| = |b| >= 2 required.
/// The determinant of an empty index pair is taken as 1.
Rational sylvester_residual(const ExactMatrix& m, const OrderedIndexList& alpha,
                            const OrderedIndexList& beta);

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

/// Text format: first line n, then n rows of n whitespace-separated
/// rationals ("p", "p/q" or decimal).
ExactMatrix parse_matrix(std::string_view text);
ExactMatrix read_matrix(std::istream& in);
std::string format_matrix(const ExactMatrix& m);

}  // namespace treetp

#endif
