#ifndef TREETP_CHARPOLY_HPP
#define TREETP_CHARPOLY_HPP

#include <optional>
#include <vector>

#include "treetp/exact_matrix.hpp"
#include "treetp/rational.hpp"

namespace treetp {

/// Univariate polynomial over the rationals, coefficients ascending
/// (c[k] multiplies x^k). Supports just enough structure for exact real
/// root isolation: Euclidean division, Sturm chains, bisection.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& coefficient(int k) const { return c_[static_cast<std::size_t>(k)]; }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    /// Remainder of *this by d (rational long division).
    Polynomial remainder(const Polynomial& d) const;

    /// this / gcd(this, this'): same roots, all simple.
    Polynomial squarefree_part() const;

    /// Cauchy bound: all real roots lie in (-B, B).
    Rational root_bound() const;

    /// Number of distinct real roots in the half-open interval (lo, hi]
    /// via a Sturm chain of the squarefree part.
    int count_real_roots(const Rational& lo, const Rational& hi) const;
    int count_real_roots() const;

    /// Distinct real roots, ascending, each bracketed to an interval of
    /// width <= tol by dyadic bisection; returns interval midpoints.
    std::vector<Rational> real_roots(const Rational& tol) const;

    std::optional<Rational> smallest_real_root(const Rational& tol) const;
    std::optional<Rational> largest_real_root(const Rational& tol) const;

  private:
    std::vector<Rational> c_;
};

/// Exact characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
/// recurrence; monic of degree n, constant term (-1)^n det(A).
Polynomial char_poly(const ExactMatrix& a);

}  // namespace treetp

#endif
