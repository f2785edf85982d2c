#include "treetp/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace treetp {

int ExactMatrix::check_dim(int n) {
    if (n < 1) throw std::invalid_argument("matrix: dimension must be >= 1");
    return n;
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(check_dim(static_cast<int>(rows.size()))) {
    e_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("matrix: ragged initializer");
        for (const auto& v : row) e_.push_back(v);
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::submatrix(const OrderedIndexList& rows,
                                   const OrderedIndexList& cols) const {
    if (rows.size() != cols.size())
        throw std::invalid_argument("submatrix: row/column list size mismatch");
    if (rows.empty()) throw std::invalid_argument("submatrix: empty index lists");
    rows.check_range(n_);
    cols.check_range(n_);
    ExactMatrix out(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(static_cast<int>(i), static_cast<int>(j)) =
                (*this)(rows[i] - 1, cols[j] - 1);
    return out;
}

ExactMatrix ExactMatrix::delete_vertex(int label) const {
    if (n_ < 2) throw std::invalid_argument("delete_vertex: dimension must be >= 2");
    if (label < 1 || label > n_) throw std::out_of_range("delete_vertex: label out of range");
    const auto keep = OrderedIndexList::complement(n_, {label});
    return principal_submatrix(keep);
}

Rational ExactMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Rational det(const ExactMatrix& m) {
    const int n = m.dim();
    if (n == 1) return m(0, 0);

    // Clear denominators once, then run integer Bareiss; divisions below
    // are exact by the fraction-free recurrence.
    Integer den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) den = lcm(den, m(i, j).get_den());

    std::vector<Integer> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational scaled = m(i, j) * den;
            a[static_cast<std::size_t>(i) * n + j] = scaled.get_num();
        }

    auto at = [&](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i) * n + j]; };

    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = at(k, k);
    }

    Integer num = sign * at(n - 1, n - 1);
    Integer scale = 1;
    for (int i = 0; i < n; ++i) scale *= den;
    Rational result(num, scale);
    result.canonicalize();
    return result;
}

Rational minor_det(const ExactMatrix& m, const OrderedIndexList& rows,
                   const OrderedIndexList& cols) {
    return det(m.submatrix(rows, cols));
}

ExactMatrix adjoint(const ExactMatrix& m) {
    const int n = m.dim();
    if (n < 2) throw std::invalid_argument("adjoint: dimension must be >= 2");
    ExactMatrix adj(n);
    ExactMatrix sub(n - 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // Minor with row j and column i deleted.
            int r = 0;
            for (int row = 0; row < n; ++row) {
                if (row == j) continue;
                int c = 0;
                for (int col = 0; col < n; ++col) {
                    if (col == i) continue;
                    sub(r, c) = m(row, col);
                    ++c;
                }
                ++r;
            }
            Rational d = det(sub);
            adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    }
    return adj;
}

Rational sylvester_residual(const ExactMatrix& m, const OrderedIndexList& alpha,
                            const OrderedIndexList& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("sylvester_residual: list size mismatch");
    if (alpha.size() < 2)
        throw std::invalid_argument("sylvester_residual: need |alpha| >= 2");
    alpha.check_range(m.dim());
    beta.check_range(m.dim());

    auto mdet = [&](const OrderedIndexList& r, const OrderedIndexList& c) -> Rational {
        if (r.empty()) return 1;
        return minor_det(m, r, c);
    };

    const auto a_last = alpha.drop_last(), b_last = beta.drop_last();
    const auto a_first = alpha.drop_first(), b_first = beta.drop_first();
    const auto a_both = alpha.drop_both(), b_both = beta.drop_both();

    return mdet(alpha, beta) * mdet(a_both, b_both) -
           mdet(a_last, b_last) * mdet(a_first, b_first) +
           mdet(a_last, b_first) * mdet(a_first, b_last);
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
    const int n = a.dim();
    ExactMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s = 0;
            for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            out(i, j) = std::move(s);
        }
    return out;
}

ExactMatrix read_matrix(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("matrix: missing dimension line");
    if (n < 1) throw std::invalid_argument("matrix: dimension must be >= 1");
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("matrix: expected " + std::to_string(n * n) +
                                            " entries");
            m(i, j) = parse_rational(tok);
        }
    return m;
}

ExactMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    ExactMatrix m = read_matrix(in);
    std::string extra;
    if (in >> extra) throw std::invalid_argument("matrix: trailing data '" + extra + "'");
    return m;
}

std::string format_matrix(const ExactMatrix& m) {
    std::ostringstream out;
    out << m.dim() << '\n';
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << to_string(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace treetp
