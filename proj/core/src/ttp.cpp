#include "treetp/ttp.hpp"

#include <algorithm>
#include <stdexcept>

namespace treetp {

namespace {

void require_dims(const ExactMatrix& a, const LabelledTree& t) {
    if (a.dim() != t.vertex_count())
        throw std::invalid_argument("matrix dimension " + std::to_string(a.dim()) +
                                    " does not match tree on " +
                                    std::to_string(t.vertex_count()) + " vertices");
}

// Cofactor-side adjoint entry: adj(a)_{rc} = (-1)^{r+c} det(a with row c,
// column r deleted). 1-based.
Rational adjoint_entry(const ExactMatrix& a, int r, int c) {
    const int n = a.dim();
    const auto rows = OrderedIndexList::complement(n, {c});
    const auto cols = OrderedIndexList::complement(n, {r});
    Rational d = minor_det(a, rows, cols);
    return ((r + c) % 2 == 0) ? d : -d;
}

}  // namespace

VerdictReport is_ttp(const ExactMatrix& a, const LabelledTree& t) {
    require_dims(a, t);
    const int n = a.dim();

    VerdictReport report;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ++report.minors_checked;
            if (sign(a(i, j)) <= 0) {
                report.pass = false;
                report.witness = MinorWitness{{i + 1},
                                              {j + 1},
                                              a(i, j),
                                              {},
                                              "non-positive entry"};
                return report;
            }
        }

    for (const auto& path : t.enumerate_paths()) {
        const ExactMatrix sub = a.principal_submatrix(path);
        VerdictReport inner = is_tp(sub);
        report.minors_checked += inner.minors_checked;
        if (!inner.pass) {
            report.pass = false;
            auto& w = *inner.witness;
            // Translate witness labels back into the ambient matrix.
            std::vector<int> rows, cols;
            for (int r : w.rows) rows.push_back(path[static_cast<std::size_t>(r) - 1]);
            for (int c : w.cols) cols.push_back(path[static_cast<std::size_t>(c) - 1]);
            report.witness = MinorWitness{std::move(rows), std::move(cols),
                                          std::move(w.value), path.indices(),
                                          "non-positive minor in path submatrix"};
            return report;
        }
    }
    return report;
}

HypothesisReport check_hypotheses(const ExactMatrix& a, const LabelledTree& t) {
    require_dims(a, t);
    if (a.dim() < 2) throw std::invalid_argument("check_hypotheses: need n >= 2");

    HypothesisReport report;
    report.ttp = is_ttp(a, t);
    report.det_value = det(a);
    report.det_positive = sign(report.det_value) > 0;

    bool pendants_ok = true;
    for (int p : t.pendant_vertices()) {
        VerdictReport v = is_p_matrix(a.delete_vertex(p));
        pendants_ok = pendants_ok && v.pass;
        report.pendant_reports.emplace(p, std::move(v));
    }
    report.all_hold = report.ttp.pass && report.det_positive && pendants_ok;
    return report;
}

Rational lemma22_residual(const ExactMatrix& a, int i, int j, int k) {
    const int n = a.dim();
    if (n < 3) throw std::invalid_argument("lemma22_residual: need n >= 3");
    if (i == j || i == k || j == k)
        throw std::invalid_argument("lemma22_residual: indices must be distinct");
    for (int v : {i, j, k})
        if (v < 1 || v > n) throw std::out_of_range("lemma22_residual: index out of range");

    const auto aleph = OrderedIndexList::complement(n, {i, j, k});
    auto with_front = [&](int front) {
        std::vector<int> labels{front};
        labels.insert(labels.end(), aleph.begin(), aleph.end());
        return OrderedIndexList(std::move(labels));
    };
    const auto i_aleph = with_front(i);
    const auto j_aleph = with_front(j);
    const auto k_aleph = with_front(k);

    return minor_det(a, i_aleph, i_aleph) * adjoint_entry(a, k, i) +
           minor_det(a, j_aleph, i_aleph) * adjoint_entry(a, k, j) +
           minor_det(a, k_aleph, i_aleph) * adjoint_entry(a, k, k);
}

SignPatternReport adjoint_sign_check(const ExactMatrix& a, const LabelledTree& t) {
    require_dims(a, t);
    const int n = a.dim();
    if (n < 2) throw std::invalid_argument("adjoint_sign_check: need n >= 2");

    const ExactMatrix adj = adjoint(a);
    const VertexSigning sigma = t.signing();
    const auto pendants = t.pendant_vertices();
    auto is_pendant = [&](int v) {
        return std::find(pendants.begin(), pendants.end(), v) != pendants.end();
    };

    SignPatternReport report;
    report.n = n;
    report.entry_signs.resize(static_cast<std::size_t>(n) * n);
    report.expected.resize(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const std::size_t idx =
                static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1);
            const int actual = sign(adj(i - 1, j - 1));
            const int expected = sigma(i) * sigma(j);
            report.entry_signs[idx] = actual;
            report.expected[idx] = expected;

            auto& cls = is_pendant(i)
                            ? (is_pendant(j) ? report.pendant_pendant : report.pendant_other)
                            : (is_pendant(j) ? report.pendant_other : report.other_other);
            ++cls.checked;
            if (actual != expected) {
                report.mismatches.push_back({i, j, actual, expected});
                if (actual == 0)
                    ++cls.zero;
                else
                    ++cls.wrong_sign;
            }
        }
    return report;
}

VerdictReport equivalence_sigma_conjugation(const ExactMatrix& a, const LabelledTree& t) {
    require_dims(a, t);
    const int n = a.dim();
    if (n < 2) throw std::invalid_argument("equivalence_sigma_conjugation: need n >= 2");

    const ExactMatrix adj = adjoint(a);
    const VertexSigning sigma = t.signing();

    VerdictReport report;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Rational conjugated = adj(i - 1, j - 1) * (sigma(i) * sigma(j));
            ++report.minors_checked;
            if (sign(conjugated) <= 0) {
                report.pass = false;
                report.witness =
                    MinorWitness{{i},
                                 {j},
                                 std::move(conjugated),
                                 {},
                                 "non-positive entry of D adj(A) D"};
                return report;
            }
        }
    return report;
}

}  // namespace treetp
