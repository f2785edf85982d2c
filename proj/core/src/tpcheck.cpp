#include "treetp/tpcheck.hpp"

#include <numeric>
#include <stdexcept>

namespace treetp {

namespace {

std::vector<int> range_labels(int from, int len) {
    std::vector<int> out(static_cast<std::size_t>(len));
    std::iota(out.begin(), out.end(), from);
    return out;
}

// Advances a k-subset of {1..n} in lexicographic order; false when done.
bool next_subset(std::vector<int>& s, int n) {
    const int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++s[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

VerdictReport fail_with(std::vector<int> rows, std::vector<int> cols, Rational value,
                        std::uint64_t checked, const std::string& what) {
    VerdictReport r;
    r.pass = false;
    r.minors_checked = checked;
    r.witness = MinorWitness{std::move(rows), std::move(cols), std::move(value), {}, what};
    return r;
}

}  // namespace

VerdictReport is_tp(const ExactMatrix& m) {
    const int n = m.dim();
    VerdictReport report;
    for (int k = 1; k <= n; ++k)
        for (int r0 = 1; r0 + k - 1 <= n; ++r0)
            for (int c0 = 1; c0 + k - 1 <= n; ++c0) {
                auto rows = range_labels(r0, k);
                auto cols = range_labels(c0, k);
                Rational v =
                    minor_det(m, OrderedIndexList(rows), OrderedIndexList(cols));
                ++report.minors_checked;
                if (sign(v) <= 0)
                    return fail_with(std::move(rows), std::move(cols), std::move(v),
                                     report.minors_checked, "non-positive contiguous minor");
            }
    return report;
}

VerdictReport is_tp_bruteforce(const ExactMatrix& m) {
    const int n = m.dim();
    if (n > 7) throw std::invalid_argument("is_tp_bruteforce: dimension guard (n <= 7)");
    VerdictReport report;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> rows = range_labels(1, k);
        do {
            std::vector<int> cols = range_labels(1, k);
            do {
                Rational v =
                    minor_det(m, OrderedIndexList(rows), OrderedIndexList(cols));
                ++report.minors_checked;
                if (sign(v) <= 0)
                    return fail_with(rows, cols, std::move(v), report.minors_checked,
                                     "non-positive minor");
            } while (next_subset(cols, n));
        } while (next_subset(rows, n));
    }
    return report;
}

VerdictReport is_p_matrix(const ExactMatrix& m) {
    const int n = m.dim();
    if (n > 20) throw std::invalid_argument("is_p_matrix: dimension guard (n <= 20)");
    VerdictReport report;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> s = range_labels(1, k);
        do {
            Rational v = det(m.principal_submatrix(OrderedIndexList(s)));
            ++report.minors_checked;
            if (sign(v) <= 0)
                return fail_with(s, s, std::move(v), report.minors_checked,
                                 "non-positive principal minor");
        } while (next_subset(s, n));
    }
    return report;
}

}  // namespace treetp
