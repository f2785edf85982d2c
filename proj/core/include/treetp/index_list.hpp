#ifndef TREETP_INDEX_LIST_HPP
#define TREETP_INDEX_LIST_HPP

#include <initializer_list>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace treetp {

/// Ordered list of distinct 1-based indices. Order is significant:
/// a list and its permutation select differently ordered submatrices,
/// so the minors they produce can differ in sign.
class OrderedIndexList {
  public:
    OrderedIndexList() = default;
    OrderedIndexList(std::initializer_list<int> init)
        : OrderedIndexList(std::vector<int>(init)) {}
    explicit OrderedIndexList(std::vector<int> indices) : idx_(std::move(indices)) {
        std::unordered_set<int> seen;
        for (int v : idx_) {
            if (v < 1) throw std::invalid_argument("index list: indices must be >= 1");
            if (!seen.insert(v).second)
                throw std::invalid_argument("index list: duplicate index " +
                                            std::to_string(v));
        }
    }

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    int operator[](std::size_t i) const { return idx_[i]; }
    const std::vector<int>& indices() const { return idx_; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    /// 'alpha: list without its first index.
    OrderedIndexList drop_first() const {
        require_nonempty();
        return OrderedIndexList(std::vector<int>(idx_.begin() + 1, idx_.end()));
    }
    /// alpha': list without its last index.
    OrderedIndexList drop_last() const {
        require_nonempty();
        return OrderedIndexList(std::vector<int>(idx_.begin(), idx_.end() - 1));
    }
    /// 'alpha': list without both its first and last index.
    OrderedIndexList drop_both() const {
        if (idx_.size() < 2)
            throw std::invalid_argument("index list: need >= 2 indices to drop both ends");
        return OrderedIndexList(std::vector<int>(idx_.begin() + 1, idx_.end() - 1));
    }

    /// Ascending 1..n with the given labels removed.
    static OrderedIndexList complement(int n, const std::vector<int>& removed) {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) {
            bool drop = false;
            for (int r : removed) drop = drop || (r == v);
            if (!drop) out.push_back(v);
        }
        return OrderedIndexList(std::move(out));
    }

    void check_range(int n) const {
        for (int v : idx_)
            if (v > n)
                throw std::out_of_range("index " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
    }

    bool operator==(const OrderedIndexList& o) const = default;

  private:
    void require_nonempty() const {
        if (idx_.empty()) throw std::invalid_argument("index list: empty");
    }
    std::vector<int> idx_;
};

}  // namespace treetp

#endif
