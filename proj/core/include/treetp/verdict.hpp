#ifndef TREETP_VERDICT_HPP
#define TREETP_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treetp/rational.hpp"

namespace treetp {

/// Concrete evidence for a failed check: the row/column labels of the
/// offending minor (1-based, in the ambient matrix) and its exact value.
/// For path-local violations `path` records the tree path whose
/// submatrix contained the minor; for entrywise violations rows/cols are
/// singletons.
struct MinorWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    Rational value;
    std::vector<int> path;     // empty unless the violation is path-local
    std::string description;
};

struct VerdictReport {
    bool pass = true;
    std::optional<MinorWitness> witness;
    std::uint64_t minors_checked = 0;
};

}  // namespace treetp

#endif
