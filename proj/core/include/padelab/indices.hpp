#ifndef PADELAB_INDICES_HPP
#define PADELAB_INDICES_HPP

#include <utility>
#include <variant>
#include <vector>

#include "padelab/errors.hpp"

namespace padelab {

/// Families of (p, q) orders indexed by n = 1, 2, ...: the diagonal (n, n),
/// a fixed row (n, q), a fixed column (p, n), or an explicit finite list.
struct DiagonalRule {};
struct RowRule {
    int q = 0;
};
struct ColumnRule {
    int p = 0;
};
struct ExplicitRule {
    std::vector<std::pair<int, int>> pairs;
};

class IndexFamily {
public:
    using Rule = std::variant<DiagonalRule, RowRule, ColumnRule, ExplicitRule>;

    explicit IndexFamily(Rule rule);

    /// The n-th pair, n starting at 1. Throws past the end of a finite list.
    std::pair<int, int> at(int n) const;

    /// Number of pairs, or nullopt-style -1 for the unbounded rules.
    int size() const;
    bool is_finite() const;
    const Rule& rule() const { return rule_; }

private:
    Rule rule_;
};

struct IndexConstraints {
    int p_min = -1; ///< require p > p_min
    int q_min = -1; ///< require q > q_min
};

/// First pair in enumeration order with p > p_min and q > q_min. Finite
/// families throw IndexSetExhausted when nothing qualifies; unbounded rules
/// that cannot ever qualify (a fixed row or column below the constraint)
/// are detected and rejected the same way.
std::pair<int, int> pick_indices(const IndexFamily& family, const IndexConstraints& constraints);

} // namespace padelab

#endif
