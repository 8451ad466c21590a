#include "padelab/indices.hpp"

namespace padelab {

IndexFamily::IndexFamily(Rule rule) : rule_(std::move(rule)) {
    if (const auto* row = std::get_if<RowRule>(&rule_)) {
        if (row->q < 0) throw ArgumentError("row index must be nonnegative");
    } else if (const auto* col = std::get_if<ColumnRule>(&rule_)) {
        if (col->p < 0) throw ArgumentError("column index must be nonnegative");
    } else if (const auto* ex = std::get_if<ExplicitRule>(&rule_)) {
        if (ex->pairs.empty()) throw ArgumentError("explicit index family must be nonempty");
        for (auto [p, q] : ex->pairs)
            if (p < 0 || q < 0) throw ArgumentError("index pairs must be nonnegative");
    }
}

std::pair<int, int> IndexFamily::at(int n) const {
    if (n < 1) throw ArgumentError("index family positions start at 1");
    if (std::holds_alternative<DiagonalRule>(rule_)) return {n, n};
    if (const auto* row = std::get_if<RowRule>(&rule_)) return {n, row->q};
    if (const auto* col = std::get_if<ColumnRule>(&rule_)) return {col->p, n};
    const auto& pairs = std::get<ExplicitRule>(rule_).pairs;
    if (n > static_cast<int>(pairs.size()))
        throw IndexSetExhausted("explicit index family has no position " + std::to_string(n));
    return pairs[static_cast<std::size_t>(n - 1)];
}

int IndexFamily::size() const {
    if (const auto* ex = std::get_if<ExplicitRule>(&rule_))
        return static_cast<int>(ex->pairs.size());
    return -1;
}

bool IndexFamily::is_finite() const { return std::holds_alternative<ExplicitRule>(rule_); }

std::pair<int, int> pick_indices(const IndexFamily& family, const IndexConstraints& constraints) {
    if (const auto* row = std::get_if<RowRule>(&family.rule())) {
        if (row->q <= constraints.q_min)
            throw IndexSetExhausted("row family never exceeds the q constraint");
    }
    if (const auto* col = std::get_if<ColumnRule>(&family.rule())) {
        if (col->p <= constraints.p_min)
            throw IndexSetExhausted("column family never exceeds the p constraint");
    }
    const int limit = family.is_finite() ? family.size()
                                         : std::max({constraints.p_min, constraints.q_min, 0}) + 2;
    for (int n = 1; n <= limit; ++n) {
        auto [p, q] = family.at(n);
        if (p > constraints.p_min && q > constraints.q_min) return {p, q};
    }
    throw IndexSetExhausted("no admissible pair in the index family");
}

} // namespace padelab
