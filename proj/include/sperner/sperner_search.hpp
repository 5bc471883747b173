#pragma once

#include <stdexcept>
#include <vector>

#include "sperner/labeling.hpp"
#include "sperner/subdivision.hpp"

// Completely labeled cells: cells whose n vertices carry all n distinct
// labels.

namespace sperner {

struct CLReport {
    std::vector<Cell> cl_cells;  // canonical (sorted) order

    std::size_t count() const { return cl_cells.size(); }
};

inline bool completely_labeled(const Subdivision& sub, const Labeling& labeling,
                               const Cell& cell) {
    std::vector<char> seen(sub.n(), 0);
    for (VertexId v : cell.vertices()) {
        const int label = labeling.at(v);
        if (label < 1 || label > static_cast<int>(sub.n())) return false;
        if (seen[static_cast<std::size_t>(label - 1)]) return false;
        seen[static_cast<std::size_t>(label - 1)] = 1;
    }
    return true;
}

namespace detail {

inline void require_valid_instance(const Subdivision& sub, const Labeling& labeling) {
    const ValidationReport lr = validate_labeling(sub, labeling);
    if (!lr.passed)
        throw std::invalid_argument("invalid labeling: " + lr.violations.front().detail);
    const ValidationReport sr = validate(sub, CheckMode::Fast);
    if (!sr.passed)
        throw std::invalid_argument("invalid subdivision: " + sr.violations.front().detail);
}

}  // namespace detail

// Linear scan over the cells. A valid instance always has at least one
// completely labeled cell; finding none means the inputs broke an invariant,
// so that case throws instead of returning an empty report.
//
// validate_inputs=false skips re-validation for callers that already hold a
// checked instance (hot loops over many labelings of one subdivision).
inline CLReport find_completely_labeled(const Subdivision& sub, const Labeling& labeling,
                                        bool validate_inputs = true) {
    if (validate_inputs) detail::require_valid_instance(sub, labeling);
    CLReport report;
    for (const Cell& cell : sub.cells())
        if (completely_labeled(sub, labeling, cell)) report.cl_cells.push_back(cell);
    if (report.cl_cells.empty())
        throw std::logic_error(
            "find_completely_labeled: no completely labeled cell on a valid instance");
    return report;
}

}  // namespace sperner
