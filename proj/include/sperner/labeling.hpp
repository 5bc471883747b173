#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sperner/subdivision.hpp"

// Sperner labelings: each vertex carries a label from 1..n chosen among its
// positive coordinates.

namespace sperner {

// Per-vertex labels aligned with the subdivision's vertex table. Plain data;
// validate_labeling decides whether it satisfies the Sperner condition.
struct Labeling {
    std::vector<int> labels;

    int at(VertexId v) const { return labels.at(v); }
    std::size_t size() const { return labels.size(); }
};

inline ValidationReport validate_labeling(const Subdivision& sub, const Labeling& labeling) {
    ValidationReport report{CheckMode::Full, true, {}};
    if (labeling.size() != sub.vertex_count()) {
        report.add("label-missing", {},
                   "labeling covers " + std::to_string(labeling.size()) + " of " +
                       std::to_string(sub.vertex_count()) + " vertices");
        return report;
    }
    for (VertexId v = 0; v < sub.vertex_count(); ++v) {
        const int label = labeling.labels[v];
        if (label < 1 || label > static_cast<int>(sub.n())) {
            report.add("label-out-of-range", {v},
                       "vertex " + std::to_string(v) + " has label " + std::to_string(label));
            continue;
        }
        if (sub.point(v)[static_cast<std::size_t>(label - 1)] <= 0)
            report.add("sperner-violation", {v},
                       "vertex " + std::to_string(v) + " labeled " + std::to_string(label) +
                           " outside its support");
    }
    return report;
}

// Uniform label from each vertex's support, drawn from a fixed-width engine
// so the result is identical across platforms for the same seed.
inline Labeling random_sperner_labeling(const Subdivision& sub, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    Labeling labeling;
    labeling.labels.reserve(sub.vertex_count());
    for (VertexId v = 0; v < sub.vertex_count(); ++v) {
        const std::vector<int> sup = support(sub.point(v));
        labeling.labels.push_back(sup[static_cast<std::size_t>(engine() % sup.size())]);
    }
    return labeling;
}

// Label induced by an exact map f of the simplex to itself: the smallest i
// with v_i > 0 and f(v)_i <= v_i. Such an i exists because both sides sum
// to 1, so f cannot strictly exceed v on all of v's support.
inline Labeling labeling_from_map(const Subdivision& sub,
                                  const std::function<BPoint(const BPoint&)>& f) {
    Labeling labeling;
    labeling.labels.reserve(sub.vertex_count());
    for (VertexId v = 0; v < sub.vertex_count(); ++v) {
        const BPoint& p = sub.point(v);
        const BPoint image = f(p);
        if (image.dim() != sub.n())
            throw std::invalid_argument("labeling_from_map: map output has wrong dimension");
        int chosen = 0;
        for (std::size_t k = 0; k < sub.n(); ++k) {
            if (p[k] > 0 && image[k] <= p[k]) {
                chosen = static_cast<int>(k) + 1;
                break;
            }
        }
        if (chosen == 0)
            throw std::logic_error("labeling_from_map: no admissible label (map off the simplex?)");
        labeling.labels.push_back(chosen);
    }
    return labeling;
}

}  // namespace sperner
