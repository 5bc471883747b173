#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sperner/kkm_cover.hpp"

// Fixed-point approximation for exact maps of the simplex to itself: refine
// an edgewise subdivision, label each vertex by the map, and take the
// barycenter of the first completely labeled cell at every level.

namespace sperner {

// An exact self-map of the simplex. Outputs are validated on every call by
// BPoint construction (nonnegative rational coordinates summing to 1).
struct MapSpec {
    std::string name;
    std::function<BPoint(const BPoint&)> map;
};

struct FPStep {
    std::size_t resolution = 0;
    BPoint point;
    Rational residual;  // max_i |f(x)_i - x_i|, exact
};

using FPTrace = std::vector<FPStep>;

inline MapSpec identity_map() {
    return {"identity", [](const BPoint& x) { return x; }};
}

// (x_1, ..., x_n) -> (x_n, x_1, ..., x_{n-1}); its only fixed point is the
// centroid.
inline MapSpec rotate_map() {
    return {"rotate", [](const BPoint& x) {
                std::vector<Rational> coords(x.dim());
                coords[0] = x[x.dim() - 1];
                for (std::size_t k = 1; k < x.dim(); ++k) coords[k] = x[k - 1];
                return BPoint(std::move(coords));
            }};
}

inline MapSpec const_e1_map() {
    return {"const-e1", [](const BPoint& x) { return BPoint::basis(x.dim(), 1); }};
}

inline MapSpec builtin_map(const std::string& name) {
    if (name == "identity") return identity_map();
    if (name == "rotate") return rotate_map();
    if (name == "const-e1") return const_e1_map();
    throw std::invalid_argument("unknown map '" + name + "'");
}

inline Rational map_residual(const MapSpec& f, const BPoint& x) {
    const BPoint image = f.map(x);
    if (image.dim() != x.dim())
        throw std::invalid_argument("map_residual: map output has wrong dimension");
    Rational best = 0;
    for (std::size_t k = 0; k < x.dim(); ++k) {
        Rational diff = image[k] - x[k];
        if (diff < 0) diff = -diff;
        if (diff > best) best = diff;
    }
    return best;
}

inline FPTrace approximate_fixed_point(const MapSpec& f, std::size_t n,
                                       const std::vector<std::size_t>& schedule) {
    if (schedule.empty())
        throw std::invalid_argument("approximate_fixed_point: empty schedule");
    for (std::size_t k = 0; k + 1 < schedule.size(); ++k)
        if (schedule[k] >= schedule[k + 1])
            throw std::invalid_argument("approximate_fixed_point: schedule must increase");

    FPTrace trace;
    trace.reserve(schedule.size());
    for (const std::size_t m : schedule) {
        const Subdivision sub = edgewise_subdivision(n, m);
        const Labeling labeling = labeling_from_map(sub, f.map);
        const CLReport cl = find_completely_labeled(sub, labeling);
        BPoint x = barycenter(sub.cell_points(cl.cl_cells.front()));
        Rational residual = map_residual(f, x);
        trace.push_back({m, std::move(x), std::move(residual)});
    }
    return trace;
}

}  // namespace sperner
