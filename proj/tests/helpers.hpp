#pragma once

#include <random>
#include <string>
#include <vector>

#include "sperner/kkm_cover.hpp"

// Shared test utilities. The oracles here stay independent of the library
// code paths they check: determinants by cofactor expansion, completely
// labeled cells by a per-label counting scan.

namespace helpers {

using namespace sperner;

inline Rational rq(const std::string& text) { return parse_rational(text); }

inline BPoint pt(const std::vector<std::string>& coords) {
    std::vector<Rational> c;
    c.reserve(coords.size());
    for (const auto& s : coords) c.push_back(parse_rational(s));
    return BPoint(std::move(c));
}

// 3x3 determinant by direct cofactor expansion (columns = points).
inline Rational det3(const BPoint& a, const BPoint& b, const BPoint& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
           c[0] * (a[1] * b[2] - a[2] * b[1]);
}

// Random point on the 1/denom grid of the simplex.
inline BPoint random_grid_point(std::size_t n, std::size_t denom, std::mt19937_64& rng) {
    std::vector<std::size_t> parts(n, 0);
    std::size_t remaining = denom;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        parts[k] = rng() % (remaining + 1);
        remaining -= parts[k];
    }
    parts[n - 1] = remaining;
    std::vector<Rational> coords(n);
    for (std::size_t k = 0; k < n; ++k)
        coords[k] = Rational(static_cast<long long>(parts[k])) /
                    Rational(static_cast<long long>(denom));
    return BPoint(std::move(coords));
}

// Independent recount of completely labeled cells: per label, count the
// cell's vertices carrying it; complete means every count is exactly one.
inline std::vector<Cell> brute_force_cl(const Subdivision& sub, const Labeling& labeling) {
    std::vector<Cell> out;
    for (const Cell& cell : sub.cells()) {
        bool complete = true;
        for (int label = 1; label <= static_cast<int>(sub.n()) && complete; ++label) {
            std::size_t count = 0;
            for (VertexId v : cell.vertices())
                if (labeling.at(v) == label) ++count;
            complete = (count == 1);
        }
        if (complete) out.push_back(cell);
    }
    return out;
}

}  // namespace helpers
