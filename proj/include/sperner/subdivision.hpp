#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sperner/geometry.hpp"
#include "sperner/lp.hpp"
#include "sperner/report.hpp"

// Simplicial subdivisions of the unit simplex: construction (edgewise and
// barycentric generators), exact validation, and point location.

namespace sperner {

// Vertex table plus canonical cell list. Construction enforces the
// structural invariants that later code relies on (dense ids, no duplicate
// points, per-cell arity); the geometric invariants (volume partition, face
// condition) are checked by validate() and reported, not thrown.
class Subdivision {
public:
    Subdivision(std::size_t n, std::vector<BPoint> vertices, std::vector<Cell> cells)
        : n_(n), vertices_(std::move(vertices)), cells_(std::move(cells)) {
        if (n_ < 1) throw std::invalid_argument("Subdivision: dimension must be >= 1");
        if (vertices_.empty()) throw std::invalid_argument("Subdivision: no vertices");
        std::map<std::vector<Rational>, VertexId> seen;
        for (VertexId v = 0; v < vertices_.size(); ++v) {
            if (vertices_[v].dim() != n_)
                throw std::invalid_argument("Subdivision: vertex dimension mismatch");
            if (!seen.emplace(vertices_[v].coords(), v).second)
                throw std::invalid_argument("Subdivision: duplicate vertex point");
        }
        for (const Cell& cell : cells_) {
            if (cell.size() != n_)
                throw std::invalid_argument("Subdivision: cell must have exactly n vertices");
            if (cell.vertices().back() >= vertices_.size())
                throw std::invalid_argument("Subdivision: cell references unknown vertex");
        }
        std::sort(cells_.begin(), cells_.end());
        compute_bboxes();
    }

    std::size_t n() const { return n_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t cell_count() const { return cells_.size(); }
    const std::vector<BPoint>& vertices() const { return vertices_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const BPoint& point(VertexId v) const { return vertices_.at(v); }

    std::vector<BPoint> cell_points(const Cell& cell) const {
        std::vector<BPoint> pts;
        pts.reserve(cell.size());
        for (VertexId v : cell.vertices()) pts.push_back(point(v));
        return pts;
    }

    // Coordinate-box rejection test; cheap relative to an exact solve.
    bool bbox_contains(std::size_t cell_index, const BPoint& x) const {
        const auto& lo = bbox_min_[cell_index];
        const auto& hi = bbox_max_[cell_index];
        for (std::size_t k = 0; k < n_; ++k)
            if (x[k] < lo[k] || x[k] > hi[k]) return false;
        return true;
    }

    bool bboxes_disjoint(std::size_t a, std::size_t b) const {
        for (std::size_t k = 0; k < n_; ++k)
            if (bbox_max_[a][k] < bbox_min_[b][k] || bbox_max_[b][k] < bbox_min_[a][k])
                return true;
        return false;
    }

private:
    void compute_bboxes() {
        bbox_min_.clear();
        bbox_max_.clear();
        bbox_min_.reserve(cells_.size());
        bbox_max_.reserve(cells_.size());
        for (const Cell& cell : cells_) {
            std::vector<Rational> lo(vertices_[cell[0]].coords());
            std::vector<Rational> hi = lo;
            for (std::size_t p = 1; p < cell.size(); ++p) {
                const BPoint& pt = vertices_[cell[p]];
                for (std::size_t k = 0; k < n_; ++k) {
                    if (pt[k] < lo[k]) lo[k] = pt[k];
                    if (pt[k] > hi[k]) hi[k] = pt[k];
                }
            }
            bbox_min_.push_back(std::move(lo));
            bbox_max_.push_back(std::move(hi));
        }
    }

    std::size_t n_;
    std::vector<BPoint> vertices_;
    std::vector<Cell> cells_;
    std::vector<std::vector<Rational>> bbox_min_;
    std::vector<std::vector<Rational>> bbox_max_;
};

namespace detail {

// Staircase chart for the edgewise scheme. A point x of the simplex maps to
// the integer vector y with y_j = m * (x_{j+1} + ... + x_n), which satisfies
// m >= y_1 >= ... >= y_{n-1} >= 0 on the 1/m grid; the inverse is below.
inline BPoint staircase_to_point(const std::vector<long long>& y, std::size_t n, long long m) {
    std::vector<Rational> coords(n);
    const Rational denom{static_cast<long long>(m)};
    if (n == 1) {
        coords[0] = 1;
        return BPoint(std::move(coords));
    }
    coords[0] = Rational(m - y[0]) / denom;
    for (std::size_t j = 1; j + 1 < n; ++j) coords[j] = Rational(y[j - 1] - y[j]) / denom;
    coords[n - 1] = Rational(y[n - 2]) / denom;
    return BPoint(std::move(coords));
}

inline bool staircase_in_range(const std::vector<long long>& y, long long m) {
    if (y.empty()) return true;
    if (y.front() > m || y.back() < 0) return false;
    for (std::size_t j = 0; j + 1 < y.size(); ++j)
        if (y[j] < y[j + 1]) return false;
    return true;
}

struct VertexInterner {
    std::map<std::vector<Rational>, std::size_t> ids;

    std::size_t intern(const BPoint& p) {
        return ids.emplace(p.coords(), ids.size()).first->second;
    }

    // Reassigns ids in ascending coordinate order and returns the table.
    std::pair<std::vector<BPoint>, std::vector<VertexId>> freeze() const {
        std::vector<BPoint> table;
        table.reserve(ids.size());
        std::vector<VertexId> remap(ids.size());
        std::size_t next = 0;
        for (const auto& [coords, old_id] : ids) {
            remap[old_id] = next++;
            table.push_back(BPoint(coords));
        }
        return {std::move(table), std::move(remap)};
    }
};

}  // namespace detail

// Edgewise (Kuhn-type) subdivision at resolution m: vertices are exactly the
// points of the simplex whose coordinates are multiples of 1/m, and the
// m^(n-1) cells are the staircase-chart images of the Freudenthal simplices
// z, z+u_{pi(1)}, z+u_{pi(1)}+u_{pi(2)}, ... that fit inside the ordered
// region m >= y_1 >= ... >= y_{n-1} >= 0.
inline Subdivision edgewise_subdivision(std::size_t n, std::size_t m) {
    if (n < 1) throw std::invalid_argument("edgewise_subdivision: dimension must be >= 1");
    if (m < 1) throw std::invalid_argument("edgewise_subdivision: resolution must be >= 1");
    if (n == 1) {
        std::vector<BPoint> vertices{BPoint({Rational(1)})};
        return Subdivision(1, std::move(vertices), {Cell({0})});
    }
    const std::size_t d = n - 1;
    const long long mm = static_cast<long long>(m);

    detail::VertexInterner interner;
    std::vector<std::vector<std::size_t>> raw_cells;

    std::vector<long long> base(d, 0);
    std::vector<std::size_t> perm(d);
    for (;;) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do {
            std::vector<std::vector<long long>> chain{base};
            for (std::size_t step = 0; step < d; ++step) {
                chain.push_back(chain.back());
                ++chain.back()[perm[step]];
            }
            const bool inside = std::all_of(chain.begin(), chain.end(), [&](const auto& y) {
                return detail::staircase_in_range(y, mm);
            });
            if (!inside) continue;
            std::vector<std::size_t> cell_ids;
            cell_ids.reserve(n);
            for (const auto& y : chain)
                cell_ids.push_back(interner.intern(detail::staircase_to_point(y, n, mm)));
            raw_cells.push_back(std::move(cell_ids));
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::size_t k = 0;
        while (k < d && base[k] == mm - 1) {
            base[k] = 0;
            ++k;
        }
        if (k == d) break;
        ++base[k];
    }

    auto [table, remap] = interner.freeze();
    std::vector<Cell> cells;
    cells.reserve(raw_cells.size());
    for (const auto& raw : raw_cells) {
        std::vector<VertexId> ids;
        ids.reserve(raw.size());
        for (std::size_t old_id : raw) ids.push_back(remap[old_id]);
        cells.push_back(Cell(std::move(ids)));
    }
    return Subdivision(n, std::move(table), std::move(cells));
}

inline ValidationReport validate(const Subdivision& sub, CheckMode mode);

// Barycentric refinement: each cell is replaced by the n! cells spanned by
// the barycenters of its vertex-chain faces. Barycenters of shared faces
// coincide exactly, so the refined complex glues along the old faces.
inline Subdivision barycentric_refine(const Subdivision& sub) {
    if (!validate(sub, CheckMode::Fast).passed)
        throw std::invalid_argument("barycentric_refine: invalid input subdivision");
    const std::size_t n = sub.n();
    if (n == 1) return sub;

    detail::VertexInterner interner;
    std::vector<std::vector<std::size_t>> raw_cells;

    for (const Cell& cell : sub.cells()) {
        const std::vector<BPoint> corners = sub.cell_points(cell);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do {
            std::vector<std::size_t> ids;
            ids.reserve(n);
            std::vector<Rational> acc(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) {
                const BPoint& p = corners[perm[k]];
                for (std::size_t c = 0; c < n; ++c) acc[c] += p[c];
                std::vector<Rational> coords(acc);
                const Rational count{static_cast<long long>(k + 1)};
                for (Rational& v : coords) v /= count;
                ids.push_back(interner.intern(BPoint(std::move(coords))));
            }
            raw_cells.push_back(std::move(ids));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    auto [table, remap] = interner.freeze();
    std::vector<Cell> cells;
    cells.reserve(raw_cells.size());
    for (const auto& raw : raw_cells) {
        std::vector<VertexId> ids;
        ids.reserve(raw.size());
        for (std::size_t old_id : raw) ids.push_back(remap[old_id]);
        cells.push_back(Cell(std::move(ids)));
    }
    return Subdivision(n, std::move(table), std::move(cells));
}

namespace detail {

// Decides whether two cells intersect outside the convex hull of their
// shared vertices. Variables are the two weight vectors (lambda, mu); the
// equations say both combinations describe the same point of the simplex,
// and the objective is the total lambda-weight off the shared vertices.
// The face condition fails exactly when the maximum is positive.
inline bool face_condition_violated(const Subdivision& sub, const Cell& a, const Cell& b) {
    const std::size_t n = sub.n();
    const auto pa = sub.cell_points(a);
    const auto pb = sub.cell_points(b);

    std::vector<std::vector<Rational>> eq(n + 1, std::vector<Rational>(2 * n, Rational(0)));
    std::vector<Rational> rhs(n + 1, Rational(0));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t i = 0; i < n; ++i) {
            eq[row][i] = pa[i][row];
            eq[row][n + i] = -pb[i][row];
        }
    }
    for (std::size_t i = 0; i < n; ++i) eq[n][i] = 1;
    rhs[n] = 1;

    std::vector<Rational> objective(2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = a[i];
        const bool shared =
            std::binary_search(b.vertices().begin(), b.vertices().end(), v);
        if (!shared) objective[i] = 1;
    }

    const LpResult r = maximize_linear(eq, rhs, objective);
    return r.feasible && r.value > 0;
}

}  // namespace detail

// Fast mode re-checks the per-cell facts (arity, id range, affine
// independence, duplicate cells) and the exact volume partition. Full mode
// additionally decides, for every pair of cells, that their intersection is
// the convex hull of their shared vertices.
inline ValidationReport validate(const Subdivision& sub, CheckMode mode) {
    ValidationReport report{mode, true, {}};
    const std::size_t n = sub.n();

    for (int i = 1; i <= static_cast<int>(n); ++i) {
        const BPoint corner = BPoint::basis(n, i);
        const auto& vs = sub.vertices();
        if (std::find(vs.begin(), vs.end(), corner) == vs.end())
            report.add("missing-corner", {static_cast<std::size_t>(i - 1)},
                       "basis vector e_" + std::to_string(i) + " not in vertex table");
    }

    Rational total_volume = 0;
    for (std::size_t c = 0; c < sub.cell_count(); ++c) {
        const Cell& cell = sub.cells()[c];
        bool in_range = true;
        for (VertexId v : cell.vertices())
            if (v >= sub.vertex_count()) in_range = false;
        if (cell.size() != n || !in_range) {
            report.add("invalid-cell", {c}, "cell is not n sorted vertex ids of the table");
            continue;
        }
        const Rational vol = normalized_volume(sub.cell_points(cell));
        if (vol == 0)
            report.add("dependent-cell", {c}, "cell vertices are affinely dependent");
        total_volume += vol;
        if (c + 1 < sub.cell_count() && sub.cells()[c + 1] == cell)
            report.add("duplicate-cell", {c, c + 1}, "identical cells");
    }
    if (total_volume != 1)
        report.add("volume-sum", {},
                   "cell volumes sum to " + to_string(total_volume) + ", expected 1/1");

    if (mode == CheckMode::Full && report.passed) {
        for (std::size_t i = 0; i < sub.cell_count(); ++i) {
            for (std::size_t j = i + 1; j < sub.cell_count(); ++j) {
                if (sub.bboxes_disjoint(i, j)) continue;
                if (detail::face_condition_violated(sub, sub.cells()[i], sub.cells()[j]))
                    report.add("face-condition", {i, j},
                               "cells intersect outside their shared face");
            }
        }
    }
    return report;
}

struct Location {
    Cell cell;
    std::size_t cell_index;
    BarycentricCoords coords;
};

// All cells containing x, with x's exact weights in each; a point on a
// shared face shows up once per incident cell.
inline std::vector<Location> locate(const Subdivision& sub, const BPoint& x) {
    if (x.dim() != sub.n()) throw std::invalid_argument("locate: dimension mismatch");
    std::vector<Location> found;
    for (std::size_t c = 0; c < sub.cell_count(); ++c) {
        if (!sub.bbox_contains(c, x)) continue;
        auto coords = solve_barycentric(sub.cell_points(sub.cells()[c]), x);
        if (coords) found.push_back({sub.cells()[c], c, std::move(*coords)});
    }
    return found;
}

}  // namespace sperner
