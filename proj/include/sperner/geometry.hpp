#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sperner/rational.hpp"

// Exact geometry on the unit simplex: points whose coordinates are
// nonnegative rationals summing to 1, cells given by vertex ids, and the
// linear algebra for barycentric representation and normalized volume.
//
// Conventions used throughout the library:
//   - coordinate indices and labels are 1-based (the domain counts 1..n),
//   - vertex ids and positions inside a cell are 0-based array indices.

namespace sperner {

using VertexId = std::size_t;

// Point of the unit simplex. On the simplex the ambient coordinates double
// as barycentric weights with respect to the corners e_1..e_n.
class BPoint {
public:
    explicit BPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw std::invalid_argument("BPoint: no coordinates");
        Rational sum = 0;
        for (const Rational& c : coords_) {
            if (c < 0) throw std::invalid_argument("BPoint: negative coordinate");
            sum += c;
        }
        if (sum != 1) throw std::invalid_argument("BPoint: coordinates must sum to 1");
    }

    static BPoint basis(std::size_t n, int i) {
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw std::invalid_argument("BPoint::basis: index out of range");
        std::vector<Rational> c(n, Rational(0));
        c[static_cast<std::size_t>(i - 1)] = 1;
        return BPoint(std::move(c));
    }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t k) const { return coords_[k]; }
    const std::vector<Rational>& coords() const { return coords_; }

    friend bool operator==(const BPoint& a, const BPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const BPoint& a, const BPoint& b) { return !(a == b); }
    friend bool operator<(const BPoint& a, const BPoint& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Rational> coords_;
};

// Cell of a subdivision: a sorted set of exactly n vertex ids. Sorting is
// the canonical form; duplicates are rejected.
class Cell {
public:
    explicit Cell(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw std::invalid_argument("Cell: no vertices");
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw std::invalid_argument("Cell: duplicate vertex id");
    }

    std::size_t size() const { return vertices_.size(); }
    VertexId operator[](std::size_t pos) const { return vertices_[pos]; }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    friend bool operator==(const Cell& a, const Cell& b) { return a.vertices_ == b.vertices_; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) { return a.vertices_ < b.vertices_; }

private:
    std::vector<VertexId> vertices_;
};

// Weights of a point with respect to a cell's vertices, aligned with the
// cell's (ascending id) vertex order. Weights always sum to 1; they are all
// nonnegative exactly when the point lies inside the cell.
class BarycentricCoords {
public:
    explicit BarycentricCoords(std::vector<Rational> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) throw std::invalid_argument("BarycentricCoords: empty");
        Rational sum = 0;
        for (const Rational& w : weights_) sum += w;
        if (sum != 1) throw std::invalid_argument("BarycentricCoords: weights must sum to 1");
    }

    std::size_t size() const { return weights_.size(); }
    const Rational& operator[](std::size_t pos) const { return weights_[pos]; }
    const std::vector<Rational>& weights() const { return weights_; }

    friend bool operator==(const BarycentricCoords& a, const BarycentricCoords& b) {
        return a.weights_ == b.weights_;
    }

private:
    std::vector<Rational> weights_;
};

// Indices (1-based) of the strictly positive coordinates. Never empty.
inline std::vector<int> support(const BPoint& x) {
    std::vector<int> out;
    for (std::size_t k = 0; k < x.dim(); ++k)
        if (x[k] > 0) out.push_back(static_cast<int>(k) + 1);
    return out;
}

namespace detail {

using Matrix = std::vector<std::vector<Rational>>;

inline void require_same_dimension(const std::vector<BPoint>& points) {
    for (const BPoint& p : points)
        if (p.dim() != points.front().dim())
            throw std::invalid_argument("dimension mismatch among points");
}

// Determinant by plain Gaussian elimination; exact since entries are rational.
inline Rational determinant(Matrix m) {
    const std::size_t k = m.size();
    Rational result = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t c = col; c < k; ++c) m[row][c] -= factor * m[col][c];
        }
    }
    return result;
}

inline std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t row = r + 1; row < rows; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[row][c] -= factor * m[r][c];
        }
        ++r;
    }
    return r;
}

// Solves the square system (columns = cell points) * lambda = x.
// Returns nothing when the matrix is singular.
inline std::optional<std::vector<Rational>> solve_square(const std::vector<BPoint>& columns,
                                                         const BPoint& x) {
    const std::size_t n = x.dim();
    Matrix aug(n, std::vector<Rational>(n + 1));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) aug[row][col] = columns[col][row];
        aug[row][n] = x[row];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(aug[pivot], aug[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            const Rational factor = aug[row][col] / aug[col][col];
            for (std::size_t c = col; c <= n; ++c) aug[row][c] -= factor * aug[col][c];
        }
    }
    std::vector<Rational> solution(n);
    for (std::size_t row = 0; row < n; ++row) solution[row] = aug[row][n] / aug[row][row];
    return solution;
}

}  // namespace detail

// True iff no nontrivial zero-sum combination of the points vanishes. For
// points of the simplex the coordinates already sum to 1, so this reduces to
// plain linear independence of the coordinate vectors.
inline bool affinely_independent(const std::vector<BPoint>& points) {
    if (points.empty()) throw std::invalid_argument("affinely_independent: no points");
    detail::require_same_dimension(points);
    const std::size_t n = points.front().dim(), k = points.size();
    detail::Matrix m(n, std::vector<Rational>(k));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < k; ++col) m[row][col] = points[col][row];
    return detail::rank(std::move(m)) == k;
}

// Unique weights representing x over an affinely independent cell, or
// nothing when the affine solution has a negative weight (x outside).
inline std::optional<BarycentricCoords> solve_barycentric(const std::vector<BPoint>& cell_points,
                                                          const BPoint& x) {
    if (cell_points.empty()) throw std::invalid_argument("solve_barycentric: no cell points");
    detail::require_same_dimension(cell_points);
    const std::size_t n = cell_points.front().dim();
    if (x.dim() != n) throw std::invalid_argument("solve_barycentric: dimension mismatch");
    if (cell_points.size() != n)
        throw std::invalid_argument("solve_barycentric: cell must have n vertices");
    auto solution = detail::solve_square(cell_points, x);
    if (!solution) throw std::invalid_argument("solve_barycentric: dependent cell points");
    for (const Rational& w : *solution)
        if (w < 0) return std::nullopt;
    // Row sums of the system force the weights to sum to 1 exactly.
    return BarycentricCoords(std::move(*solution));
}

// |det| of the n x n matrix whose columns are the points; 1 for the unit
// simplex itself, 0 iff the points are affinely dependent.
inline Rational normalized_volume(const std::vector<BPoint>& cell_points) {
    if (cell_points.empty()) throw std::invalid_argument("normalized_volume: no points");
    detail::require_same_dimension(cell_points);
    const std::size_t n = cell_points.front().dim();
    if (cell_points.size() != n)
        throw std::invalid_argument("normalized_volume: need exactly n points");
    detail::Matrix m(n, std::vector<Rational>(n));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col) m[row][col] = cell_points[col][row];
    Rational d = detail::determinant(std::move(m));
    return d < 0 ? -d : d;
}

inline BPoint barycenter(const std::vector<BPoint>& points) {
    if (points.empty()) throw std::invalid_argument("barycenter: no points");
    detail::require_same_dimension(points);
    std::vector<Rational> sum(points.front().dim(), Rational(0));
    for (const BPoint& p : points)
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += p[k];
    const Rational count(static_cast<long long>(points.size()));
    for (Rational& c : sum) c /= count;
    return BPoint(std::move(sum));
}

}  // namespace sperner
