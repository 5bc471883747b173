#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sperner/sperner_search.hpp"

// Cover sets built from a labeled subdivision: a point belongs to the i-th
// set when some cell represents it with weight at least 1/n on an i-labeled
// vertex. The sets cover every face spanned by basis vectors e_j, j in J,
// using only the sets with indices in J, and any point of their common
// intersection exposes a completely labeled cell.

namespace sperner {

// Within one cell, the positions (0-based, in the cell's vertex order) of
// the vertices carrying the piece's label. The region of the piece is the
// set of weight vectors giving >= threshold to one of those positions.
struct CoverPiece {
    std::size_t cell_index = 0;  // index into the subdivision's canonical cell list
    Cell cell;
    std::vector<std::size_t> positions;

    friend bool operator==(const CoverPiece& a, const CoverPiece& b) {
        return a.cell_index == b.cell_index && a.cell == b.cell && a.positions == b.positions;
    }
};

struct KKMCover {
    std::size_t n = 0;
    Rational threshold;                         // 1/n as built
    std::vector<std::vector<CoverPiece>> pieces;  // pieces[i-1] for label i, cell order
};

// Evidence that a point lies in the cover set of `label`: a cell containing
// the point whose weight on an i-labeled vertex clears the threshold.
struct Witness {
    int label = 0;
    Cell cell;
    VertexId vertex = 0;
    Rational weight;
    BarycentricCoords coords;  // the queried point's full weight vector in `cell`
};

// Nonempty subset J of {1..n}; denotes the face spanned by {e_j : j in J}.
class FaceIndexSet {
public:
    FaceIndexSet(std::vector<int> indices, std::size_t n) : indices_(std::move(indices)) {
        if (indices_.empty()) throw std::invalid_argument("FaceIndexSet: empty index set");
        std::sort(indices_.begin(), indices_.end());
        indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
        if (indices_.front() < 1 || indices_.back() > static_cast<int>(n))
            throw std::invalid_argument("FaceIndexSet: index out of range");
    }

    const std::vector<int>& indices() const { return indices_; }

private:
    std::vector<int> indices_;
};

class NotInIntersectionError : public std::runtime_error {
public:
    explicit NotInIntersectionError(int label)
        : std::runtime_error("point is not in cover set " + std::to_string(label)),
          label_(label) {}

    int label() const { return label_; }

private:
    int label_;
};

inline KKMCover build_cover(const Subdivision& sub, const Labeling& labeling) {
    detail::require_valid_instance(sub, labeling);
    const std::size_t n = sub.n();
    KKMCover cover;
    cover.n = n;
    cover.threshold = Rational(1) / Rational(static_cast<long long>(n));
    cover.pieces.resize(n);
    for (std::size_t c = 0; c < sub.cell_count(); ++c) {
        const Cell& cell = sub.cells()[c];
        std::vector<std::vector<std::size_t>> positions_by_label(n);
        for (std::size_t p = 0; p < cell.size(); ++p)
            positions_by_label[static_cast<std::size_t>(labeling.at(cell[p]) - 1)].push_back(p);
        for (std::size_t i = 0; i < n; ++i)
            if (!positions_by_label[i].empty())
                cover.pieces[i].push_back({c, cell, std::move(positions_by_label[i])});
    }
    return cover;
}

// Membership query with witness. Pieces are scanned in canonical cell order
// and positions in ascending order, so the reported witness is the
// lexicographically smallest (cell, vertex) that qualifies.
inline std::optional<Witness> member(const KKMCover& cover, const Subdivision& sub, int label,
                                     const BPoint& x) {
    if (label < 1 || label > static_cast<int>(cover.n))
        throw std::out_of_range("member: label out of range");
    if (x.dim() != sub.n() || cover.n != sub.n())
        throw std::invalid_argument("member: dimension mismatch");
    for (const CoverPiece& piece : cover.pieces[static_cast<std::size_t>(label - 1)]) {
        if (piece.cell_index >= sub.cell_count() ||
            sub.cells()[piece.cell_index] != piece.cell)
            throw std::invalid_argument("member: cover does not match subdivision");
        if (!sub.bbox_contains(piece.cell_index, x)) continue;
        const auto coords = solve_barycentric(sub.cell_points(piece.cell), x);
        if (!coords) continue;
        for (std::size_t p : piece.positions) {
            if ((*coords)[p] >= cover.threshold)
                return Witness{label, piece.cell, piece.cell[p], (*coords)[p], *coords};
        }
    }
    return std::nullopt;
}

// Checks the premises under which the covering property holds for every
// nonempty J at once: the labeling satisfies the Sperner condition, the
// subdivision passes full validation, and the cover is exactly what
// build_cover produces from this instance (threshold 1/n included).
inline ValidationReport verify_covering_certificate(const KKMCover& cover, const Subdivision& sub,
                                                    const Labeling& labeling) {
    ValidationReport report{CheckMode::Full, true, {}};

    const ValidationReport lr = validate_labeling(sub, labeling);
    for (const Violation& v : lr.violations)
        report.add("premise-labeling: " + v.kind, v.ids, v.detail);

    const ValidationReport sr = validate(sub, CheckMode::Full);
    for (const Violation& v : sr.violations)
        report.add("premise-subdivision: " + v.kind, v.ids, v.detail);

    if (cover.n != sub.n() || cover.pieces.size() != cover.n) {
        report.add("cover-mismatch", {}, "cover shape does not fit the instance");
        return report;
    }
    // a label with no pieces makes its set empty; it cannot survive the
    // premises (a certified instance labels every corner), but is reported
    // on sight
    for (std::size_t i = 0; i < cover.pieces.size(); ++i)
        if (cover.pieces[i].empty())
            report.add("empty-cover-set", {i + 1},
                       "no cell carries label " + std::to_string(i + 1));

    if (!lr.passed || !sr.passed) return report;

    const KKMCover rebuilt = build_cover(sub, labeling);
    if (cover.threshold != rebuilt.threshold)
        report.add("cover-mismatch", {},
                   "threshold is " + to_string(cover.threshold) + ", expected " +
                       to_string(rebuilt.threshold));
    if (cover.pieces != rebuilt.pieces)
        report.add("cover-mismatch", {}, "pieces differ from build_cover output");
    return report;
}

namespace detail {

template <typename Visit>
inline void for_each_grid_point(const std::vector<int>& indices, std::size_t n,
                                std::size_t denom, const Visit& visit) {
    std::vector<Rational> coords(n, Rational(0));
    const Rational unit = Rational(1) / Rational(static_cast<long long>(denom));
    // Compositions of denom over the index set, first index varying slowest.
    std::vector<std::size_t> parts(indices.size(), 0);
    const auto emit = [&] {
        for (std::size_t k = 0; k < indices.size(); ++k)
            coords[static_cast<std::size_t>(indices[k] - 1)] =
                unit * Rational(static_cast<long long>(parts[k]));
        visit(BPoint(coords));
    };
    const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot,
                                                                  std::size_t remaining) {
        if (slot + 1 == parts.size()) {
            parts[slot] = remaining;
            emit();
            return;
        }
        for (std::size_t take = 0; take <= remaining; ++take) {
            parts[slot] = take;
            rec(slot + 1, remaining - take);
        }
    };
    rec(0, denom);
}

}  // namespace detail

// Empirical cross-check of the certificate: enumerates every point of the
// face of J whose coordinates are multiples of 1/denom and reports any point
// that no cover set with index in J accepts.
inline ValidationReport verify_covering_sampled(const KKMCover& cover, const Subdivision& sub,
                                                const FaceIndexSet& J, std::size_t denom) {
    if (denom < 1) throw std::invalid_argument("verify_covering_sampled: denom must be >= 1");
    ValidationReport report{CheckMode::Full, true, {}};
    detail::for_each_grid_point(J.indices(), sub.n(), denom, [&](const BPoint& x) {
        for (int j : J.indices())
            if (member(cover, sub, j, x)) return;
        std::string coords;
        for (std::size_t k = 0; k < x.dim(); ++k)
            coords += (k ? "," : "(") + to_string(x[k]);
        report.add("uncovered-point", {}, coords + ") lies in no C_j with j in J");
    });
    return report;
}

struct KKMIntersection {
    BPoint point;
    std::vector<Witness> witnesses;  // one per label 1..n
};

// Constructive point of the intersection of all n cover sets: the barycenter
// of the canonically first completely labeled cell, which puts weight
// exactly 1/n on one vertex of every label.
inline KKMIntersection intersection_point(const Subdivision& sub, const Labeling& labeling) {
    const CLReport cl = find_completely_labeled(sub, labeling);
    const Cell& first = cl.cl_cells.front();
    BPoint x = barycenter(sub.cell_points(first));
    const KKMCover cover = build_cover(sub, labeling);
    std::vector<Witness> witnesses;
    witnesses.reserve(sub.n());
    for (int i = 1; i <= static_cast<int>(sub.n()); ++i) {
        auto w = member(cover, sub, i, x);
        if (!w)
            throw std::logic_error(
                "intersection_point: barycenter of a completely labeled cell left a cover set");
        witnesses.push_back(std::move(*w));
    }
    return {std::move(x), std::move(witnesses)};
}

// Recovers a completely labeled cell from any point of the intersection of
// all cover sets: the label-1 witness cell necessarily contains a witness
// vertex of every other label, because the point's weight on a vertex is
// positive only if that vertex belongs to every cell containing the point.
inline Cell extract_cl_simplex(const KKMCover& cover, const Subdivision& sub,
                               const Labeling& labeling, const BPoint& x) {
    std::vector<Witness> witnesses;
    for (int i = 1; i <= static_cast<int>(sub.n()); ++i) {
        auto w = member(cover, sub, i, x);
        if (!w) throw NotInIntersectionError(i);
        witnesses.push_back(std::move(*w));
    }
    const Cell& cell = witnesses.front().cell;
    if (!completely_labeled(sub, labeling, cell))
        throw std::logic_error("extract_cl_simplex: witness cell is not completely labeled");
    return cell;
}

struct NaiveFlag {
    VertexId vertex = 0;
    // For each label 1..n, one incident cell carrying that label.
    std::vector<std::size_t> witness_cells;
};

struct NaiveCoverReport {
    std::vector<NaiveFlag> flagged;
};

// The naive construction takes D_i = union of the cells containing an
// i-labeled vertex, with no weight threshold. This reports the subdivision
// vertices lying in every D_i yet in no completely labeled cell; each such
// vertex is a counterexample to the naive construction. A subdivision vertex
// lies in a cell of a valid subdivision exactly when it is one of its
// vertices, so the scan is combinatorial.
inline NaiveCoverReport naive_cover_check(const Subdivision& sub, const Labeling& labeling) {
    detail::require_valid_instance(sub, labeling);
    const std::size_t n = sub.n();
    const CLReport cl = find_completely_labeled(sub, labeling, false);

    std::vector<std::vector<std::size_t>> incident(sub.vertex_count());
    for (std::size_t c = 0; c < sub.cell_count(); ++c)
        for (VertexId v : sub.cells()[c].vertices()) incident[v].push_back(c);

    NaiveCoverReport report;
    for (VertexId v = 0; v < sub.vertex_count(); ++v) {
        std::vector<std::size_t> witness_cells(n, sub.cell_count());
        bool in_cl_cell = false;
        for (std::size_t c : incident[v]) {
            const Cell& cell = sub.cells()[c];
            if (std::binary_search(cl.cl_cells.begin(), cl.cl_cells.end(), cell))
                in_cl_cell = true;
            for (VertexId w : cell.vertices()) {
                auto& slot = witness_cells[static_cast<std::size_t>(labeling.at(w) - 1)];
                slot = std::min(slot, c);
            }
        }
        const bool in_all = std::all_of(witness_cells.begin(), witness_cells.end(),
                                        [&](std::size_t c) { return c < sub.cell_count(); });
        if (in_all && !in_cl_cell) report.flagged.push_back({v, std::move(witness_cells)});
    }
    return report;
}

}  // namespace sperner
