#pragma once

#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sperner/kkm_cover.hpp"

// Deterministic SVG rendering of three-coordinate instances: subdivision
// edges, per-vertex labels, shaded completely labeled cells, and optionally
// the pieces of one cover set. Geometry stays rational until device
// coordinates are emitted with fixed six-decimal formatting.

namespace sperner {

struct SvgOptions {
    double side = 480.0;    // triangle edge length in device units
    double margin = 20.0;
    int overlay_label = 0;  // 0 = no cover overlay, otherwise a label 1..3
};

namespace detail {

struct DevicePoint {
    double x = 0, y = 0;
};

inline std::string fmt(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

class TriangleChart {
public:
    explicit TriangleChart(const SvgOptions& opt)
        : side_(opt.side), margin_(opt.margin), height_(opt.side * 0.8660254037844386) {}

    double width() const { return side_ + 2 * margin_; }
    double height() const { return height_ + 2 * margin_; }

    DevicePoint operator()(const BPoint& p) const {
        // corners: e1 bottom-left (origin), e2 bottom-right, e3 top-middle
        const double x2 = p[1].convert_to<double>();
        const double x3 = p[2].convert_to<double>();
        const double ux = x2 * side_ + x3 * side_ / 2;
        const double uy = x3 * height_;
        return {margin_ + ux, margin_ + height_ - uy};
    }

private:
    double side_, margin_, height_;
};

inline std::string polygon_element(const TriangleChart& chart, const std::vector<BPoint>& pts) {
    std::string points;
    for (const BPoint& p : pts) {
        const DevicePoint d = chart(p);
        if (!points.empty()) points += ' ';
        points += fmt(d.x) + "," + fmt(d.y);
    }
    return "<polygon points=\"" + points + "\"/>\n";
}

}  // namespace detail

inline std::string render_svg(const Subdivision& sub, const Labeling* labeling,
                              const SvgOptions& options = {}) {
    if (sub.n() != 3)
        throw std::invalid_argument("render_svg: only three-coordinate instances are supported");
    if (options.overlay_label != 0 && !labeling)
        throw std::invalid_argument("render_svg: overlay requires a labeling");
    if (labeling && !validate_labeling(sub, *labeling).passed)
        throw std::invalid_argument("render_svg: invalid labeling");

    const detail::TriangleChart chart(options);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(chart.width()) +
           "\" height=\"" + detail::fmt(chart.height()) + "\" viewBox=\"0 0 " +
           detail::fmt(chart.width()) + " " + detail::fmt(chart.height()) + "\">\n";

    if (labeling) {
        const CLReport cl = find_completely_labeled(sub, *labeling, false);
        svg += "<g fill=\"#d3d3d3\" stroke=\"none\">\n";
        for (const Cell& cell : cl.cl_cells)
            svg += detail::polygon_element(chart, sub.cell_points(cell));
        svg += "</g>\n";
    }

    if (options.overlay_label != 0) {
        const KKMCover cover = build_cover(sub, *labeling);
        if (options.overlay_label < 1 || options.overlay_label > 3)
            throw std::invalid_argument("render_svg: overlay label out of range");
        svg += "<g fill=\"#ccccff\" fill-opacity=\"0.5\" stroke=\"#2222cc\" stroke-width=\"1\">\n";
        const Rational third = cover.threshold;
        for (const CoverPiece& piece :
             cover.pieces[static_cast<std::size_t>(options.overlay_label - 1)]) {
            const std::vector<BPoint> corners = sub.cell_points(piece.cell);
            for (std::size_t p : piece.positions) {
                // {lambda_p >= 1/3} inside the cell: the corner p plus the two
                // edge points where lambda_p = 1/3, all exact.
                std::vector<BPoint> polygon{corners[p]};
                for (std::size_t q = 0; q < corners.size(); ++q) {
                    if (q == p) continue;
                    std::vector<Rational> cut(3);
                    for (std::size_t k = 0; k < 3; ++k)
                        cut[k] = third * corners[p][k] + (1 - third) * corners[q][k];
                    polygon.push_back(BPoint(std::move(cut)));
                }
                svg += detail::polygon_element(chart, polygon);
            }
        }
        svg += "</g>\n";
    }

    std::set<std::pair<VertexId, VertexId>> edges;
    for (const Cell& cell : sub.cells())
        for (std::size_t i = 0; i < cell.size(); ++i)
            for (std::size_t j = i + 1; j < cell.size(); ++j)
                edges.insert({cell[i], cell[j]});
    svg += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
    for (const auto& [a, b] : edges) {
        const detail::DevicePoint da = chart(sub.point(a));
        const detail::DevicePoint db = chart(sub.point(b));
        svg += "<line x1=\"" + detail::fmt(da.x) + "\" y1=\"" + detail::fmt(da.y) + "\" x2=\"" +
               detail::fmt(db.x) + "\" y2=\"" + detail::fmt(db.y) + "\"/>\n";
    }
    svg += "</g>\n";

    svg += "<g stroke=\"#000000\" stroke-width=\"2\" fill=\"none\">\n";
    svg += detail::polygon_element(
        chart, {BPoint::basis(3, 1), BPoint::basis(3, 2), BPoint::basis(3, 3)});
    svg += "</g>\n";

    if (labeling) {
        svg += "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"#000000\">\n";
        for (VertexId v = 0; v < sub.vertex_count(); ++v) {
            const detail::DevicePoint d = chart(sub.point(v));
            svg += "<text x=\"" + detail::fmt(d.x + 5.0) + "\" y=\"" + detail::fmt(d.y - 5.0) +
                   "\">" + std::to_string(labeling->labels[v]) + "</text>\n";
        }
        svg += "</g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace sperner
