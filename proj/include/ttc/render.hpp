// SVG diagrams of theta(p,q,r): the fundamental-domain square with the usual
// edge identifications, and a window of the universal cover with lattice
// gridlines. Geometry comes from the exact-rational cover walk; squares,
// cells and crossing points are computed with rational arithmetic and only
// the final pixel coordinates are rounded. Identical inputs produce byte
// identical SVG.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "ttc/constituents.hpp"
#include "ttc/errors.hpp"
#include "ttc/oracle.hpp"

namespace ttc {

struct PixelPoint {
    Int x = 0;
    Int y = 0;

    friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
};

struct PixelSegment {
    PixelPoint a;
    PixelPoint b;

    friend bool operator==(const PixelSegment&, const PixelSegment&) = default;
};

struct SvgDiagram {
    Int width = 0;
    Int height = 0;
    std::vector<PixelSegment> grid; // square frame or cover gridlines
    std::vector<PixelSegment> e1;
    std::vector<PixelSegment> e2;
    std::vector<PixelSegment> e3;
    PixelPoint v1;
    PixelPoint v2;

    std::string svg() const;
};

namespace render_detail {

struct RatPoint {
    Rational x;
    Rational y;
};

inline BigInt rfloor(const Rational& v) {
    const BigInt n = boost::multiprecision::numerator(v);
    const BigInt d = boost::multiprecision::denominator(v); // always positive
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

inline BigInt rceil(const Rational& v) {
    return -rfloor(-v);
}

/// Nearest-integer pixel coordinate of an exact value scaled by `scale`.
inline Int to_px(const Rational& v, Int scale) {
    const Rational scaled = v * scale + Rational(1, 2);
    return detail::narrow(rfloor(scaled), "pixel coordinate");
}

/// Split segment AB at every interior crossing of an integer vertical or
/// horizontal lattice line, returning the pieces in order from A to B.
inline std::vector<std::pair<RatPoint, RatPoint>> split_at_lattice(const RatPoint& a,
                                                                   const RatPoint& b) {
    std::vector<Rational> ts{Rational(0), Rational(1)};
    const Rational dx = b.x - a.x;
    const Rational dy = b.y - a.y;
    if (dx != 0) {
        const BigInt lo = rfloor(std::min(a.x, b.x));
        const BigInt hi = rceil(std::max(a.x, b.x));
        for (BigInt X = lo; X <= hi; ++X) {
            const Rational t = (Rational(X) - a.x) / dx;
            if (t > 0 && t < 1) ts.push_back(t);
        }
    }
    if (dy != 0) {
        const BigInt lo = rfloor(std::min(a.y, b.y));
        const BigInt hi = rceil(std::max(a.y, b.y));
        for (BigInt Y = lo; Y <= hi; ++Y) {
            const Rational t = (Rational(Y) - a.y) / dy;
            if (t > 0 && t < 1) ts.push_back(t);
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<std::pair<RatPoint, RatPoint>> pieces;
    const auto at = [&](const Rational& t) {
        return RatPoint{a.x + t * dx, a.y + t * dy};
    };
    for (size_t i = 0; i + 1 < ts.size(); ++i)
        pieces.push_back({at(ts[i]), at(ts[i + 1])});
    return pieces;
}

// Fixed plot constants. No styling knobs in v1.
inline constexpr Int kSquareSide = 440;
inline constexpr Int kSquareMargin = 30;
inline constexpr Int kCoverCell = 90;
inline constexpr Int kCoverMargin = 40;

} // namespace render_detail

/// theta(p,q,r) drawn in the unit-square fundamental domain of T. Each edge
/// is clipped at the lattice crossings, every piece is translated into the
/// square, and piece counts are preserved in the diagram structure (the knot
/// contributes p + q - 1 pieces across e1 and e2).
inline SvgDiagram render_square(const ThetaPQR& t) {
    using namespace render_detail;
    const CoverWalk walk = cover_walk(t.p(), t.q(), t.r());

    SvgDiagram d;
    d.width = kSquareSide + 2 * kSquareMargin;
    d.height = kSquareSide + 2 * kSquareMargin;

    const auto px = [&](const Rational& x) { return kSquareMargin + to_px(x, kSquareSide); };
    const auto py = [&](const Rational& y) {
        return kSquareMargin + to_px(Rational(1) - y, kSquareSide);
    };

    const auto emit = [&](const CoverPath& path, std::vector<PixelSegment>& out) {
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            const RatPoint a{path[i].x, path[i].y};
            const RatPoint b{path[i + 1].x, path[i + 1].y};
            for (const auto& [pa, pb] : split_at_lattice(a, b)) {
                // Cell of the piece, read off its midpoint; translating by
                // the cell corner lands the piece inside the unit square.
                const Rational mx = (pa.x + pb.x) / 2;
                const Rational my = (pa.y + pb.y) / 2;
                const Rational cx(rfloor(mx));
                const Rational cy(rfloor(my));
                out.push_back({{px(pa.x - cx), py(pa.y - cy)},
                               {px(pb.x - cx), py(pb.y - cy)}});
            }
        }
    };
    emit(walk.e1, d.e1);
    emit(walk.e2, d.e2);
    emit(walk.e3, d.e3);

    const Int left = px(Rational(0)), right = px(Rational(1));
    const Int top = py(Rational(1)), bottom = py(Rational(0));
    d.grid = {{{left, top}, {right, top}},
              {{right, top}, {right, bottom}},
              {{right, bottom}, {left, bottom}},
              {{left, bottom}, {left, top}}};

    d.v1 = {left, bottom};
    d.v2 = {left, py(Rational(1, t.p()))};
    return d;
}

/// theta(p,q,r) drawn in the universal cover: lattice gridlines over the
/// bounding box of the three edge lifts, with the lifts as straight
/// segments.
inline SvgDiagram render_cover(const ThetaPQR& t) {
    using namespace render_detail;
    const CoverWalk walk = cover_walk(t.p(), t.q(), t.r());

    BigInt xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    for (const CoverPath* path : {&walk.e1, &walk.e2, &walk.e3}) {
        for (const CoverPoint& pt : *path) {
            xmin = std::min(xmin, rfloor(pt.x));
            xmax = std::max(xmax, rceil(pt.x));
            ymin = std::min(ymin, rfloor(pt.y));
            ymax = std::max(ymax, rceil(pt.y));
        }
    }

    SvgDiagram d;
    const Int cols = detail::narrow(xmax - xmin, "cover width");
    const Int rows = detail::narrow(ymax - ymin, "cover height");
    d.width = checked_add(checked_mul(cols, kCoverCell), 2 * kCoverMargin);
    d.height = checked_add(checked_mul(rows, kCoverCell), 2 * kCoverMargin);

    const Rational x0(xmin), y1(ymax);
    const auto px = [&](const Rational& x) { return kCoverMargin + to_px(x - x0, kCoverCell); };
    const auto py = [&](const Rational& y) { return kCoverMargin + to_px(y1 - y, kCoverCell); };

    for (BigInt X = xmin; X <= xmax; ++X)
        d.grid.push_back({{px(Rational(X)), py(Rational(ymax))},
                          {px(Rational(X)), py(Rational(ymin))}});
    for (BigInt Y = ymin; Y <= ymax; ++Y)
        d.grid.push_back({{px(Rational(xmin)), py(Rational(Y))},
                          {px(Rational(xmax)), py(Rational(Y))}});

    const auto emit = [&](const CoverPath& path, std::vector<PixelSegment>& out) {
        for (size_t i = 0; i + 1 < path.size(); ++i)
            out.push_back({{px(path[i].x), py(path[i].y)},
                           {px(path[i + 1].x), py(path[i + 1].y)}});
    };
    emit(walk.e1, d.e1);
    emit(walk.e2, d.e2);
    emit(walk.e3, d.e3);

    d.v1 = {px(Rational(0)), py(Rational(0))};
    d.v2 = {px(Rational(0)), py(Rational(1, t.p()))};
    return d;
}

inline std::string SvgDiagram::svg() const {
    std::string s;
    const auto num = [](Int v) { return std::to_string(v); };
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
         "\">\n";
    s += "<defs>\n";
    const std::array<std::pair<const char*, const char*>, 3> markers{
        {{"arrow-e1", "#1f77b4"}, {"arrow-e2", "#2ca02c"}, {"arrow-e3", "#d62728"}}};
    for (const auto& [id, color] : markers) {
        s += std::string("<marker id=\"") + id +
             "\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" markerWidth=\"6\" "
             "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" +
             color + "\"/></marker>\n";
    }
    s += "</defs>\n";

    const auto line = [&](const PixelSegment& seg, const std::string& stroke, Int width_px,
                          const std::string& extra) {
        s += "<line x1=\"" + num(seg.a.x) + "\" y1=\"" + num(seg.a.y) + "\" x2=\"" +
             num(seg.b.x) + "\" y2=\"" + num(seg.b.y) + "\" stroke=\"" + stroke +
             "\" stroke-width=\"" + num(width_px) + "\"" + extra + "/>\n";
    };

    for (const auto& g : grid) line(g, "#c8c8c8", 1, "");
    const std::array<std::pair<const std::vector<PixelSegment>*, const char*>, 3> edges{
        {{&e1, "e1"}, {&e2, "e2"}, {&e3, "e3"}}};
    const std::array<const char*, 3> colors{"#1f77b4", "#2ca02c", "#d62728"};
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& segs = *edges[i].first;
        for (size_t k = 0; k < segs.size(); ++k) {
            const bool last = (k + 1 == segs.size());
            const std::string marker =
                last ? std::string(" marker-end=\"url(#arrow-") + edges[i].second + ")\"" : "";
            line(segs[k], colors[i], 3, marker);
        }
    }

    const auto vertex = [&](const PixelPoint& pt, const std::string& label) {
        s += "<circle cx=\"" + num(pt.x) + "\" cy=\"" + num(pt.y) +
             "\" r=\"5\" fill=\"#000000\"/>\n";
        s += "<text x=\"" + num(pt.x + 9) + "\" y=\"" + num(pt.y - 9) +
             "\" font-family=\"monospace\" font-size=\"16\" fill=\"#000000\">" + label +
             "</text>\n";
    };
    vertex(v1, "v1");
    vertex(v2, "v2");
    s += "</svg>\n";
    return s;
}

inline void write_svg(const SvgDiagram& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    const std::string body = d.svg();
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out)
        throw IoError("failed writing " + path);
}

/// Render and write in one step, as the CLI does.
inline SvgDiagram render_square(const ThetaPQR& t, const std::string& out_path) {
    const SvgDiagram d = render_square(t);
    write_svg(d, out_path);
    return d;
}

inline SvgDiagram render_cover(const ThetaPQR& t, const std::string& out_path) {
    const SvgDiagram d = render_cover(t);
    write_svg(d, out_path);
    return d;
}

} // namespace ttc
