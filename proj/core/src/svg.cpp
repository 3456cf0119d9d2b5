#include "dimerlab/svg.hpp"

#include <algorithm>
#include <sstream>

namespace dimerlab {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Px {
    Rat x, y;
};

std::string pt(const Rat& v) { return v.decimal(6); }

// All intersection points of the line a*x + b*y = c with the unit square.
std::vector<std::pair<Rat, Rat>> clip_unit_square(long long a, long long b, const Rat& c) {
    std::vector<std::pair<Rat, Rat>> pts;
    auto push = [&](const Rat& x, const Rat& y) {
        if (x < Rat(0) || x > Rat(1) || y < Rat(0) || y > Rat(1)) return;
        for (const auto& p : pts)
            if (p.first == x && p.second == y) return;
        pts.emplace_back(x, y);
    };
    if (b != 0) {
        for (int xi = 0; xi <= 1; ++xi)
            push(Rat(xi), (c - Rat(a * xi)) / Rat(b));
    }
    if (a != 0) {
        for (int yi = 0; yi <= 1; ++yi)
            push((c - Rat(b * yi)) / Rat(a), Rat(yi));
    }
    return pts;
}

}  // namespace

std::string svg_fronts(const StackyFan& fan, const Rat& t, int width_px) {
    const int pad = 20;
    const int side = width_px - 2 * pad;
    auto X = [&](const Rat& x) { return Rat(pad) + x * Rat(side); };
    auto Y = [&](const Rat& y) { return Rat(pad) + (Rat(1) - y) * Rat(side); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\""
        << width_px << "\" viewBox=\"0 0 " << width_px << " " << width_px << "\">\n";
    out << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << side << "\" height=\""
        << side << "\" fill=\"white\" stroke=\"black\"/>\n";

    for (const FrontGeodesic& geo : front_arrangement(fan, t)) {
        const char* color = kPalette[geo.ray % 6];
        long long a = geo.normal.x, b = geo.normal.y;
        // integer k with the line a x + b y = level + k meeting the square
        long long lo = std::min<long long>({0, a, b, a + b});
        long long hi = std::max<long long>({0, a, b, a + b});
        for (long long k = lo - 1; k <= hi + 1; ++k) {
            Rat c = geo.level + Rat(static_cast<long>(k));
            auto pts = clip_unit_square(a, b, c);
            if (pts.size() < 2) continue;
            std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
                if (p.first != q.first) return p.first < q.first;
                return p.second < q.second;
            });
            const auto& p0 = pts.front();
            const auto& p1 = pts.back();
            if (p0 == p1) continue;
            out << "<line x1=\"" << pt(X(p0.first)) << "\" y1=\"" << pt(Y(p0.second))
                << "\" x2=\"" << pt(X(p1.first)) << "\" y2=\"" << pt(Y(p1.second))
                << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
            // co-orientation hairs along -normal, L1-normalized to stay rational
            Rat norm = Rat(std::abs(a) + std::abs(b));
            Rat hx = Rat(-a) / norm * Rat(1, 25);
            Rat hy = Rat(-b) / norm * Rat(1, 25);
            for (int q = 1; q <= 3; ++q) {
                Rat s(q, 4);
                Rat bx = p0.first + s * (p1.first - p0.first);
                Rat by = p0.second + s * (p1.second - p0.second);
                out << "<line x1=\"" << pt(X(bx)) << "\" y1=\"" << pt(Y(by)) << "\" x2=\""
                    << pt(X(bx + hx)) << "\" y2=\"" << pt(Y(by + hy)) << "\" stroke=\"" << color
                    << "\" stroke-width=\"1\"/>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_polygon(const std::vector<Vec2>& polygon, int width_px) {
    long long xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    for (Vec2 v : polygon) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    --xmin; ++xmax; --ymin; ++ymax;
    const int pad = 20;
    const long long span = std::max(xmax - xmin, ymax - ymin);
    const Rat unit = Rat(width_px - 2 * pad) / Rat(static_cast<long>(span));
    auto X = [&](const Rat& x) { return Rat(pad) + (x - Rat(static_cast<long>(xmin))) * unit; };
    auto Y = [&](const Rat& y) {
        return Rat(pad) + (Rat(static_cast<long>(ymax)) - y) * unit;
    };

    std::ostringstream out;
    const int height = width_px;  // square canvas
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width_px << " " << height << "\">\n";
    for (long long x = xmin; x <= xmax; ++x)
        for (long long y = ymin; y <= ymax; ++y)
            out << "<circle cx=\"" << pt(X(Rat(static_cast<long>(x)))) << "\" cy=\""
                << pt(Y(Rat(static_cast<long>(y)))) << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
    if (!polygon.empty()) {
        out << "<polygon points=\"";
        for (std::size_t i = 0; i < polygon.size(); ++i) {
            if (i) out << " ";
            out << pt(X(Rat(static_cast<long>(polygon[i].x)))) << ","
                << pt(Y(Rat(static_cast<long>(polygon[i].y))));
        }
        out << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
        for (Vec2 v : polygon)
            out << "<circle cx=\"" << pt(X(Rat(static_cast<long>(v.x)))) << "\" cy=\""
                << pt(Y(Rat(static_cast<long>(v.y)))) << "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace dimerlab
