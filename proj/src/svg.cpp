#include "projtv/svg.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace projtv {

namespace {

struct Box {
    double lo_x = -1, lo_y = -1, hi_x = 1, hi_y = 1;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << std::fixed << v;
    return os.str();
}

// Chart line {f . (x, y, 1) = 0} clipped against the plot box, if visible.
std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>> clip_line(
    const RatVec& f, const Box& b) {
    const double a = to_double(f[0]), c = to_double(f[1]), off = to_double(f[2]);
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
        for (const auto& h : hits)
            if (std::abs(h.first - x) + std::abs(h.second - y) < 1e-9) return;
        hits.emplace_back(x, y);
    };
    if (std::abs(c) > 1e-12) {
        for (double x : {b.lo_x, b.hi_x}) {
            const double y = -(a * x + off) / c;
            if (y >= b.lo_y - 1e-9 && y <= b.hi_y + 1e-9) push(x, y);
        }
    }
    if (std::abs(a) > 1e-12) {
        for (double y : {b.lo_y, b.hi_y}) {
            const double x = -(c * y + off) / a;
            if (x >= b.lo_x - 1e-9 && x <= b.hi_x + 1e-9) push(x, y);
        }
    }
    if (hits.size() < 2) return std::nullopt;
    return std::make_pair(hits[0], hits[1]);
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

}  // namespace

void render_svg(const PlotData& data, const std::string& path) {
    if (data.x.d != 2) throw std::invalid_argument("render_svg: only d = 2 is plottable");

    Box box;
    bool first = true;
    std::vector<std::optional<RatVec>> charted;
    for (const auto& p : data.x.points) {
        auto a = to_affine(p);
        charted.push_back(a);
        if (!a) continue;
        const double px = to_double((*a)[0]), py = to_double((*a)[1]);
        if (first) {
            box = Box{px, py, px, py};
            first = false;
        } else {
            box.lo_x = std::min(box.lo_x, px);
            box.lo_y = std::min(box.lo_y, py);
            box.hi_x = std::max(box.hi_x, px);
            box.hi_y = std::max(box.hi_y, py);
        }
    }
    const double pad = std::max({1.0, (box.hi_x - box.lo_x) * 0.25, (box.hi_y - box.lo_y) * 0.25});
    box.lo_x -= pad;
    box.lo_y -= pad;
    box.hi_x += pad;
    box.hi_y += pad;

    const double width = 640, height = 640;
    const double sx = width / (box.hi_x - box.lo_x), sy = height / (box.hi_y - box.lo_y);
    auto X = [&](double x) { return (x - box.lo_x) * sx; };
    auto Y = [&](double y) { return height - (y - box.lo_y) * sy; };  // y up

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Boundary circle carrying the points at infinity.
    svg << "  <circle cx=\"" << fmt(width / 2) << "\" cy=\"" << fmt(height / 2) << "\" r=\""
        << fmt(width / 2 - 4) << "\" fill=\"none\" stroke=\"#cccccc\" stroke-dasharray=\"6 4\"/>\n";

    auto draw_subspace = [&](const LinSubspace& s, const char* color, const char* label) {
        if (s.rank() == 1) {
            const ProjPoint p = make_point(s.basis[0]);
            if (auto a = to_affine(p)) {
                svg << "  <g stroke=\"" << color << "\" stroke-width=\"2\">";
                const double cx = X(to_double((*a)[0])), cy = Y(to_double((*a)[1]));
                svg << "<line x1=\"" << fmt(cx - 7) << "\" y1=\"" << fmt(cy) << "\" x2=\""
                    << fmt(cx + 7) << "\" y2=\"" << fmt(cy) << "\"/>";
                svg << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy - 7) << "\" x2=\""
                    << fmt(cx) << "\" y2=\"" << fmt(cy + 7) << "\"/></g>\n";
                svg << "  <text x=\"" << fmt(cx + 9) << "\" y=\"" << fmt(cy - 9) << "\" fill=\""
                    << color << "\" font-size=\"14\">" << label << "</text>\n";
            } else {
                // Point at infinity: mark its direction on the boundary circle.
                const double dx = to_double(p.coords[0]), dy = to_double(p.coords[1]);
                const double len = std::hypot(dx, dy);
                const double cx = width / 2 + (width / 2 - 4) * dx / len;
                const double cy = height / 2 - (height / 2 - 4) * dy / len;
                svg << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
                    << "\" r=\"6\" fill=\"" << color << "\"/>\n";
                svg << "  <text x=\"" << fmt(cx + 8) << "\" y=\"" << fmt(cy) << "\" fill=\""
                    << color << "\" font-size=\"14\">" << label << " (inf)</text>\n";
            }
            return;
        }
        if (s.rank() == 2) {
            // A projective line: in the chart it is {n . (x,y,1) = 0} for the
            // annihilator normal n; the line at infinity has no chart trace.
            const LinSubspace ann = annihilator(s);
            if (ann.rank() != 1) return;
            const RatVec& f = ann.basis[0];
            if (f[0] == 0 && f[1] == 0) {
                svg << "  <text x=\"10\" y=\"20\" fill=\"" << color << "\" font-size=\"14\">"
                    << label << " = line at infinity (boundary circle)</text>\n";
                return;
            }
            if (auto seg = clip_line(f, box)) {
                svg << "  <line x1=\"" << fmt(X(seg->first.first)) << "\" y1=\""
                    << fmt(Y(seg->first.second)) << "\" x2=\"" << fmt(X(seg->second.first))
                    << "\" y2=\"" << fmt(Y(seg->second.second)) << "\" stroke=\"" << color
                    << "\" stroke-width=\"2\"/>\n";
            }
        }
    };

    // Witness pair lines, light gray behind the data.
    for (const auto& pair : data.witness_pairs) {
        for (const RatVec* f : {&pair.f, &pair.g}) {
            if ((*f)[0] == 0 && (*f)[1] == 0) continue;
            if (auto seg = clip_line(*f, box)) {
                svg << "  <line x1=\"" << fmt(X(seg->first.first)) << "\" y1=\""
                    << fmt(Y(seg->first.second)) << "\" x2=\"" << fmt(X(seg->second.first))
                    << "\" y2=\"" << fmt(Y(seg->second.second))
                    << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
            }
        }
    }

    if (data.V) draw_subspace(*data.V, "#d62728", "V");
    if (data.W) draw_subspace(*data.W, "#2ca02c", "W");

    std::map<std::string, size_t> color_ids;
    for (size_t i = 0; i < data.x.points.size(); ++i) {
        const char* fill = "#1f77b4";
        if (data.x.colors) {
            const auto& name = (*data.x.colors)[i];
            auto [it, inserted] = color_ids.emplace(name, color_ids.size());
            fill = kPalette[it->second % 8];
        }
        if (charted[i]) {
            const double cx = X(to_double((*charted[i])[0]));
            const double cy = Y(to_double((*charted[i])[1]));
            svg << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"4\" fill=\""
                << fill << "\"/>\n";
        } else {
            const double dx = to_double(data.x.points[i].coords[0]);
            const double dy = to_double(data.x.points[i].coords[1]);
            const double len = std::hypot(dx, dy);
            svg << "  <circle cx=\"" << fmt(width / 2 + (width / 2 - 4) * dx / len) << "\" cy=\""
                << fmt(height / 2 - (height / 2 - 4) * dy / len) << "\" r=\"4\" fill=\"" << fill
                << "\" stroke=\"black\"/>\n";
        }
    }
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("render_svg: cannot write '" + path + "'");
    out << svg.str();
}

}  // namespace projtv
