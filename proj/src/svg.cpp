#include "topskit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace topskit {

namespace {

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const GraphIFS& g, const ComponentHulls& hulls,
                       const std::optional<UpsilonRegion>& region, std::string_view title)
{
    constexpr double width = 800, margin = 60, row = 90, top = 50;
    double lo = hulls.hull[0].lo.approx(), hi = hulls.hull[0].hi.approx();
    for (const auto& h : hulls.hull) {
        lo = std::min(lo, h.lo.approx());
        hi = std::max(hi, h.hi.approx());
    }
    if (hi - lo < 1e-12)
        hi = lo + 1;
    auto x_of = [&](const ExactReal& v) {
        return margin + (v.approx() - lo) / (hi - lo) * (width - 2 * margin);
    };
    const double height = top + row * static_cast<double>(g.vertex_count()) + 40;

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << fmt(height)
      << "\" font-family=\"monospace\" font-size=\"11\">\n";
    s << "<text x=\"" << margin << "\" y=\"20\" font-size=\"14\">" << escape(title) << "</text>\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const double y = top + row * static_cast<double>(v);
        const Interval& h = hulls.hull[v];
        s << "<text x=\"4\" y=\"" << fmt(y + 4) << "\">" << escape(g.vertex_names()[v]) << "</text>\n";
        s << "<line x1=\"" << fmt(x_of(h.lo)) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x_of(h.hi))
          << "\" y2=\"" << fmt(y) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
        s << "<text x=\"" << fmt(x_of(h.lo)) << "\" y=\"" << fmt(y - 8) << "\">" << escape(h.lo.to_string())
          << "</text>\n";
        s << "<text x=\"" << fmt(x_of(h.hi)) << "\" y=\"" << fmt(y - 8) << "\" text-anchor=\"end\">"
          << escape(h.hi.to_string()) << "</text>\n";
        std::size_t k = 0;
        for (Label l : g.edges_from(v)) {
            const Edge& e = g.edge(l);
            Interval img = e.map.image(hulls.hull[e.target]);
            const double yy = y + 14 + 12 * static_cast<double>(k++ % 4);
            s << "<line x1=\"" << fmt(x_of(img.lo)) << "\" y1=\"" << fmt(yy) << "\" x2=\"" << fmt(x_of(img.hi))
              << "\" y2=\"" << fmt(yy) << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
            s << "<text x=\"" << fmt(x_of(img.hi) + 3) << "\" y=\"" << fmt(yy + 4) << "\">f" << l << "</text>\n";
        }
        if (region) {
            for (const auto& piece : region->region[v].intervals()) {
                const double x0 = x_of(piece.lo), x1 = std::max(x_of(piece.hi), x0 + 2);
                s << "<rect x=\"" << fmt(x0 - (piece.degenerate() ? 1 : 0)) << "\" y=\"" << fmt(y - 6)
                  << "\" width=\"" << fmt(x1 - x0) << "\" height=\"12\" fill=\"crimson\" opacity=\"0.5\"/>\n";
            }
        }
    }
    s << "<text x=\"" << margin << "\" y=\"" << fmt(height - 10)
      << "\" fill=\"gray\">positions are decimal approximations of exact values";
    if (region)
        s << "; red marks the region for n = " << region->n;
    s << "</text>\n</svg>\n";
    return s.str();
}

} // namespace topskit
