#include "topskit/gifs.hpp"

#include "topskit/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace topskit {

// ---------------------------------------------------------------- intervals

std::string Interval::to_string() const
{
    return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

std::optional<Interval> intersect(const Interval& a, const Interval& b)
{
    const ExactReal& lo = max(a.lo, b.lo);
    const ExactReal& hi = min(a.hi, b.hi);
    if (hi < lo)
        return std::nullopt;
    return Interval{lo, hi};
}

IntervalSet::IntervalSet(std::vector<Interval> pieces)
{
    for (const auto& p : pieces)
        if (p.hi < p.lo)
            throw ValidationError("interval " + p.to_string() + " has lo > hi");
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (auto& p : pieces) {
        if (!pieces_.empty() && p.lo <= pieces_.back().hi) {
            if (pieces_.back().hi < p.hi)
                pieces_.back().hi = p.hi;
        } else {
            pieces_.push_back(std::move(p));
        }
    }
}

bool IntervalSet::contains(const ExactReal& x) const
{
    return std::any_of(pieces_.begin(), pieces_.end(),
                       [&](const Interval& p) { return p.contains(x); });
}

bool IntervalSet::subset_of(const IntervalSet& other) const
{
    // Pieces of a normalized set are separated by gaps, so each piece of
    // this set must sit inside a single piece of other.
    return std::all_of(pieces_.begin(), pieces_.end(), [&](const Interval& p) {
        return std::any_of(other.pieces_.begin(), other.pieces_.end(),
                           [&](const Interval& q) { return q.contains(p); });
    });
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const
{
    std::vector<Interval> all = pieces_;
    all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const
{
    std::vector<Interval> out;
    for (const auto& p : pieces_)
        for (const auto& q : other.pieces_)
            if (auto r = topskit::intersect(p, q))
                out.push_back(std::move(*r));
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::image(const AffineMap& f) const
{
    std::vector<Interval> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_)
        out.push_back(f.image(p));
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::preimage(const AffineMap& f) const
{
    std::vector<Interval> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_)
        out.push_back(f.preimage(p));
    return IntervalSet(std::move(out));
}

std::string IntervalSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i)
            s += ", ";
        s += pieces_[i].to_string();
    }
    return s + "}";
}

// ---------------------------------------------------------------- AffineMap

AffineMap::AffineMap(ExactReal slope, ExactReal offset)
    : slope_(std::move(slope)), offset_(std::move(offset))
{
}

AffineMap AffineMap::compose(const AffineMap& inner) const
{
    return {slope_ * inner.slope_, slope_ * inner.offset_ + offset_};
}

Interval AffineMap::image(const Interval& i) const
{
    ExactReal a = (*this)(i.lo), b = (*this)(i.hi);
    if (slope_.sign() < 0)
        return {std::move(b), std::move(a)};
    return {std::move(a), std::move(b)};
}

Interval AffineMap::preimage(const Interval& i) const
{
    ExactReal a = inverse(i.lo), b = inverse(i.hi);
    if (slope_.sign() < 0)
        return {std::move(b), std::move(a)};
    return {std::move(a), std::move(b)};
}

ExactReal AffineMap::fixed_point() const
{
    return offset_ / (ExactReal(1L) - slope_);
}

bool AffineMap::is_contraction() const
{
    ExactReal m = slope_.abs();
    return m.sign() > 0 && m < ExactReal(1L);
}

// ---------------------------------------------------------------- GraphIFS

GraphIFS::GraphIFS(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : names_(std::move(vertex_names))
{
    if (names_.empty())
        throw ValidationError("graph IFS needs at least one vertex");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw ValidationError("duplicate vertex name '" + names_[i] + "'");
    if (edges.empty())
        throw ValidationError("graph IFS needs at least one edge");
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.label < b.label; });
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].label != i + 1)
            throw ValidationError("edge labels must be exactly 1.." + std::to_string(edges.size()));
        if (edges[i].source >= names_.size() || edges[i].target >= names_.size())
            throw ValidationError("edge " + std::to_string(edges[i].label) +
                                  " refers to an unknown vertex");
    }
    edges_ = std::move(edges);
    out_.assign(names_.size(), {});
    in_.assign(names_.size(), {});
    for (const auto& e : edges_) {
        out_[e.source].push_back(e.label);
        in_[e.target].push_back(e.label);
    }
}

VertexId GraphIFS::vertex(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw ValidationError("unknown vertex '" + name + "'");
    return static_cast<VertexId>(it - names_.begin());
}

GraphIFS GraphIFS::relabel(const std::vector<Label>& new_labels) const
{
    if (new_labels.size() != edges_.size())
        throw ValidationError("relabelling must assign a label to every edge");
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i)
        edges[i].label = new_labels[i];
    GraphIFS g(names_, std::move(edges));
    g.comment_ = comment_;
    return g;
}

bool is_strongly_connected(const GraphIFS& g)
{
    const std::size_t n = g.vertex_count();
    auto reach_all = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::queue<VertexId> q;
        q.push(0);
        seen[0] = true;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            const auto& adj = forward ? g.edges_from(v) : g.edges_into(v);
            for (Label l : adj) {
                const Edge& e = g.edge(l);
                VertexId w = forward ? e.target : e.source;
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    return reach_all(true) && reach_all(false);
}

std::size_t graph_period(const GraphIFS& g)
{
    // BFS levels; the period is the gcd of level(u) + 1 - level(v) over arcs.
    const std::size_t n = g.vertex_count();
    std::vector<long> level(n, -1);
    std::queue<VertexId> q;
    level[0] = 0;
    q.push(0);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (Label l : g.edges_from(v)) {
            VertexId w = g.edge(l).target;
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                q.push(w);
            }
        }
    }
    long p = 0;
    for (const auto& e : g.edges()) {
        if (level[e.source] < 0 || level[e.target] < 0)
            continue;
        p = std::gcd(p, std::labs(level[e.source] + 1 - level[e.target]));
    }
    return static_cast<std::size_t>(p);
}

ValidationReport validate(const GraphIFS& g)
{
    ValidationReport report;
    bool contractive = true;
    for (const auto& e : g.edges()) {
        if (!e.map.is_contraction()) {
            contractive = false;
            report.violations.push_back("edge " + std::to_string(e.label) +
                                        " is not an invertible contraction (slope " +
                                        e.map.slope().to_string() + ")");
        }
    }
    const bool connected = is_strongly_connected(g);
    if (!connected)
        report.violations.push_back("graph is not strongly connected");
    else if (std::size_t p = graph_period(g); p != 1)
        report.violations.push_back("graph is not primitive (period " + std::to_string(p) + ")");
    if (contractive && connected) {
        try {
            auto hulls = component_hulls(g);
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                for (std::size_t w = v + 1; w < g.vertex_count(); ++w)
                    if (intersect(hulls.hull[v], hulls.hull[w]))
                        report.violations.push_back("component hulls of " + g.vertex_names()[v] +
                                                    " and " + g.vertex_names()[w] +
                                                    " intersect");
        } catch (const Error& ex) {
            report.violations.push_back(std::string("hull computation failed: ") + ex.what());
        }
    }
    return report;
}

bool is_path(const GraphIFS& g, const Word& path)
{
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (path[k] < 1 || path[k] > g.edge_count())
            return false;
        if (k + 1 < path.size() && path[k + 1] >= 1 && path[k + 1] <= g.edge_count() &&
            g.edge(path[k]).target != g.edge(path[k + 1]).source)
            return false;
    }
    return true;
}

AffineMap compose_path(const GraphIFS& g, const Word& path)
{
    if (!is_path(g, path))
        throw ValidationError("'" + path.to_string() + "' is not a path of the graph");
    AffineMap f = AffineMap::identity();
    for (Symbol s : path)
        f = f.compose(g.edge(s).map);
    return f;
}

// ---------------------------------------------------------------- hulls

bool ComponentHulls::all_exact() const
{
    return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

namespace {

// Choice of edge realising lo_v and hi_v.
struct Policy {
    std::vector<Label> lo_edge;
    std::vector<Label> hi_edge;
    friend bool operator==(const Policy&, const Policy&) = default;
};

// Solves lo/hi under a fixed policy: z = M z + c with z = (lo_0, hi_0, ...).
std::vector<ExactReal> solve_policy(const GraphIFS& g, const Policy& pol)
{
    const std::size_t n = 2 * g.vertex_count();
    std::vector<std::vector<ExactReal>> a(n, std::vector<ExactReal>(n + 1));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = ExactReal(1L);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (int side = 0; side < 2; ++side) {
            const Edge& e = g.edge(side == 0 ? pol.lo_edge[v] : pol.hi_edge[v]);
            const bool positive = e.map.slope().sign() > 0;
            // lo takes the target's lo under a positive slope, hi otherwise.
            const bool from_lo = (side == 0) == positive;
            const std::size_t row = 2 * v + static_cast<std::size_t>(side);
            const std::size_t col = 2 * e.target + (from_lo ? 0 : 1);
            a[row][col] -= e.map.slope();
            a[row][n] = e.map.offset();
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero())
            ++piv;
        if (piv == n)
            throw Error("singular hull system");
        std::swap(a[c], a[piv]);
        ExactReal inv = ExactReal(1L) / a[c][c];
        for (std::size_t k = c; k <= n; ++k)
            a[c][k] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero())
                continue;
            ExactReal factor = a[r][c];
            for (std::size_t k = c; k <= n; ++k)
                a[r][k] -= factor * a[c][k];
        }
    }
    std::vector<ExactReal> z(n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = a[i][n];
    return z;
}

std::vector<Interval> to_hulls(const std::vector<ExactReal>& z)
{
    std::vector<Interval> h;
    for (std::size_t v = 0; 2 * v < z.size(); ++v)
        h.push_back({z[2 * v], z[2 * v + 1]});
    return h;
}

// Greedy policy at the given hulls, preferring the incumbent on ties.
Policy best_policy(const GraphIFS& g, const std::vector<Interval>& hulls, const Policy* incumbent)
{
    Policy p;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Label best_lo = 0, best_hi = 0;
        std::optional<Interval> lo_img, hi_img;
        for (Label l : g.edges_from(v)) {
            const Edge& e = g.edge(l);
            Interval img = e.map.image(hulls[e.target]);
            if (!lo_img || img.lo < lo_img->lo ||
                (img.lo == lo_img->lo && incumbent && incumbent->lo_edge[v] == l)) {
                best_lo = l;
                lo_img = img;
            }
            if (!hi_img || img.hi > hi_img->hi ||
                (img.hi == hi_img->hi && incumbent && incumbent->hi_edge[v] == l)) {
                best_hi = l;
                hi_img = img;
            }
        }
        p.lo_edge.push_back(best_lo);
        p.hi_edge.push_back(best_hi);
    }
    return p;
}

Policy approximate_policy(const GraphIFS& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<double> lo(n, 0.0), hi(n, 0.0);
    std::vector<double> slope, offset;
    for (const auto& e : g.edges()) {
        slope.push_back(e.map.slope().approx());
        offset.push_back(e.map.offset().approx());
    }
    Policy p{std::vector<Label>(n), std::vector<Label>(n)};
    for (int it = 0; it < 4000; ++it) {
        std::vector<double> nlo(n, INFINITY), nhi(n, -INFINITY);
        for (VertexId v = 0; v < n; ++v) {
            for (Label l : g.edges_from(v)) {
                const Edge& e = g.edge(l);
                double a = slope[l - 1] * lo[e.target] + offset[l - 1];
                double b = slope[l - 1] * hi[e.target] + offset[l - 1];
                if (a > b)
                    std::swap(a, b);
                if (a < nlo[v]) {
                    nlo[v] = a;
                    p.lo_edge[v] = l;
                }
                if (b > nhi[v]) {
                    nhi[v] = b;
                    p.hi_edge[v] = l;
                }
            }
        }
        double delta = 0;
        for (VertexId v = 0; v < n; ++v)
            delta = std::max({delta, std::fabs(nlo[v] - lo[v]), std::fabs(nhi[v] - hi[v])});
        lo = nlo;
        hi = nhi;
        if (delta < 1e-15)
            break;
    }
    return p;
}

} // namespace

ComponentHulls component_hulls(const GraphIFS& g)
{
    for (const auto& e : g.edges())
        if (!e.map.is_contraction())
            throw ValidationError("edge " + std::to_string(e.label) + " is not a contraction");
    // Policy iteration: solve exactly under the extreme-attaining edges, then
    // verify the solution is a fixed point of the interval Hutchinson map.
    Policy pol = approximate_policy(g);
    constexpr int cap = 256;
    for (int round = 0; round < cap; ++round) {
        std::vector<Interval> hulls = to_hulls(solve_policy(g, pol));
        Policy next = best_policy(g, hulls, &pol);
        if (next == pol) {
            ComponentHulls out;
            out.hull = hulls;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                std::vector<Interval> imgs;
                for (Label l : g.edges_from(v))
                    imgs.push_back(g.edge(l).map.image(hulls[g.edge(l).target]));
                IntervalSet covered(std::move(imgs));
                out.exact.push_back(covered.intervals().size() == 1 &&
                                    covered.intervals()[0] == hulls[v]);
            }
            return out;
        }
        pol = std::move(next);
    }
    throw Error("component hull iteration did not settle after " + std::to_string(cap) +
                " policy updates");
}

ComponentHulls certified_hulls(const GraphIFS& g)
{
    ComponentHulls h = component_hulls(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!h.exact[v])
            throw UncertifiedHullError("component of vertex " + g.vertex_names()[v] +
                                       " is not certified equal to its hull " +
                                       h.hull[v].to_string());
    return h;
}

Interval address_interval(const GraphIFS& g, const ComponentHulls& hulls, const Word& path,
                          std::optional<VertexId> start)
{
    if (path.empty()) {
        if (!start)
            throw ValidationError("the empty path needs a start vertex");
        return hulls.hull.at(*start);
    }
    AffineMap f = compose_path(g, path);
    if (start && g.edge(path.front()).source != *start)
        throw ValidationError("path does not start at the requested vertex");
    return f.image(hulls.hull[g.edge(path.back()).target]);
}

bool is_address(const GraphIFS& g, const InfiniteWord& address)
{
    // Checking pre . period . first(period) covers every transition.
    const std::size_t len = address.preperiod().size() + address.period().size() + 1;
    return is_path(g, address.prefix(len));
}

ExactReal pi_point(const GraphIFS& g, const InfiniteWord& address)
{
    if (!is_address(g, address))
        throw ValidationError("'" + address.to_string() + "' is not a valid address");
    ExactReal x = compose_path(g, address.period()).fixed_point();
    if (!address.preperiod().empty())
        x = compose_path(g, address.preperiod())(x);
    return x;
}

BannedSet edge_shift_banned_pairs(const GraphIFS& g)
{
    BannedSet b;
    for (const auto& e : g.edges())
        for (const auto& f : g.edges())
            if (e.target != f.source)
                b.insert(Word{e.label, f.label});
    return b;
}

} // namespace topskit
