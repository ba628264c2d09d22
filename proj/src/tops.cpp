#include "topskit/tops.hpp"

#include "topskit/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>

namespace topskit {

// ---------------------------------------------------------------- addresses

TopAddress top_address(const GraphIFS& g, const ComponentHulls& hulls, const ExactReal& x,
                       VertexId v, std::size_t depth)
{
    if (v >= g.vertex_count())
        throw ValidationError("vertex index out of range");
    if (!hulls.hull[v].contains(x))
        throw ValidationError("point " + x.to_string() + " is outside A_" + g.vertex_names()[v] +
                              " = " + hulls.hull[v].to_string());
    TopAddress out{Word{}, x, v};
    for (std::size_t step = 0; step < depth; ++step) {
        bool moved = false;
        for (Label l : g.edges_from(out.tail_vertex)) {
            const Edge& e = g.edge(l);
            if (e.map.image(hulls.hull[e.target]).contains(out.tail_point)) {
                out.word.push_back(l);
                out.tail_point = e.map.inverse(out.tail_point);
                out.tail_vertex = e.target;
                moved = true;
                break;
            }
        }
        if (!moved)
            throw Error("point " + out.tail_point.to_string() + " lies in no edge image at " +
                        g.vertex_names()[out.tail_vertex] + "; component hulls are not exact");
    }
    return out;
}

TopAddress top_address(const GraphIFS& g, const ExactReal& x, VertexId v, std::size_t depth)
{
    return top_address(g, certified_hulls(g), x, v, depth);
}

TopOrbit top_orbit(const GraphIFS& g, const ComponentHulls& hulls, const ExactReal& x,
                   VertexId v, std::size_t max_steps)
{
    std::vector<std::pair<VertexId, ExactReal>> states{{v, x}};
    TopOrbit orbit;
    for (std::size_t step = 0; step < max_steps; ++step) {
        TopAddress t = top_address(g, hulls, states.back().second, states.back().first, 1);
        orbit.prefix.push_back(t.word[0]);
        std::pair<VertexId, ExactReal> next{t.tail_vertex, t.tail_point};
        auto it = std::find(states.begin(), states.end(), next);
        if (it != states.end()) {
            const auto start = static_cast<std::size_t>(it - states.begin());
            orbit.periodic = InfiniteWord(orbit.prefix.prefix(start),
                                          orbit.prefix.sub(start, orbit.prefix.size()));
            return orbit;
        }
        states.push_back(std::move(next));
    }
    return orbit;
}

// ---------------------------------------------------------------- classification

const char* to_string(TopsVerdict v) noexcept
{
    switch (v) {
    case TopsVerdict::TotallyDisconnected:
        return "TotallyDisconnected";
    case TopsVerdict::JustTouching:
        return "JustTouching";
    case TopsVerdict::Overlapping:
        return "Overlapping";
    case TopsVerdict::TouchingOscUndetermined:
        return "TouchingOscUndetermined";
    }
    return "?";
}

bool osc_check(const GraphIFS& g, const std::vector<Interval>& open_sets)
{
    if (open_sets.size() != g.vertex_count())
        throw ValidationError("osc_check needs one open set per vertex");
    std::vector<Interval> images;
    for (const auto& e : g.edges()) {
        Interval img = e.map.image(open_sets[e.target]);
        if (!open_sets[e.source].contains(img))
            return false;
        images.push_back(std::move(img));
    }
    // Open intervals (a, b) and (c, d) are disjoint iff b <= c or d <= a.
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (!(images[i].hi <= images[j].lo || images[j].hi <= images[i].lo))
                return false;
    return true;
}

TopsClassification classify(const GraphIFS& g)
{
    // Components sit inside their hulls, so disjoint hull images settle the
    // totally disconnected case without certification. Anything else reads
    // the hulls as the components and needs them certified.
    ComponentHulls hulls = component_hulls(g);
    bool touching = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& out = g.edges_from(v);
        for (std::size_t a = 0; a < out.size(); ++a) {
            for (std::size_t b = a + 1; b < out.size(); ++b) {
                const Edge& ei = g.edge(out[a]);
                const Edge& ej = g.edge(out[b]);
                auto meet = intersect(ei.map.image(hulls.hull[ei.target]),
                                      ej.map.image(hulls.hull[ej.target]));
                if (!meet)
                    continue;
                touching = true;
                if (!meet->degenerate() && hulls.all_exact())
                    return {TopsVerdict::Overlapping, ClassificationWitness{out[a], out[b], *meet}};
            }
        }
    }
    if (!touching)
        return {TopsVerdict::TotallyDisconnected, std::nullopt};
    hulls = certified_hulls(g);
    const bool all_open = std::none_of(hulls.hull.begin(), hulls.hull.end(),
                                       [](const Interval& h) { return h.degenerate(); });
    if (all_open && osc_check(g, hulls.hull))
        return {TopsVerdict::JustTouching, std::nullopt};
    return {TopsVerdict::TouchingOscUndetermined, std::nullopt};
}

// ---------------------------------------------------------------- upsilon

bool UpsilonRegion::empty() const
{
    return std::all_of(region.begin(), region.end(), [](const IntervalSet& s) { return s.empty(); });
}

namespace {

// rank[l - 1] is the position of edge l in the edge order; the identity
// order is the labelling itself.
using Rank = std::vector<std::size_t>;

Rank identity_rank(const GraphIFS& g)
{
    Rank r(g.edge_count());
    std::iota(r.begin(), r.end(), std::size_t{0});
    return r;
}

// Per-vertex images, precomputed.
std::vector<Interval> edge_images(const GraphIFS& g, const ComponentHulls& hulls)
{
    std::vector<Interval> img;
    for (const auto& e : g.edges())
        img.push_back(e.map.image(hulls.hull[e.target]));
    return img;
}

// Union of f_k(A_{k+}) over k with the same source as first and ranking
// below it.
IntervalSet earlier_images(const GraphIFS& g, const std::vector<Interval>& images, const Rank& rank,
                           Label first)
{
    std::vector<Interval> pieces;
    for (Label k : g.edges_from(g.edge(first).source))
        if (rank[k - 1] < rank[first - 1])
            pieces.push_back(images[k - 1]);
    return IntervalSet(std::move(pieces));
}

// Intersection over paths alpha of length m with
// alpha+ = v of f_alpha^{-1}(f_alpha(A_v) cap earlier(alpha_1)), which is
// A_v cap f_alpha^{-1}(earlier(alpha_1)) as f_alpha is a bijection of R.
IntervalSet region_at_length(const GraphIFS& g, const ComponentHulls& hulls,
                             const std::vector<Interval>& images, const Rank& rank, VertexId v,
                             std::size_t m)
{
    IntervalSet acc = IntervalSet::of(hulls.hull[v]);
    // Walk paths backwards from v; path holds alpha reversed.
    std::vector<Label> rev;
    std::function<bool(VertexId)> walk = [&](VertexId at) {
        if (rev.size() == m) {
            Word alpha(std::vector<Symbol>(rev.rbegin(), rev.rend()));
            IntervalSet earlier = earlier_images(g, images, rank, alpha[0]);
            acc = acc.intersect(earlier.preimage(compose_path(g, alpha)));
            return !acc.empty();
        }
        for (Label l : g.edges_into(at)) {
            rev.push_back(l);
            bool go_on = walk(g.edge(l).source);
            rev.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    };
    walk(v);
    return acc;
}

UpsilonRegion upsilon_ranked(const GraphIFS& g, const ComponentHulls& hulls, std::size_t n,
                             const Rank& rank)
{
    if (n == 0)
        throw ValidationError("upsilon depth must be positive");
    const std::vector<Interval> images = edge_images(g, hulls);
    UpsilonRegion out{n, std::vector<IntervalSet>(g.vertex_count())};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (std::size_t m = 1; m <= n; ++m)
            out.region[v] = out.region[v].unite(region_at_length(g, hulls, images, rank, v, m));
    return out;
}

} // namespace

UpsilonRegion upsilon(const GraphIFS& g, const ComponentHulls& hulls, std::size_t n)
{
    return upsilon_ranked(g, hulls, n, identity_rank(g));
}

UpsilonRegion upsilon(const GraphIFS& g, std::size_t n)
{
    return upsilon(g, certified_hulls(g), n);
}

InvarianceVerdict invariance_verdict(const GraphIFS& g)
{
    ComponentHulls hulls = certified_hulls(g);
    UpsilonRegion r = upsilon(g, hulls, 1);
    InvarianceVerdict out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (r.region[v].empty())
            continue;
        out.shift_invariant = false;
        out.witness_vertex = v;
        out.witness_point = r.region[v].intervals().front().lo;
        TopOrbit orbit = top_orbit(g, hulls, *out.witness_point, v);
        if (orbit.periodic)
            out.witness_address = orbit.periodic;
        else
            out.witness_prefix = orbit.prefix;
        break;
    }
    return out;
}

// ---------------------------------------------------------------- ordering search

namespace {

unsigned thread_count(unsigned requested)
{
    if (requested)
        return requested;
    if (const char* env = std::getenv("TOPSKIT_THREADS")) {
        long t = std::strtol(env, nullptr, 10);
        if (t > 0)
            return static_cast<unsigned>(std::min(t, 64L));
    }
    return 1;
}

Integer factorial(std::size_t n)
{
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= static_cast<unsigned long>(i);
    return f;
}

// Υ₁ only compares edges that share a source, so the verdict of a labelling
// depends on the induced order within each source class. Key: per edge, its
// rank within its class.
Rank class_rank(const GraphIFS& g, const Labeling& perm)
{
    Rank r(g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& out = g.edges_from(v);
        for (Label a : out) {
            std::size_t below = 0;
            for (Label b : out)
                below += perm[b - 1] < perm[a - 1];
            r[a - 1] = below;
        }
    }
    return r;
}

} // namespace

OrderingReport ordering_search(const GraphIFS& g, const OrderingOptions& options)
{
    const ComponentHulls hulls = certified_hulls(g);
    const std::size_t n = g.edge_count();
    OrderingReport report;
    report.total = factorial(n);

    std::map<Rank, bool> cache;
    auto verdict = [&](const Rank& r) {
        auto it = cache.find(r);
        if (it != cache.end())
            return it->second;
        bool inv = upsilon_ranked(g, hulls, 1, r).empty();
        cache.emplace(r, inv);
        return inv;
    };

    Integer class_count = 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        class_count *= factorial(g.edges_from(v).size());
    const bool exhaustive = n <= options.max_exhaustive_edges ||
                            (options.budget && class_count <= *options.budget);
    if (!exhaustive && !options.budget)
        throw BudgetError("ordering search over " + std::to_string(n) +
                          " edges needs a sampling budget (exhaustive limit is " +
                          std::to_string(options.max_exhaustive_edges) + " edges)");

    // Every class order: the product over sources of the permutations of
    // their out-edges.
    std::vector<Rank> classes;
    if (exhaustive)
        classes.push_back(Rank(n, 0));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& out = g.edges_from(v);
        std::vector<std::size_t> order(out.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::vector<Rank> next;
        do {
            for (const Rank& base : classes) {
                Rank r = base;
                for (std::size_t i = 0; i < out.size(); ++i)
                    r[out[i] - 1] = order[i];
                next.push_back(std::move(r));
            }
        } while (std::next_permutation(order.begin(), order.end()));
        classes = std::move(next);
    }
    if (exhaustive) {
        const unsigned threads = std::max(1u, std::min<unsigned>(thread_count(options.threads),
                                                                 static_cast<unsigned>(classes.size())));
        std::vector<char> results(classes.size());
        auto worker = [&](unsigned t) {
            for (std::size_t i = t; i < classes.size(); i += threads)
                results[i] = upsilon_ranked(g, hulls, 1, classes[i]).empty();
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(worker, t);
            for (auto& th : pool)
                th.join();
        }
        for (std::size_t i = 0; i < classes.size(); ++i)
            cache.emplace(classes[i], results[i] != 0);
    }

    // Each class order is realised by N! / prod(deg_v!) labelings.
    Integer per_class = report.total;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        per_class /= factorial(g.edges_from(v).size());

    // A labeling realising a class order: hand out labels 1..N, each to the
    // lowest edge whose class predecessors already hold one.
    auto realise = [&](const Rank& r) {
        Labeling perm(n, 0);
        std::vector<bool> used(n + 1, false);
        std::vector<bool> placed(n, false);
        for (Label next = 1; next <= n; ++next) {
            for (std::size_t e = 0; e < n; ++e) {
                if (placed[e])
                    continue;
                bool ready = true;
                for (Label b : g.edges_from(g.edge(static_cast<Label>(e + 1)).source))
                    if (r[b - 1] < r[e] && !placed[b - 1])
                        ready = false;
                if (ready) {
                    perm[e] = next;
                    placed[e] = true;
                    break;
                }
            }
        }
        return perm;
    };

    if (exhaustive) {
        report.exhaustive = true;
        for (const auto& [r, inv] : cache) {
            (inv ? report.invariant : report.non_invariant) += per_class;
            Labeling perm = realise(r);
            auto& slot = inv ? report.invariant_witness : report.non_invariant_witness;
            if (!slot || perm < *slot)
                slot = perm;
        }
        if (report.total <= options.detail_limit) {
            Labeling perm(n);
            std::iota(perm.begin(), perm.end(), Label{1});
            do {
                report.labelings.push_back({perm, verdict(class_rank(g, perm))});
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        report.evaluated = report.total;
        return report;
    }

    report.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    Labeling perm(n);
    std::iota(perm.begin(), perm.end(), Label{1});
    for (std::uint64_t s = 0; s < *options.budget; ++s) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const bool inv = verdict(class_rank(g, perm));
        (inv ? report.invariant : report.non_invariant) += 1;
        auto& slot = inv ? report.invariant_witness : report.non_invariant_witness;
        if (!slot || perm < *slot)
            slot = perm;
        if (*options.budget <= options.detail_limit)
            report.labelings.push_back({perm, inv});
    }
    report.evaluated = static_cast<unsigned long>(*options.budget);
    std::sort(report.labelings.begin(), report.labelings.end(),
              [](const LabelingResult& a, const LabelingResult& b) { return a.labeling < b.labeling; });
    return report;
}

} // namespace topskit
