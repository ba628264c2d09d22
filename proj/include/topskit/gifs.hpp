#ifndef TOPSKIT_GIFS_HPP
#define TOPSKIT_GIFS_HPP

#include "topskit/exactnum.hpp"
#include "topskit/symbolic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace topskit {

using VertexId = std::size_t;
using Label = Symbol;

// Closed interval [lo, hi], lo <= hi.
struct Interval {
    ExactReal lo;
    ExactReal hi;

    static Interval point(const ExactReal& x) { return {x, x}; }
    bool contains(const ExactReal& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool degenerate() const { return lo == hi; }
    ExactReal width() const { return hi - lo; }
    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

// x -> slope * x + offset.
class AffineMap {
public:
    AffineMap(ExactReal slope, ExactReal offset);
    static AffineMap identity() { return {ExactReal(1L), ExactReal(0L)}; }

    const ExactReal& slope() const noexcept { return slope_; }
    const ExactReal& offset() const noexcept { return offset_; }

    ExactReal operator()(const ExactReal& x) const { return slope_ * x + offset_; }
    ExactReal inverse(const ExactReal& y) const { return (y - offset_) / slope_; }
    // this o inner
    AffineMap compose(const AffineMap& inner) const;
    Interval image(const Interval& i) const;
    Interval preimage(const Interval& i) const;
    // Unique fixed point; requires slope != 1.
    ExactReal fixed_point() const;
    bool is_contraction() const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;

private:
    ExactReal slope_;
    ExactReal offset_;
};

// Finite union of disjoint closed intervals, sorted, with touching pieces
// merged. Single points are allowed.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> pieces);
    static IntervalSet of(const Interval& i) { return IntervalSet({i}); }

    const std::vector<Interval>& intervals() const noexcept { return pieces_; }
    bool empty() const noexcept { return pieces_.empty(); }
    bool contains(const ExactReal& x) const;
    bool subset_of(const IntervalSet& other) const;

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet image(const AffineMap& f) const;
    IntervalSet preimage(const AffineMap& f) const;

    std::string to_string() const;
    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> pieces_;
};

// Edge i carries f_i : A_{target} -> A_{source}; a path i j is compatible
// when target(i) == source(j).
struct Edge {
    Label label;
    VertexId source;
    VertexId target;
    AffineMap map;
};

class GraphIFS {
public:
    // Edge labels must be exactly 1..N; edges are stored by label.
    GraphIFS(std::vector<std::string> vertex_names, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    VertexId vertex(const std::string& name) const;
    const Edge& edge(Label label) const { return edges_.at(label - 1); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    // Ascending by label.
    const std::vector<Label>& edges_from(VertexId v) const { return out_.at(v); }
    const std::vector<Label>& edges_into(VertexId v) const { return in_.at(v); }

    // new_labels[i] is the new label of the edge currently labelled i + 1.
    GraphIFS relabel(const std::vector<Label>& new_labels) const;

    const std::string& comment() const noexcept { return comment_; }
    void set_comment(std::string c) { comment_ = std::move(c); }

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Label>> out_;
    std::vector<std::vector<Label>> in_;
    std::string comment_;
};

bool is_strongly_connected(const GraphIFS& g);
// gcd of directed cycle lengths; requires strong connectivity.
std::size_t graph_period(const GraphIFS& g);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

// Strong connectivity, primitivity, contractivity and pairwise disjoint
// component hulls.
ValidationReport validate(const GraphIFS& g);

bool is_path(const GraphIFS& g, const Word& path);
// f_{a_1} o ... o f_{a_n}; throws ValidationError on incompatible edges.
AffineMap compose_path(const GraphIFS& g, const Word& path);

// Smallest interval per vertex containing the attractor component, and
// whether the component is certified equal to it.
struct ComponentHulls {
    std::vector<Interval> hull;
    std::vector<bool> exact;
    bool all_exact() const;
};

ComponentHulls component_hulls(const GraphIFS& g);
// Throws UncertifiedHullError unless every component is its hull.
ComponentHulls certified_hulls(const GraphIFS& g);

// f_path(A_{target of path}); the empty path gives the hull of start.
Interval address_interval(const GraphIFS& g, const ComponentHulls& hulls, const Word& path,
                          std::optional<VertexId> start = std::nullopt);

bool is_address(const GraphIFS& g, const InfiniteWord& address);
ExactReal pi_point(const GraphIFS& g, const InfiniteWord& address);

// Length-2 words ij with target(i) != source(j): the edge shift is ban() of
// this set.
BannedSet edge_shift_banned_pairs(const GraphIFS& g);

} // namespace topskit

#endif
