#ifndef TOPSKIT_TOPS_HPP
#define TOPSKIT_TOPS_HPP

#include "topskit/gifs.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topskit {

struct TopAddress {
    Word word;
    ExactReal tail_point;
    VertexId tail_vertex = 0;
};

// Prefix of length depth of the lexicographically least address of x in A_v.
TopAddress top_address(const GraphIFS& g, const ComponentHulls& hulls, const ExactReal& x,
                       VertexId v, std::size_t depth);
TopAddress top_address(const GraphIFS& g, const ExactReal& x, VertexId v, std::size_t depth);

// Greedy orbit of x until (point, vertex) repeats or max_steps symbols were
// produced. periodic is set only in the first case.
struct TopOrbit {
    Word prefix;
    std::optional<InfiniteWord> periodic;
};
TopOrbit top_orbit(const GraphIFS& g, const ComponentHulls& hulls, const ExactReal& x,
                   VertexId v, std::size_t max_steps = 64);

enum class TopsVerdict { TotallyDisconnected, JustTouching, Overlapping, TouchingOscUndetermined };
const char* to_string(TopsVerdict v) noexcept;

struct ClassificationWitness {
    Label i;
    Label j;
    Interval overlap;
};

struct TopsClassification {
    TopsVerdict verdict;
    std::optional<ClassificationWitness> witness;
};

TopsClassification classify(const GraphIFS& g);

// Open interval (lo, hi) per vertex.
bool osc_check(const GraphIFS& g, const std::vector<Interval>& open_sets);

struct UpsilonRegion {
    std::size_t n = 0;
    std::vector<IntervalSet> region; // per vertex
    bool empty() const;
};

UpsilonRegion upsilon(const GraphIFS& g, std::size_t n);
UpsilonRegion upsilon(const GraphIFS& g, const ComponentHulls& hulls, std::size_t n);

struct InvarianceVerdict {
    bool shift_invariant = true;
    std::optional<ExactReal> witness_point;
    std::optional<VertexId> witness_vertex;
    std::optional<InfiniteWord> witness_address;
    // Finite greedy prefix when the orbit did not close within the cap.
    std::optional<Word> witness_prefix;
};

InvarianceVerdict invariance_verdict(const GraphIFS& g);

// perm[e] is the new label of the edge with original label e + 1.
using Labeling = std::vector<Label>;

struct LabelingResult {
    Labeling labeling;
    bool shift_invariant;
};

struct OrderingReport {
    Integer total = 0;     // N!
    Integer evaluated = 0; // labelings covered
    bool exhaustive = true;
    Integer invariant = 0;
    Integer non_invariant = 0;
    std::optional<Labeling> invariant_witness;
    std::optional<Labeling> non_invariant_witness;
    // Every examined labeling, in lexicographic order; kept only when at
    // most detail_limit labelings were examined.
    std::vector<LabelingResult> labelings;
};

struct OrderingOptions {
    std::size_t max_exhaustive_edges = 10;
    // Number of labelings to sample when N exceeds max_exhaustive_edges.
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = 1;
    std::size_t detail_limit = 5040;
    // 0 reads TOPSKIT_THREADS, falling back to 1.
    unsigned threads = 0;
};

OrderingReport ordering_search(const GraphIFS& g, const OrderingOptions& options = {});

} // namespace topskit

#endif
