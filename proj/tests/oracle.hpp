// Independent reference computations for the test suites. Nothing here
// calls the code under test beyond constructing inputs and reading edge
// data, so agreement is a real cross-check.
#ifndef TOPSKIT_TESTS_ORACLE_HPP
#define TOPSKIT_TESTS_ORACLE_HPP

#include "topskit/gifs.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using topskit::ExactReal;
using topskit::GraphIFS;
using topskit::Interval;
using topskit::Label;
using topskit::VertexId;
using topskit::Word;

// f_w(1) for the two-map system, applying the maps innermost first.
inline mpq_class rbw_endpoint(const std::string& w, const mpq_class& rho)
{
    mpq_class x = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        mpq_class y = rho * x;
        if (*it == '2')
            y += 1 - rho;
        x = y;
    }
    return x;
}

// All reduced banned words of length <= max_len, by testing every word over
// {1,2} against A1-A3 directly. Words are indexed by (length, bits) with
// bit i set when symbol i (0-based) is 2.
inline std::set<std::string> brute_force_rbw(const mpq_class& rho, std::size_t max_len)
{
    // banned[len][bits]: f_w(1) <= rho, filled by prepending a symbol.
    std::vector<std::vector<char>> banned(max_len + 1);
    std::vector<std::vector<mpq_class>> value(max_len + 1);
    value[0] = {mpq_class(1)};
    banned[0] = {0};
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t count = std::size_t{1} << len;
        value[len].resize(count);
        banned[len].resize(count);
        for (std::size_t bits = 0; bits < count; ++bits) {
            const bool first_two = bits & 1;
            const mpq_class& rest = value[len - 1][bits >> 1];
            mpq_class v = rho * rest;
            if (first_two)
                v += 1 - rho;
            banned[len][bits] = v <= rho;
            value[len][bits] = std::move(v);
        }
        if (len > 1)
            value[len - 1].clear(); // only the previous layer is needed
    }
    std::set<std::string> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            if (!(bits & 1) || !banned[len][bits])
                continue;
            bool reduced = true;
            for (std::size_t flen = 1; flen < len && reduced; ++flen)
                for (std::size_t pos = 0; pos + flen <= len && reduced; ++pos) {
                    const std::size_t f = (bits >> pos) & ((std::size_t{1} << flen) - 1);
                    if ((f & 1) && banned[flen][f])
                        reduced = false;
                }
            if (reduced) {
                std::string w;
                for (std::size_t i = 0; i < len; ++i)
                    w += (bits >> i) & 1 ? '2' : '1';
                out.insert(w);
            }
        }
    }
    return out;
}

// f_path applied to [lo, hi], maps applied innermost first.
inline Interval path_image(const GraphIFS& g, const std::vector<Label>& path, Interval box)
{
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const auto& e = g.edge(*it);
        ExactReal a = e.map.slope() * box.lo + e.map.offset();
        ExactReal b = e.map.slope() * box.hi + e.map.offset();
        box = a <= b ? Interval{a, b} : Interval{b, a};
    }
    return box;
}

// Lexicographic minimum over every valid depth-d path from v whose image
// interval contains x. Prefixes whose interval misses x are cut, which is
// sound because images nest.
inline std::optional<Word> brute_force_top(const GraphIFS& g, const std::vector<Interval>& hulls,
                                           const ExactReal& x, VertexId v, std::size_t depth)
{
    std::vector<Word> leaves;
    std::vector<Label> path;
    auto rec = [&](auto&& self, VertexId at) -> void {
        if (path.size() == depth) {
            leaves.emplace_back(path);
            return;
        }
        for (const auto& e : g.edges()) {
            if (e.source != at)
                continue;
            path.push_back(e.label);
            Interval box = path_image(g, path, hulls[e.target]);
            if (box.lo <= x && x <= box.hi)
                self(self, e.target);
            path.pop_back();
        }
    };
    rec(rec, v);
    if (leaves.empty())
        return std::nullopt;
    return *std::min_element(leaves.begin(), leaves.end());
}

} // namespace oracle

#endif
