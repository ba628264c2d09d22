// One PASS/FAIL line per acceptance criterion. Thresholds are fixed here and
// never read from the environment.
#include "oracle.hpp"

#include "topskit/config.hpp"
#include "topskit/rbw.hpp"
#include "topskit/tops.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace topskit;

namespace {

constexpr double kRbwTwoThirdsSeconds = 5.0;
constexpr double kGoldenSeconds = 1.0;
constexpr double kLemmaSuiteSeconds = 60.0;
constexpr double kOrderingSeconds = 5.0;
constexpr double kTopAddressSeconds = 60.0;
constexpr int kLemmaSamples = 50;
constexpr std::size_t kLemmaMaxLen = 12;
constexpr int kOracleSamples = 10;
constexpr std::size_t kOracleMaxLen = 14;
constexpr int kPointsPerConfig = 100;
constexpr std::size_t kTopDepth = 12;

const char* const all_configs[] = {
    "fig1.json", "fig1-relabelled.json", "two-map-half.json", "two-map-two-thirds.json",
    "two-map-golden.json", "reconstruction-ssi.json", "reconstruction-ssi-no-self-ref.json",
    "reconstruction-never-invariant.json"};

GraphIFS config(const std::string& name) { return load_config(std::string(TOPSKIT_CONFIG_DIR "/") + name); }

ExactReal q(long n, long d) { return ExactReal::fraction(n, d); }

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void run(int id, const char* name, double limit, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs >= limit)
        o.require(false, "runtime limit exceeded");
    if (!o.ok)
        ++failures;
    std::printf("%s %2d %s (%.3fs%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs,
                limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + "s").c_str() : "",
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

std::vector<std::string> words(const RbwReport& r)
{
    std::vector<std::string> out;
    for (const auto& e : r.entries)
        out.push_back(e.word.to_string());
    return out;
}

// Rationals n/d strictly inside (1/2, 1), deterministic.
std::vector<std::pair<long, long>> sample_rhos(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::pair<long, long>> out;
    while (static_cast<int>(out.size()) < count) {
        long d = 3 + static_cast<long>(rng() % 98);
        long n = d / 2 + 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(d - d / 2 - 1));
        if (2 * n > d && n < d)
            out.emplace_back(n, d);
    }
    return out;
}

ExactReal sample_point(const GraphIFS& g, const ComponentHulls& h, VertexId v, std::mt19937_64& rng)
{
    std::vector<Label> path;
    VertexId at = v;
    for (std::size_t i = rng() % 10; i > 0; --i) {
        const auto& out = g.edges_from(at);
        Label l = out[rng() % out.size()];
        path.push_back(l);
        at = g.edge(l).target;
    }
    Interval end = h.hull[at];
    return oracle::path_image(g, path, Interval::point(rng() % 2 ? end.lo : end.hi)).lo;
}

} // namespace

int main()
{
    run(1, "rho = 2/3 enumeration to length 15", kRbwTwoThirdsSeconds, [](Outcome& o) {
        RbwReport r = enumerate(RhoParam(q(2, 3)), 15);
        o.require(words(r) == std::vector<std::string>{"211", "212121", "2121221", "21212221", "212122221",
                                                       "212122222121", "212122222122121"},
                  "word list differs");
        o.require(!r.finite_type_sufficient, "finite_type_sufficient should be false");
    });

    run(2, "golden ratio yields {211} with equality", kGoldenSeconds, [](Outcome& o) {
        RbwReport r = enumerate(RhoParam::parse("poly:[-1,1,1]@[0.6,0.7]"), 15);
        o.require(words(r) == std::vector<std::string>{"211"}, "word list differs");
        o.require(!r.entries.empty() && r.entries[0].equality, "equality flag missing");
        o.require(r.finite_type_sufficient, "finite_type_sufficient should be true");
    });

    run(3, "rho = 1/2 empty and just touching", 0, [](Outcome& o) {
        const RhoParam half(q(1, 2));
        o.require(enumerate(half, 15).entries.empty(), "banned set not empty");
        o.require(classify(two_map_ifs(half)).verdict == TopsVerdict::JustTouching, "not JustTouching");
    });

    run(4, "lemma suite on 50 rational rho, max_len 12", kLemmaSuiteSeconds, [](Outcome& o) {
        for (auto [n, d] : sample_rhos(kLemmaSamples, 4)) {
            RbwReport r = enumerate(RhoParam(q(n, d)), kLemmaMaxLen);
            for (const auto& [name, ok] : r.lemma_checks)
                o.require(ok, name + " failed at " + std::to_string(n) + "/" + std::to_string(d));
        }
    });

    run(5, "pruned enumeration equals brute force, max_len 14", 0, [](Outcome& o) {
        for (auto [n, d] : sample_rhos(kOracleSamples, 5)) {
            std::set<std::string> got;
            for (const auto& w : words(enumerate(RhoParam(q(n, d)), kOracleMaxLen)))
                got.insert(w);
            o.require(got == oracle::brute_force_rbw(mpq_class(n, d), kOracleMaxLen),
                      "mismatch at " + std::to_string(n) + "/" + std::to_string(d));
        }
    });

    run(6, "two-vertex example facts", 0, [](Outcome& o) {
        GraphIFS g = config("fig1.json");
        ComponentHulls h = certified_hulls(g);
        o.require(h.hull[0] == Interval{q(0, 1), q(1, 1)} && h.hull[1] == Interval{q(2, 1), q(3, 1)}, "hulls");
        o.require(h.all_exact(), "hulls not exact");
        o.require(top_address(g, h, ExactReal(2), 1, 3).word == Word{3, 1, 1}, "tau(2) prefix");
        UpsilonRegion u = upsilon(g, h, 1);
        o.require(u.region[0].empty() && u.region[1] == IntervalSet::of(Interval::point(ExactReal(2))), "upsilon_1");
        InvarianceVerdict v = invariance_verdict(g);
        o.require(!v.shift_invariant, "verdict should be false");
        o.require(v.witness_address && *v.witness_address == InfiniteWord::parse("3(1)"), "witness address");
        GraphIFS r = config("fig1-relabelled.json");
        o.require(upsilon(r, 1).empty(), "relabelled upsilon_1 not empty");
        o.require(invariance_verdict(r).shift_invariant, "relabelled verdict should be true");
    });

    run(7, "ordering search on the two-vertex example", kOrderingSeconds, [](Outcome& o) {
        OrderingReport r = ordering_search(config("fig1.json"));
        o.require(r.exhaustive && r.total == 24 && r.evaluated == 24 && r.labelings.size() == 24,
                  "not all 24 labelings evaluated");
        std::optional<bool> identity, rearranged;
        for (const auto& l : r.labelings) {
            if (l.labeling == Labeling{1, 2, 3, 4})
                identity = l.shift_invariant;
            if (l.labeling == Labeling{1, 4, 3, 2})
                rearranged = l.shift_invariant;
        }
        o.require(identity == false, "identity labeling should be non-invariant");
        o.require(rearranged == true, "rearranged labeling should be invariant");
    });

    run(8, "greedy top address equals brute force at depth 12", kTopAddressSeconds, [](Outcome& o) {
        std::mt19937_64 rng(8);
        for (const char* c : all_configs) {
            GraphIFS g = config(c);
            ComponentHulls h = certified_hulls(g);
            for (int t = 0; t < kPointsPerConfig; ++t) {
                VertexId v = rng() % g.vertex_count();
                ExactReal x = sample_point(g, h, v, rng);
                auto brute = oracle::brute_force_top(g, h.hull, x, v, kTopDepth);
                o.require(brute.has_value() && top_address(g, h, x, v, kTopDepth).word == *brute,
                          std::string(c) + " x=" + x.to_string());
            }
        }
    });

    run(9, "upsilon monotone for n = 1..4", 0, [](Outcome& o) {
        for (const char* c : all_configs) {
            GraphIFS g = config(c);
            ComponentHulls h = certified_hulls(g);
            UpsilonRegion prev = upsilon(g, h, 1);
            for (std::size_t n = 2; n <= 5; ++n) {
                UpsilonRegion next = upsilon(g, h, n);
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    o.require(prev.region[v].subset_of(next.region[v]),
                              std::string(c) + " n=" + std::to_string(n - 1));
                prev = std::move(next);
            }
        }
    });

    run(10, "conjecture and pattern scans on the 2/3 list", 0, [](Outcome& o) {
        RbwReport r = enumerate(RhoParam(q(2, 3)), 15);
        o.require(r.conjecture.holds, "conjecture scan failed");
        o.require(r.patterns.size() + 1 == r.entries.size(), "pattern scan does not cover every i > 1");
        for (const auto& p : r.patterns) {
            // Rebuild the word from the previous entry: gamma^j followed by
            // the first k symbols of gamma.
            const Word& prev = r.entries[p.index - 2].word;
            const Word gamma = prev.sub(0, prev.size() - 1);
            Word expect;
            for (std::size_t i = 0; i < p.j; ++i)
                expect = expect + gamma;
            expect = expect + gamma.sub(0, p.k);
            std::ostringstream where;
            where << "entry " << p.index;
            o.require(p.matches, where.str() + " has no decomposition");
            o.require(r.entries[p.index - 1].word == expect, where.str() + " decomposition");
        }
    });

    std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
