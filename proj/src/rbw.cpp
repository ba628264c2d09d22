#include "topskit/rbw.hpp"

#include "topskit/error.hpp"

#include <algorithm>

namespace topskit {

RhoParam::RhoParam(ExactReal value) : value_(std::move(value))
{
    if (value_ < ExactReal::fraction(1, 2) || value_ >= ExactReal(1L))
        throw ValidationError("rho = " + value_.to_string() + " is outside [1/2, 1)");
}

GraphIFS two_map_ifs(const RhoParam& rho)
{
    const ExactReal& r = rho.value();
    return GraphIFS({"v"}, {Edge{1, 0, 0, AffineMap(r, ExactReal(0L))},
                            Edge{2, 0, 0, AffineMap(r, ExactReal(1L) - r)}});
}

IntPoly alpha_poly(const Word& alpha)
{
    std::vector<Integer> c(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 1 && alpha[i] != 2)
            throw ValidationError("word " + alpha.to_string() + " is not over {1,2}");
        c[i] = alpha[i] - 1;
    }
    return IntPoly(std::move(c));
}

ExactReal endpoint(const Word& alpha, const RhoParam& rho)
{
    const ExactReal& r = rho.value();
    const auto n = static_cast<unsigned>(alpha.size());
    return r.pow(n) + (ExactReal(1L) - r) * eval(alpha_poly(alpha), r);
}

const char* to_string(RbwCondition c) noexcept
{
    switch (c) {
    case RbwCondition::A1:
        return "A1";
    case RbwCondition::A2:
        return "A2";
    case RbwCondition::A3:
        return "A3";
    }
    return "?";
}

RbwCheck is_reduced_banned(const Word& alpha, const RhoParam& rho)
{
    if (rho.just_touching())
        throw ValidationError("the reduced banned word criterion needs rho > 1/2");
    RbwCheck out;
    if (alpha.empty() || alpha[0] != 2) {
        out.failed = RbwCondition::A1;
        return out;
    }
    if (endpoint(alpha, rho) > rho.value()) {
        out.failed = RbwCondition::A2;
        return out;
    }
    for (std::size_t len = alpha.size() - 1; len >= 1; --len) {
        for (std::size_t pos = 0; pos + len <= alpha.size(); ++pos) {
            if (alpha[pos] != 2)
                continue;
            Word beta = alpha.sub(pos, len);
            if (endpoint(beta, rho) <= rho.value()) {
                out.failed = RbwCondition::A3;
                out.witness = std::move(beta);
                return out;
            }
        }
    }
    out.banned_reduced = true;
    return out;
}

std::optional<std::size_t> first_rbw_length(const RhoParam& rho, std::size_t cap)
{
    if (rho.just_touching())
        return std::nullopt;
    const ExactReal& r = rho.value();
    const ExactReal shift = ExactReal(1L) - r - r;
    ExactReal p = r;
    for (std::size_t n = 1; n <= cap; ++n, p *= r)
        if ((p + shift).sign() <= 0)
            return n;
    return std::nullopt;
}

// ---------------------------------------------------------------- search

namespace {

// f_beta(x) = scale * x + offset for a factor beta starting with 2.
struct Affine {
    ExactReal scale;
    ExactReal offset;
};

class Search {
public:
    Search(const RhoParam& rho, std::size_t max_len)
        : rho_(rho.value()), one_minus_(ExactReal(1L) - rho.value()), limit_(max_len)
    {
    }

    void run()
    {
        if (limit_ == 0)
            return;
        word_.push_back(2);
        std::vector<Affine> states{{rho_, one_minus_}};
        visit(states);
    }

    std::vector<RbwEntry> entries;
    bool hit_limit = false;

private:
    void visit(const std::vector<Affine>& states)
    {
        if (word_.size() >= limit_) {
            hit_limit = true;
            return;
        }
        for (Symbol c : {Symbol{1}, Symbol{2}}) {
            std::vector<Affine> next;
            next.reserve(states.size() + 1);
            bool dead = false;
            for (std::size_t i = 0; i < states.size(); ++i) {
                Affine a{states[i].scale * rho_, states[i].offset};
                if (c == 2)
                    a.offset += states[i].scale * one_minus_;
                // Index 0 is the whole word; the rest are proper suffixes.
                if (i > 0 && a.scale + a.offset <= rho_) {
                    dead = true;
                    break;
                }
                next.push_back(std::move(a));
            }
            if (dead)
                continue;
            if (c == 2)
                next.push_back({rho_, one_minus_}); // the one-symbol suffix "2"
            word_.push_back(c);
            ExactReal end = next[0].scale + next[0].offset;
            if (end <= rho_) {
                const bool eq = end == rho_;
                entries.push_back({word_, std::move(end), eq});
                // No reduced banned word is longer than an equality one.
                if (eq)
                    limit_ = std::min(limit_, word_.size());
            } else if (word_.size() <= limit_) {
                visit(next);
            }
            word_.pop_back();
        }
    }

    ExactReal rho_;
    ExactReal one_minus_;
    std::size_t limit_;
    Word word_;
};

} // namespace

RbwReport enumerate(const RhoParam& rho, std::size_t max_len)
{
    if (max_len < 1)
        throw ValidationError("max_len must be at least 1");
    RbwReport report;
    report.rho = rho.value();
    report.max_len = max_len;
    if (rho.just_touching()) {
        report.note = "rho = 1/2 is just touching: no word is banned and the closure of the top "
                      "is the full shift, although the top itself is not";
    } else {
        Search s(rho, max_len);
        s.run();
        report.entries = std::move(s.entries);
        std::stable_sort(report.entries.begin(), report.entries.end(),
                         [](const RbwEntry& a, const RbwEntry& b) { return a.word.size() < b.word.size(); });
        const bool eq = std::any_of(report.entries.begin(), report.entries.end(),
                                    [](const RbwEntry& e) { return e.equality; });
        report.finite_type_sufficient = eq;
        report.truncated = !eq && s.hit_limit;
        for (const auto& e : report.entries)
            if (e.equality && e.word.back() != 1)
                report.note = "equality entry " + e.word.to_string() + " ends in 2";
    }
    report.lemma_checks = lemma_checks(rho, report.entries, report.finite_type_sufficient, max_len);
    report.conjecture = conjecture_scan(report.entries);
    report.patterns = pattern_scan(report.entries);
    return report;
}

// ---------------------------------------------------------------- checks

ConjectureStatus conjecture_scan(const std::vector<RbwEntry>& entries)
{
    ConjectureStatus out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Word& a = entries[i].word;
        Word gamma = a.prefix(a.size() - 1);
        Word twice = gamma + gamma;
        for (std::size_t j = 0; j <= i; ++j) {
            if (twice.has_factor(entries[j].word)) {
                out.holds = false;
                out.counterexample = twice;
                out.index = i + 1;
                return out;
            }
        }
    }
    return out;
}

std::vector<PatternVerdict> pattern_scan(const std::vector<RbwEntry>& entries)
{
    std::vector<PatternVerdict> out;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        const Word& prev = entries[i - 1].word;
        const Word& a = entries[i].word;
        const Word gamma = prev.prefix(prev.size() - 1);
        PatternVerdict v;
        v.index = i + 1;
        const std::size_t g = gamma.size();
        for (std::size_t j = 1; g > 0 && j * g <= a.size() && !v.matches; ++j) {
            const std::size_t k = a.size() - j * g;
            const bool k_ok = k == 0 || (k > 1 && k + 1 < g);
            if (!k_ok)
                continue;
            Word candidate;
            for (std::size_t r = 0; r < j; ++r)
                candidate = candidate + gamma;
            candidate = candidate + gamma.prefix(k);
            if (candidate == a) {
                v.matches = true;
                v.j = j;
                v.k = k;
            }
        }
        out.push_back(v);
    }
    return out;
}

std::map<std::string, bool> lemma_checks(const RhoParam& rho, const std::vector<RbwEntry>& entries,
                                         bool finite_type_sufficient, std::size_t max_len)
{
    std::map<std::string, bool> out;

    bool ends = true;
    for (const auto& e : entries)
        if (!e.equality && e.word.back() != 1)
            ends = false;
    out["ends_with_1"] = ends;

    const auto m = first_rbw_length(rho, std::max<std::size_t>(max_len, 64));
    bool xi = true;
    if (m && *m <= max_len) {
        Word expect{2};
        for (std::size_t i = 1; i < *m; ++i)
            expect.push_back(1);
        xi = !entries.empty() && entries.front().word == expect;
    } else {
        xi = entries.empty();
    }
    out["first_is_xi"] = xi;

    bool unique = true, increasing = true;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        unique = unique && entries[i].word.size() != entries[i - 1].word.size();
        increasing = increasing && entries[i - 1].endpoint < entries[i].endpoint;
    }
    out["unique_lengths"] = unique;
    out["increasing_endpoints"] = increasing;

    bool second = true;
    if (entries.size() >= 2 && !entries.front().equality && m) {
        Word expect{2};
        for (std::size_t i = 2; i < *m; ++i)
            expect.push_back(1);
        expect.push_back(2);
        second = expect.is_prefix_of(entries[1].word);
    }
    out["second_prefix"] = second;

    bool terminates = true;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].equality && (i + 1 != entries.size() || !finite_type_sufficient))
            terminates = false;
    out["equality_terminates"] = terminates;
    return out;
}

} // namespace topskit
