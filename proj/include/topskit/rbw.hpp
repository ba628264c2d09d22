#ifndef TOPSKIT_RBW_HPP
#define TOPSKIT_RBW_HPP

#include "topskit/exactnum.hpp"
#include "topskit/gifs.hpp"
#include "topskit/symbolic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topskit {

// Contraction ratio of f1(x) = rho x, f2(x) = rho x + (1 - rho); 1/2 <= rho < 1.
class RhoParam {
public:
    explicit RhoParam(ExactReal value);
    static RhoParam parse(std::string_view text) { return RhoParam(ExactReal::parse(text)); }

    const ExactReal& value() const noexcept { return value_; }
    bool just_touching() const { return value_ == ExactReal::fraction(1, 2); }

private:
    ExactReal value_;
};

// The two-map system as a one-vertex graph IFS.
GraphIFS two_map_ifs(const RhoParam& rho);

// sum (a_i - 1) x^{i-1}.
IntPoly alpha_poly(const Word& alpha);
// f_alpha(1) = rho^n + (1 - rho) alpha(rho).
ExactReal endpoint(const Word& alpha, const RhoParam& rho);

enum class RbwCondition { A1, A2, A3 };
const char* to_string(RbwCondition c) noexcept;

struct RbwCheck {
    bool banned_reduced = false;
    std::optional<RbwCondition> failed;
    std::optional<Word> witness; // offending factor for A3
};

// Requires 1/2 < rho.
RbwCheck is_reduced_banned(const Word& alpha, const RhoParam& rho);

struct RbwEntry {
    Word word;
    ExactReal endpoint;
    bool equality = false;
};

struct ConjectureStatus {
    bool holds = true;
    std::optional<Word> counterexample; // the gamma^i gamma^i word
    std::optional<std::size_t> index;   // i, 1-based
};

struct PatternVerdict {
    std::size_t index = 0; // i, 1-based, >= 2
    bool matches = false;
    std::size_t j = 0;
    std::size_t k = 0; // 0 for a pure power
};

struct RbwReport {
    ExactReal rho;
    std::size_t max_len = 0;
    std::vector<RbwEntry> entries; // by length
    bool finite_type_sufficient = false;
    bool truncated = false;
    std::map<std::string, bool> lemma_checks;
    ConjectureStatus conjecture;
    std::vector<PatternVerdict> patterns;
    std::string note;
};

// Reduced banned words up to max_len by pruned depth-first search.
RbwReport enumerate(const RhoParam& rho, std::size_t max_len);

// Least n <= cap with rho^n + 1 - 2 rho <= 0; nullopt past the cap or at rho = 1/2.
std::optional<std::size_t> first_rbw_length(const RhoParam& rho, std::size_t cap = 4096);

ConjectureStatus conjecture_scan(const std::vector<RbwEntry>& entries);
std::vector<PatternVerdict> pattern_scan(const std::vector<RbwEntry>& entries);
std::map<std::string, bool> lemma_checks(const RhoParam& rho, const std::vector<RbwEntry>& entries,
                                         bool finite_type_sufficient, std::size_t max_len);

} // namespace topskit

#endif
