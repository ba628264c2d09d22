#ifndef TOPSKIT_SYMBOLIC_HPP
#define TOPSKIT_SYMBOLIC_HPP

#include "topskit/exactnum.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace topskit {

using Symbol = std::uint32_t;

// Symbols 1..N, ordered by value.
class Alphabet {
public:
    explicit Alphabet(Symbol size);
    Symbol size() const noexcept { return size_; }
    bool contains(Symbol s) const noexcept { return s >= 1 && s <= size_; }

private:
    Symbol size_;
};

// Finite word. Ordering is plain lexicographic on finite sequences (a
// prefix sorts first); it exists for containers, not for the word partial
// order, which is word_partial_order().
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    // Digit string "2121" for alphabets up to 9 symbols, otherwise
    // comma-separated "10,2,11".
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    Symbol front() const { return symbols_.front(); }
    Symbol back() const { return symbols_.back(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    void push_back(Symbol s) { symbols_.push_back(s); }
    void pop_back() { symbols_.pop_back(); }

    // Factor [pos, pos + len).
    Word sub(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return sub(0, len); }
    Word operator+(const Word& other) const;

    bool has_factor(const Word& w) const;
    bool is_prefix_of(const Word& w) const;
    // Largest symbol; 0 for the empty word.
    Symbol max_symbol() const;

    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

private:
    std::vector<Symbol> symbols_;
};

// preperiod . period . period . ...; held in canonical form (primitive
// period, shortest preperiod) so equality is structural.
class EventuallyPeriodicString {
public:
    EventuallyPeriodicString(Word preperiod, Word period);
    // Constant string s s s ...
    static EventuallyPeriodicString constant(Symbol s);
    // "pre(period)", e.g. "3(1)" or "(12)".
    static EventuallyPeriodicString parse(std::string_view text);

    const Word& preperiod() const noexcept { return pre_; }
    const Word& period() const noexcept { return period_; }
    // 0-based.
    Symbol at(std::size_t i) const;
    Word prefix(std::size_t len) const;
    std::string to_string() const;

    friend bool operator==(const EventuallyPeriodicString&,
                           const EventuallyPeriodicString&) = default;

private:
    Word pre_;
    Word period_;
};

using InfiniteWord = EventuallyPeriodicString;

class BannedSet {
public:
    BannedSet() = default;
    BannedSet(std::initializer_list<Word> words) : words_(words) {}
    explicit BannedSet(std::set<Word> words) : words_(std::move(words)) {}

    const std::set<Word>& words() const noexcept { return words_; }
    bool empty() const noexcept { return words_.empty(); }
    std::size_t max_length() const;
    void insert(Word w) { words_.insert(std::move(w)); }

    friend bool operator==(const BannedSet&, const BannedSet&) = default;

private:
    std::set<Word> words_;
};

// x avoids every word of banned.
bool contains(const InfiniteWord& x, const BannedSet& banned);
InfiniteWord shift(const InfiniteWord& x);
Ordering compare_lex(const InfiniteWord& x, const InfiniteWord& y);
// 1-based index of the first disagreement; nullopt when x == y.
std::optional<std::size_t> first_difference(const InfiniteWord& x, const InfiniteWord& y);
// d(x, y) = 2^-k with k the first disagreement; 0 when equal.
Rational metric(const InfiniteWord& x, const InfiniteWord& y);

enum class WordOrder { Less, Greater, Incomparable, Equal };
const char* to_string(WordOrder o) noexcept;
// w < w' iff every continuation of w sorts at or below every continuation
// of w'. A proper prefix relation is incomparable.
WordOrder word_partial_order(const Word& w, const Word& v);

// Drops every word that has another member of the set as a proper factor.
BannedSet reduce_banned(const BannedSet& banned);

// Least element of the shift of finite type on the alphabet avoiding the
// given words of length <= 2, optionally restricted to strings whose first
// symbol lies in first_symbols. Throws ValidationError when the space (under
// the constraint) is empty or a banned word is longer than 2.
InfiniteWord min_string(const Alphabet& alphabet, const BannedSet& banned,
                        const std::optional<std::set<Symbol>>& first_symbols = std::nullopt);

} // namespace topskit

#endif
