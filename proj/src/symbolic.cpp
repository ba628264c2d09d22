#include "topskit/symbolic.hpp"

#include "topskit/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace topskit {

Alphabet::Alphabet(Symbol size) : size_(size)
{
    if (size == 0)
        throw ValidationError("alphabet must have at least one symbol");
}

// ---------------------------------------------------------------- Word

namespace {

Word parse_symbols(std::string_view text, bool commas)
{
    std::vector<Symbol> out;
    if (commas) {
        if (text.empty())
            return {};
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            auto tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
            if (tok.empty() && comma == std::string_view::npos && !out.empty())
                break; // trailing comma marks comma mode for one-symbol words
            if (tok.empty())
                throw ParseError("empty symbol in word '" + std::string(text) + "'");
            Symbol v = 0;
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("bad symbol in word '" + std::string(text) + "'");
                v = v * 10 + static_cast<Symbol>(c - '0');
            }
            if (v == 0)
                throw ParseError("symbols start at 1 in word '" + std::string(text) + "'");
            out.push_back(v);
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return Word(std::move(out));
    }
    for (char c : text) {
        if (c < '1' || c > '9')
            throw ParseError("bad symbol '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
        out.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(out));
}

std::string format_symbols(const Word& w, bool commas)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (commas && i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

} // namespace

Word Word::parse(std::string_view text)
{
    return parse_symbols(text, text.find(',') != std::string_view::npos);
}

Word Word::sub(std::size_t pos, std::size_t len) const
{
    if (pos > symbols_.size())
        pos = symbols_.size();
    len = std::min(len, symbols_.size() - pos);
    return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::operator+(const Word& other) const
{
    std::vector<Symbol> s = symbols_;
    s.insert(s.end(), other.symbols_.begin(), other.symbols_.end());
    return Word(std::move(s));
}

bool Word::has_factor(const Word& w) const
{
    if (w.empty())
        return true;
    return std::search(symbols_.begin(), symbols_.end(), w.symbols_.begin(), w.symbols_.end()) !=
           symbols_.end();
}

bool Word::is_prefix_of(const Word& w) const
{
    return size() <= w.size() && std::equal(symbols_.begin(), symbols_.end(), w.symbols_.begin());
}

Symbol Word::max_symbol() const
{
    return symbols_.empty() ? 0 : *std::max_element(symbols_.begin(), symbols_.end());
}

std::string Word::to_string() const
{
    return format_symbols(*this, max_symbol() > 9);
}

// ---------------------------------------------------------------- EventuallyPeriodicString

namespace {

std::size_t primitive_root_length(const std::vector<Symbol>& p)
{
    const std::size_t n = p.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d)
            continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            ok = p[i] == p[i - d];
        if (ok)
            return d;
    }
    return n;
}

} // namespace

EventuallyPeriodicString::EventuallyPeriodicString(Word preperiod, Word period)
{
    if (period.empty())
        throw ValidationError("period of an eventually periodic string must be nonempty");
    std::vector<Symbol> per = period.symbols();
    per.resize(primitive_root_length(per));
    std::vector<Symbol> pre = preperiod.symbols();
    // Absorb trailing preperiod symbols into the period by rotation.
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    }
    pre_ = Word(std::move(pre));
    period_ = Word(std::move(per));
}

EventuallyPeriodicString EventuallyPeriodicString::constant(Symbol s)
{
    return {Word{}, Word{s}};
}

EventuallyPeriodicString EventuallyPeriodicString::parse(std::string_view text)
{
    auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        throw ParseError("eventually periodic string must look like 'pre(period)': '" +
                         std::string(text) + "'");
    const bool commas = text.find(',') != std::string_view::npos;
    Word pre = parse_symbols(text.substr(0, open), commas);
    Word per = parse_symbols(text.substr(open + 1, text.size() - open - 2), commas);
    if (per.empty())
        throw ParseError("empty period in '" + std::string(text) + "'");
    return {std::move(pre), std::move(per)};
}

Symbol EventuallyPeriodicString::at(std::size_t i) const
{
    if (i < pre_.size())
        return pre_[i];
    return period_[(i - pre_.size()) % period_.size()];
}

Word EventuallyPeriodicString::prefix(std::size_t len) const
{
    std::vector<Symbol> s(len);
    for (std::size_t i = 0; i < len; ++i)
        s[i] = at(i);
    return Word(std::move(s));
}

std::string EventuallyPeriodicString::to_string() const
{
    // Comma mode needs a comma somewhere to be recognised on parse.
    const bool commas = std::max(pre_.max_symbol(), period_.max_symbol()) > 9;
    std::string per = format_symbols(period_, commas);
    if (commas && period_.size() == 1 && pre_.size() <= 1)
        per += ",";
    return format_symbols(pre_, commas) + "(" + per + ")";
}

// ---------------------------------------------------------------- operations

std::size_t BannedSet::max_length() const
{
    std::size_t m = 0;
    for (const auto& w : words_)
        m = std::max(m, w.size());
    return m;
}

bool contains(const InfiniteWord& x, const BannedSet& banned)
{
    if (banned.empty())
        return true;
    if (banned.words().count(Word{}))
        return false;
    // Factors starting after pre + period repeat earlier ones.
    const std::size_t starts = x.preperiod().size() + x.period().size();
    const std::size_t len = starts + banned.max_length() - 1;
    Word window = x.prefix(len);
    for (const auto& w : banned.words()) {
        for (std::size_t i = 0; i < starts; ++i) {
            if (std::equal(w.begin(), w.end(), window.begin() + static_cast<std::ptrdiff_t>(i)))
                return false;
        }
    }
    return true;
}

InfiniteWord shift(const InfiniteWord& x)
{
    if (!x.preperiod().empty())
        return {x.preperiod().sub(1, x.preperiod().size()), x.period()};
    Word p = x.period();
    return {Word{}, p.sub(1, p.size()) + Word{p.front()}};
}

std::optional<std::size_t> first_difference(const InfiniteWord& x, const InfiniteWord& y)
{
    // Past max(pre) both strings are periodic with period lcm(px, py).
    const std::size_t bound = std::max(x.preperiod().size(), y.preperiod().size()) +
                              std::lcm(x.period().size(), y.period().size());
    for (std::size_t i = 0; i < bound; ++i)
        if (x.at(i) != y.at(i))
            return i + 1;
    return std::nullopt;
}

Ordering compare_lex(const InfiniteWord& x, const InfiniteWord& y)
{
    auto k = first_difference(x, y);
    if (!k)
        return Ordering::Equal;
    return x.at(*k - 1) < y.at(*k - 1) ? Ordering::Less : Ordering::Greater;
}

Rational metric(const InfiniteWord& x, const InfiniteWord& y)
{
    auto k = first_difference(x, y);
    if (!k)
        return 0;
    Rational d(1);
    mpz_mul_2exp(d.get_den_mpz_t(), d.get_den_mpz_t(), *k);
    return d;
}

const char* to_string(WordOrder o) noexcept
{
    switch (o) {
    case WordOrder::Less:
        return "LT";
    case WordOrder::Greater:
        return "GT";
    case WordOrder::Incomparable:
        return "INCOMPARABLE";
    case WordOrder::Equal:
        return "EQ";
    }
    return "?";
}

WordOrder word_partial_order(const Word& w, const Word& v)
{
    if (w == v)
        return WordOrder::Equal;
    const std::size_t n = std::min(w.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (w[i] != v[i])
            return w[i] < v[i] ? WordOrder::Less : WordOrder::Greater;
    return WordOrder::Incomparable;
}

BannedSet reduce_banned(const BannedSet& banned)
{
    std::set<Word> out;
    for (const auto& w : banned.words()) {
        bool reducible = false;
        for (const auto& u : banned.words()) {
            if (u.size() < w.size() && w.has_factor(u)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            out.insert(w);
    }
    return BannedSet(std::move(out));
}

InfiniteWord min_string(const Alphabet& alphabet, const BannedSet& banned,
                        const std::optional<std::set<Symbol>>& first_symbols)
{
    const Symbol n = alphabet.size();
    std::vector<bool> alive(n + 1, true);
    alive[0] = false;
    std::vector<std::vector<bool>> arc(n + 1, std::vector<bool>(n + 1, true));
    for (const auto& w : banned.words()) {
        for (Symbol s : w)
            if (!alphabet.contains(s))
                throw ValidationError("banned word " + w.to_string() + " leaves the alphabet");
        if (w.size() == 1) {
            alive[w[0]] = false;
        } else if (w.size() == 2) {
            arc[w[0]][w[1]] = false;
        } else {
            throw ValidationError("min_string supports banned words of length <= 2, got " +
                                  w.to_string());
        }
    }
    // Keep only symbols from which an infinite walk exists.
    for (bool changed = true; changed;) {
        changed = false;
        for (Symbol s = 1; s <= n; ++s) {
            if (!alive[s])
                continue;
            bool has_next = false;
            for (Symbol t = 1; t <= n && !has_next; ++t)
                has_next = alive[t] && arc[s][t];
            if (!has_next) {
                alive[s] = false;
                changed = true;
            }
        }
    }
    Symbol cur = 0;
    for (Symbol s = 1; s <= n; ++s) {
        if (alive[s] && (!first_symbols || first_symbols->count(s))) {
            cur = s;
            break;
        }
    }
    if (cur == 0)
        throw ValidationError("shift space is empty under the given constraint");
    // The next symbol depends only on the current one, so the greedy walk
    // closes a cycle within n steps.
    std::vector<std::size_t> seen_at(n + 1, SIZE_MAX);
    std::vector<Symbol> walk;
    while (seen_at[cur] == SIZE_MAX) {
        seen_at[cur] = walk.size();
        walk.push_back(cur);
        Symbol next = 0;
        for (Symbol t = 1; t <= n; ++t) {
            if (alive[t] && arc[cur][t]) {
                next = t;
                break;
            }
        }
        cur = next;
    }
    const auto start = static_cast<std::ptrdiff_t>(seen_at[cur]);
    return {Word(std::vector<Symbol>(walk.begin(), walk.begin() + start)),
            Word(std::vector<Symbol>(walk.begin() + start, walk.end()))};
}

} // namespace topskit
