#include "topskit/error.hpp"
#include "topskit/symbolic.hpp"

#include <doctest.h>

#include <random>

using namespace topskit;

namespace {

InfiniteWord eps(const char* s) { return InfiniteWord::parse(s); }

InfiniteWord random_eps(std::mt19937& rng, Symbol n)
{
    std::uniform_int_distribution<Symbol> sym(1, n);
    std::uniform_int_distribution<std::size_t> len(0, 4);
    Word pre, per;
    for (std::size_t i = len(rng); i > 0; --i)
        pre.push_back(sym(rng));
    for (std::size_t i = len(rng) + 1; i > 0; --i)
        per.push_back(sym(rng));
    return {pre, per};
}

} // namespace

TEST_CASE("canonical form")
{
    CHECK(eps("3(1)") == InfiniteWord(Word{3, 1}, Word{1, 1}));
    CHECK(eps("(1212)").period() == Word{1, 2});
    CHECK(eps("12(12)") == eps("(12)"));
    CHECK(eps("2(12)") == eps("(21)"));
    CHECK(eps("3(1)").to_string() == "3(1)");
    CHECK(eps("10,2(11,)").preperiod() == Word{10, 2});
    InfiniteWord big(Word{}, Word{12});
    CHECK(InfiniteWord::parse(big.to_string()) == big);
    InfiniteWord big2(Word{3}, Word{10});
    CHECK(InfiniteWord::parse(big2.to_string()) == big2);
    CHECK_THROWS_AS(eps("12"), ParseError);
    CHECK_THROWS_AS(eps("1()"), ParseError);
    CHECK_THROWS_AS(eps("1(0)"), ParseError);
}

TEST_CASE("contains")
{
    BannedSet b{Word{1, 2}, Word{2, 2}};
    CHECK(contains(eps("2(1)"), b));
    CHECK_FALSE(contains(eps("12(1)"), b));
    CHECK(contains(eps("(1)"), BannedSet{}));
    CHECK_FALSE(contains(eps("(12)"), BannedSet{Word{2, 1}}));
}

TEST_CASE("shift")
{
    CHECK(shift(eps("3(1)")) == eps("(1)"));
    CHECK(shift(eps("(1)")) == eps("(1)"));
    CHECK(shift(eps("12(4)")) == eps("2(4)"));
    CHECK(shift(eps("(123)")) == eps("(231)"));
}

TEST_CASE("compare_lex")
{
    CHECK(compare_lex(eps("12(4)"), eps("23(1)")) == Ordering::Less);
    CHECK(compare_lex(eps("(1)"), eps("(1)")) == Ordering::Equal);
    CHECK(compare_lex(eps("32(4)"), eps("43(1)")) == Ordering::Less);
    CHECK(compare_lex(eps("(12)"), eps("1(21)")) == Ordering::Equal);
    CHECK(compare_lex(eps("(12)"), eps("12(1)")) == Ordering::Greater);
}

TEST_CASE("word partial order")
{
    CHECK(word_partial_order(Word{1, 2}, Word{2, 1}) == WordOrder::Less);
    CHECK(word_partial_order(Word{1}, Word{1, 2}) == WordOrder::Incomparable);
    CHECK(word_partial_order(Word{2, 1}, Word{2, 1}) == WordOrder::Equal);
    CHECK(word_partial_order(Word{2, 2}, Word{2, 1}) == WordOrder::Greater);

    // Oracle: wx <= w'x' for every pair of continuations of length 3.
    const Symbol n = 3;
    auto all_words = [&](std::size_t len) {
        std::vector<Word> out{Word{}};
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<Word> next;
            for (const auto& w : out)
                for (Symbol s = 1; s <= n; ++s)
                    next.push_back(w + Word{s});
            out = std::move(next);
        }
        return out;
    };
    const auto tails = all_words(3);
    auto below = [&](const Word& w, const Word& v) {
        for (const auto& x : tails)
            for (const auto& y : tails)
                if (w + x + Word{1, 1, 1, 1} > v + y + Word{1, 1, 1, 1})
                    return false;
        return true;
    };
    for (const auto& w : all_words(2))
        for (const auto& v : all_words(2)) {
            if (w == v)
                continue;
            WordOrder o = word_partial_order(w, v);
            CHECK((o == WordOrder::Less) == below(w, v));
            CHECK((o == WordOrder::Greater) == below(v, w));
        }
    for (const auto& w : all_words(1))
        for (const auto& v : all_words(2))
            if (w.is_prefix_of(v))
                CHECK(word_partial_order(w, v) == WordOrder::Incomparable);
}

TEST_CASE("reduce_banned")
{
    CHECK(reduce_banned(BannedSet{Word{1, 2}, Word{1, 1, 2}, Word{2, 2}}) ==
          BannedSet{Word{1, 2}, Word{2, 2}});
    CHECK(reduce_banned(BannedSet{}).empty());
    CHECK(reduce_banned(BannedSet{Word{2, 1, 1}, Word{2, 1, 1, 1}}) == BannedSet{Word{2, 1, 1}});
}

TEST_CASE("min_string")
{
    // Edge compatibility of the two-vertex example: labels 1,2 leave v1,
    // 3,4 leave v2; targets are v1, v2, v1, v2.
    const std::vector<int> source{0, 0, 1, 1}, target{0, 1, 0, 1};
    BannedSet b;
    for (Symbol i = 1; i <= 4; ++i)
        for (Symbol j = 1; j <= 4; ++j)
            if (target[i - 1] != source[j - 1])
                b.insert(Word{i, j});
    CHECK(min_string(Alphabet(4), b, std::set<Symbol>{1, 2}) == eps("(1)"));
    CHECK(min_string(Alphabet(4), b, std::set<Symbol>{3, 4}) == eps("3(1)"));
    CHECK(min_string(Alphabet(2), BannedSet{}) == eps("(1)"));
    CHECK(min_string(Alphabet(2), BannedSet{Word{1, 1}}) == eps("(12)"));
    CHECK(min_string(Alphabet(2), BannedSet{Word{1}}) == eps("(2)"));
    CHECK_THROWS_AS(min_string(Alphabet(1), BannedSet{Word{1, 1}}), ValidationError);
    CHECK_THROWS_AS(min_string(Alphabet(2), BannedSet{Word{1, 1, 1}}), ValidationError);
}

TEST_CASE("properties")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<Symbol> sym(1, 3);
    for (int round = 0; round < 200; ++round) {
        BannedSet b;
        const int count = static_cast<int>(rng() % 4);
        for (int k = 0; k < count; ++k) {
            Word w;
            for (std::size_t i = 1 + rng() % 3; i > 0; --i)
                w.push_back(sym(rng));
            b.insert(w);
        }
        const BannedSet reduced = reduce_banned(b);
        for (int t = 0; t < 20; ++t) {
            InfiniteWord x = random_eps(rng, 3);
            if (contains(x, b))
                CHECK(contains(shift(x), b));
            CHECK(contains(x, b) == contains(x, reduced));
        }
    }
    for (int round = 0; round < 500; ++round) {
        InfiniteWord x = random_eps(rng, 3), y = random_eps(rng, 3), z = random_eps(rng, 3);
        CHECK(compare_lex(x, y) == invert(compare_lex(y, x)));
        if (compare_lex(x, y) != Ordering::Greater && compare_lex(y, z) != Ordering::Greater)
            CHECK(compare_lex(x, z) != Ordering::Greater);
        auto k = first_difference(x, y);
        CHECK((compare_lex(x, y) == Ordering::Equal) == !k.has_value());
        if (k) {
            Rational d(1);
            for (std::size_t i = 0; i < *k; ++i)
                d /= 2;
            CHECK(metric(x, y) == d);
            CHECK(x.prefix(*k - 1) == y.prefix(*k - 1));
            CHECK(x.at(*k - 1) != y.at(*k - 1));
        } else {
            CHECK(metric(x, y) == 0);
        }
    }
    // min_string is a member and below sampled members.
    for (int round = 0; round < 50; ++round) {
        BannedSet b;
        for (Symbol i = 1; i <= 3; ++i)
            for (Symbol j = 1; j <= 3; ++j)
                if (rng() % 3 == 0)
                    b.insert(Word{i, j});
        InfiniteWord m = InfiniteWord::constant(1);
        try {
            m = min_string(Alphabet(3), b);
        } catch (const ValidationError&) {
            continue;
        }
        CHECK(contains(m, b));
        int members = 0;
        for (int t = 0; t < 1000 && members < 1000; ++t) {
            InfiniteWord y = random_eps(rng, 3);
            if (!contains(y, b))
                continue;
            ++members;
            CHECK(compare_lex(m, y) != Ordering::Greater);
        }
    }
}
