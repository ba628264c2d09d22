#include "ratpoly.hpp"

#include "topskit/error.hpp"

#include <algorithm>

namespace topskit::detail {

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

RatPoly from_int(const IntPoly& p)
{
    RatPoly r;
    r.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients())
        r.emplace_back(c);
    return r;
}

IntPoly to_primitive_int(const RatPoly& p)
{
    if (p.empty())
        return {};
    Integer den = 1;
    for (const auto& c : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.size());
    Integer content = 0;
    for (const auto& c : p) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (p.back() < 0)
        content = -content;
    for (auto& c : out)
        c /= content;
    return IntPoly(std::move(out));
}

RatPoly add(const RatPoly& a, const RatPoly& b)
{
    RatPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b)
{
    RatPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

RatPoly mul(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    RatPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.empty())
        throw DomainError("polynomial division by zero");
    RatPoly rem = a;
    trim(rem);
    if (rem.size() < b.size())
        return {RatPoly{}, rem};
    RatPoly quo(rem.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational c = rem[k + b.size() - 1] / lead;
        quo[k] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[k + j] -= c * b[j];
    }
    rem.resize(b.size() - 1);
    trim(rem);
    trim(quo);
    return {quo, rem};
}

RatPoly derivative(const RatPoly& p)
{
    if (p.size() <= 1)
        return {};
    RatPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        d[i - 1] = p[i] * static_cast<long>(i);
    trim(d);
    return d;
}

RatPoly monic(RatPoly p)
{
    trim(p);
    if (p.empty())
        return p;
    Rational lead = p.back();
    for (auto& c : p)
        c /= lead;
    return p;
}

RatPoly gcd(RatPoly a, RatPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

RatPoly squarefree_part(const RatPoly& p)
{
    if (p.size() <= 1)
        return monic(p);
    RatPoly g = gcd(p, derivative(p));
    return monic(divmod(p, g).first);
}

Rational eval(const RatPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

int sign(const Rational& q)
{
    return sgn(q);
}

std::vector<RatPoly> sturm_chain(const RatPoly& p)
{
    std::vector<RatPoly> chain;
    RatPoly a = p;
    trim(a);
    if (a.empty())
        return chain;
    chain.push_back(a);
    RatPoly b = derivative(a);
    while (!b.empty()) {
        chain.push_back(b);
        RatPoly r = divmod(chain[chain.size() - 2], b).second;
        for (auto& c : r)
            c = -c;
        b = std::move(r);
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x)
{
    int variations = 0;
    int last = 0;
    for (const auto& q : chain) {
        int s = sign(eval(q, x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++variations;
        last = s;
    }
    return variations;
}

int count_roots(const std::vector<RatPoly>& chain, const Rational& lo, const Rational& hi)
{
    if (chain.empty() || hi < lo)
        return 0;
    // Sturm counts roots in (lo, hi]; the closed endpoint is added by hand.
    int n = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (eval(chain.front(), lo) == 0)
        ++n;
    return n;
}

} // namespace topskit::detail
