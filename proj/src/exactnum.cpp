#include "topskit/exactnum.hpp"

#include "ratpoly.hpp"
#include "topskit/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace topskit {

using detail::RatPoly;

const char* to_string(Ordering o) noexcept
{
    switch (o) {
    case Ordering::Less:
        return "LT";
    case Ordering::Equal:
        return "EQ";
    case Ordering::Greater:
        return "GT";
    }
    return "?";
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

IntPoly::IntPoly(std::initializer_list<long> coefficients)
{
    for (long c : coefficients)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree)
{
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Rational IntPoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + coeffs_[i];
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            s += ',';
        s += coeffs_[i].get_str();
    }
    return s + "]";
}

// ---------------------------------------------------------------- parsing

Rational parse_rational(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty())
        throw ParseError("empty number");
    auto bad = [&]() { return ParseError("malformed number '" + std::string(text) + "'"); };
    auto check_int = [&](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        if (i == s.size())
            throw bad();
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw bad();
    };
    if (auto slash = t.find('/'); slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        check_int(num, true);
        check_int(den, false);
        if (num[0] == '+')
            num.erase(0, 1);
        Integer d(den, 10);
        if (d == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational q(Integer(num, 10), d);
        q.canonicalize();
        return q;
    }
    if (auto dot = t.find('.'); dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+'))
            ip.erase(0, 1);
        if (ip.empty())
            ip = "0";
        if (fp.empty())
            throw bad();
        check_int(ip, false);
        check_int(fp, false);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        Rational q(Integer(ip + fp, 10), den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    check_int(t, true);
    if (t[0] == '+')
        t.erase(0, 1);
    return Rational(Integer(t, 10));
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

std::vector<std::string> split_list(std::string_view body, std::string_view text)
{
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("expected bracketed list in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
    std::vector<std::string> out;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

// ---------------------------------------------------------------- NumberField

NumberField::NumberField(const IntPoly& poly, const Rational& lo, const Rational& hi)
    : given_lo_(lo), given_hi_(hi)
{
    if (hi < lo)
        throw ValidationError("isolating interval has lo > hi");
    RatPoly sq = detail::squarefree_part(detail::from_int(poly));
    if (detail::degree(sq) < 1)
        throw ValidationError("defining polynomial has no roots");
    poly_ = detail::to_primitive_int(sq);
    sturm_ = detail::sturm_chain(detail::from_int(poly_));
    int roots = detail::count_roots(sturm_, lo, hi);
    if (roots != 1)
        throw ValidationError("isolating interval [" + to_string(lo) + ", " + to_string(hi) +
                              "] contains " + std::to_string(roots) + " roots of " +
                              poly_.to_string() + ", expected exactly one");
    lo_ = lo;
    hi_ = hi;
    sign_at_lo_ = detail::sign(poly_.eval(lo_));
    if (sign_at_lo_ == 0) {
        hi_ = lo_;
    } else if (poly_.eval(hi_) == 0) {
        lo_ = hi_;
    }
    // Cache a tight interval so most sign queries resolve without refinement.
    Rational target(1);
    target /= Rational(Integer(1) << 64);
    while (hi_ - lo_ > target)
        bisect(lo_, hi_);
}

void NumberField::bisect(Rational& lo, Rational& hi) const
{
    if (lo == hi)
        return;
    Rational mid = (lo + hi) / 2;
    int s = detail::sign(poly_.eval(mid));
    if (s == 0) {
        lo = hi = mid;
    } else if (s == sign_at_lo_) {
        lo = mid;
    } else {
        hi = mid;
    }
}

bool NumberField::same_as(const NumberField& other) const
{
    if (this == &other)
        return true;
    if (!(poly_ == other.poly_))
        return false;
    Rational lo = std::max(lo_, other.lo_);
    Rational hi = std::min(hi_, other.hi_);
    return lo <= hi && detail::count_roots(sturm_, lo, hi) == 1;
}

NumberField::Element NumberField::reduce(std::vector<Rational> p) const
{
    detail::trim(p);
    const std::size_t d = static_cast<std::size_t>(degree());
    if (p.size() > d) {
        RatPoly m = detail::from_int(poly_);
        p = detail::divmod(p, m).second;
    }
    p.resize(d);
    return p;
}

NumberField::Element NumberField::multiply(const Element& a, const Element& b) const
{
    return reduce(detail::mul(a, b));
}

bool NumberField::is_zero(const Element& a) const
{
    RatPoly r = a;
    detail::trim(r);
    if (r.empty())
        return true;
    RatPoly g = detail::gcd(r, detail::from_int(poly_));
    if (detail::degree(g) < 1)
        return false;
    // Roots of g are roots of the defining poly; theta is the only one inside
    // the isolating interval.
    return detail::count_roots(detail::sturm_chain(g), lo_, hi_) > 0;
}

NumberField::Element NumberField::inverse(const Element& a) const
{
    RatPoly r = a;
    detail::trim(r);
    if (r.empty() || is_zero(a))
        throw DomainError("division by zero");
    RatPoly m = detail::from_int(poly_);
    RatPoly g = detail::gcd(r, m);
    if (detail::degree(g) >= 1)
        m = detail::divmod(m, g).first; // theta is a root of the cofactor
    // Extended Euclid: s*r + t*m = 1.
    RatPoly old_r = r, cur_r = m;
    RatPoly old_s{Rational(1)}, cur_s{};
    while (!cur_r.empty()) {
        auto [q, rem] = detail::divmod(old_r, cur_r);
        RatPoly next_s = detail::sub(old_s, detail::mul(q, cur_s));
        old_r = std::move(cur_r);
        cur_r = std::move(rem);
        old_s = std::move(cur_s);
        cur_s = std::move(next_s);
    }
    // old_r is a nonzero constant.
    Rational c = old_r.at(0);
    for (auto& x : old_s)
        x /= c;
    return reduce(std::move(old_s));
}

std::pair<Rational, Rational> NumberField::eval_interval(const Element& a, const Rational& lo,
                                                         const Rational& hi) const
{
    // Horner over rational intervals.
    Rational alo = 0, ahi = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rational nlo = std::min({p1, p2, p3, p4});
        Rational nhi = std::max({p1, p2, p3, p4});
        alo = nlo + a[i];
        ahi = nhi + a[i];
    }
    return {alo, ahi};
}

int NumberField::sign(const Element& a) const
{
    auto [elo, ehi] = eval_interval(a, lo_, hi_);
    if (elo > 0)
        return 1;
    if (ehi < 0)
        return -1;
    if (is_zero(a))
        return 0;
    Rational lo = lo_, hi = hi_;
    for (;;) {
        bisect(lo, hi);
        std::tie(elo, ehi) = eval_interval(a, lo, hi);
        if (elo > 0)
            return 1;
        if (ehi < 0)
            return -1;
        if (lo == hi)
            return detail::sign(elo);
    }
}

std::pair<Rational, Rational> NumberField::enclose(const Element& a, unsigned bits) const
{
    Rational width(1);
    width /= Rational(Integer(1) << bits);
    Rational lo = lo_, hi = hi_;
    for (;;) {
        auto e = eval_interval(a, lo, hi);
        if (e.second - e.first <= width)
            return e;
        bisect(lo, hi);
    }
}

std::vector<Rational> NumberField::charpoly(const Element& a) const
{
    // Faddeev-LeVerrier on the matrix of multiplication by a.
    const std::size_t d = static_cast<std::size_t>(degree());
    std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d));
    Element basis(d);
    for (std::size_t k = 0; k < d; ++k) {
        std::fill(basis.begin(), basis.end(), Rational(0));
        basis[k] = 1;
        Element col = multiply(a, basis);
        for (std::size_t r = 0; r < d; ++r)
            mat[r][k] = col[r];
    }
    auto matmul = [d](const auto& x, const auto& y) {
        std::vector<std::vector<Rational>> z(d, std::vector<Rational>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (x[i][k] != 0)
                    for (std::size_t j = 0; j < d; ++j)
                        z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    std::vector<Rational> c(d + 1);
    c[d] = 1;
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (std::size_t k = 1; k <= d; ++k) {
        m = matmul(mat, m);
        for (std::size_t i = 0; i < d; ++i)
            m[i][i] += c[d - k + 1];
        auto am = matmul(mat, m);
        Rational tr = 0;
        for (std::size_t i = 0; i < d; ++i)
            tr += am[i][i];
        c[d - k] = -tr / static_cast<long>(k);
    }
    return c;
}

// ---------------------------------------------------------------- ExactReal

ExactReal::ExactReal() : coeffs_{Rational(0)} {}

ExactReal::ExactReal(long v) : coeffs_{Rational(v)} {}

ExactReal::ExactReal(const Integer& v) : coeffs_{Rational(v)} {}

ExactReal::ExactReal(Rational v)
{
    v.canonicalize();
    coeffs_.push_back(std::move(v));
}

ExactReal ExactReal::fraction(long num, long den)
{
    if (den == 0)
        throw DomainError("division by zero");
    Rational q(num, den);
    q.canonicalize();
    return ExactReal(q);
}

ExactReal ExactReal::algebraic(const IntPoly& poly, const Rational& lo, const Rational& hi)
{
    if (poly.is_zero())
        throw ValidationError("zero polynomial has no isolated root");
    if (hi < lo)
        throw ValidationError("isolating interval has lo > hi");
    RatPoly sq = detail::squarefree_part(detail::from_int(poly));
    auto chain = detail::sturm_chain(sq);
    int roots = detail::count_roots(chain, lo, hi);
    if (roots != 1)
        throw ValidationError("isolating interval [" + topskit::to_string(lo) + ", " + topskit::to_string(hi) +
                              "] contains " + std::to_string(roots) + " roots of " +
                              poly.to_string() + ", expected exactly one");
    if (detail::degree(sq) == 1)
        return ExactReal(Rational(-sq[0] / sq[1]));
    if (detail::eval(sq, lo) == 0)
        return ExactReal(lo);
    if (detail::eval(sq, hi) == 0)
        return ExactReal(hi);
    auto field = std::make_shared<const NumberField>(poly, lo, hi);
    std::vector<Rational> gen(static_cast<std::size_t>(field->degree()));
    gen[1] = 1;
    return in_field(std::move(field), std::move(gen));
}

ExactReal ExactReal::in_field(std::shared_ptr<const NumberField> field, std::vector<Rational> coeffs)
{
    ExactReal r;
    if (!field) {
        detail::trim(coeffs);
        if (coeffs.size() > 1)
            throw DomainError("non-constant coefficients without a number field");
        return coeffs.empty() ? ExactReal() : ExactReal(coeffs[0]);
    }
    r.coeffs_ = field->reduce(std::move(coeffs));
    r.field_ = std::move(field);
    r.normalize();
    return r;
}

void ExactReal::normalize()
{
    if (!field_)
        return;
    bool constant = std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                                [](const Rational& c) { return c == 0; });
    if (constant) {
        field_.reset();
        coeffs_.resize(1);
    }
}

ExactReal ExactReal::parse(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.rfind("poly:", 0) == 0) {
        auto at = t.find('@');
        if (at == std::string::npos)
            throw ParseError("algebraic number needs '@[lo,hi]': '" + std::string(text) + "'");
        std::vector<Integer> coeffs;
        for (const auto& c : split_list(std::string_view(t).substr(5, at - 5), text)) {
            Rational q = parse_rational(c);
            if (q.get_den() != 1)
                throw ParseError("polynomial coefficients must be integers: '" + c + "'");
            coeffs.push_back(q.get_num());
        }
        auto bounds = split_list(std::string_view(t).substr(at + 1), text);
        if (bounds.size() != 2)
            throw ParseError("isolating interval needs two endpoints: '" + std::string(text) + "'");
        return algebraic(IntPoly(std::move(coeffs)), parse_rational(bounds[0]),
                         parse_rational(bounds[1]));
    }
    return ExactReal(parse_rational(t));
}

const Rational& ExactReal::rational_value() const
{
    if (field_)
        throw DomainError("value is not rational");
    return coeffs_[0];
}

int ExactReal::sign() const
{
    if (!field_)
        return sgn(coeffs_[0]);
    return field_->sign(coeffs_);
}

ExactReal ExactReal::operator-() const
{
    ExactReal r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

ExactReal ExactReal::pow(unsigned n) const
{
    ExactReal result(1L), base = *this;
    while (n) {
        if (n & 1U)
            result = result * base;
        n >>= 1U;
        if (n)
            base = base * base;
    }
    return result;
}

std::pair<Rational, Rational> ExactReal::enclosure(unsigned bits) const
{
    if (!field_)
        return {coeffs_[0], coeffs_[0]};
    return field_->enclose(coeffs_, bits);
}

double ExactReal::approx() const
{
    auto [lo, hi] = enclosure(64);
    Rational mid = (lo + hi) / 2;
    return mid.get_d();
}

namespace {

// Field shared by both operands; rationals adopt the other operand's field.
std::shared_ptr<const NumberField> common_field(const ExactReal& a, const ExactReal& b)
{
    const auto& fa = a.field();
    const auto& fb = b.field();
    if (!fa)
        return fb;
    if (!fb || fa == fb || fa->same_as(*fb))
        return fa;
    throw DomainError("operands belong to different algebraic number fields");
}

NumberField::Element lift(const ExactReal& x, const NumberField& field)
{
    if (x.is_rational()) {
        NumberField::Element e(static_cast<std::size_t>(field.degree()));
        e[0] = x.rational_value();
        return e;
    }
    return x.field_coefficients();
}

} // namespace

ExactReal operator+(const ExactReal& a, const ExactReal& b)
{
    if (!a.field_ && !b.field_)
        return ExactReal(Rational(a.coeffs_[0] + b.coeffs_[0]));
    auto f = common_field(a, b);
    auto x = lift(a, *f), y = lift(b, *f);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += y[i];
    return ExactReal::in_field(f, std::move(x));
}

ExactReal operator-(const ExactReal& a, const ExactReal& b)
{
    if (!a.field_ && !b.field_)
        return ExactReal(Rational(a.coeffs_[0] - b.coeffs_[0]));
    auto f = common_field(a, b);
    auto x = lift(a, *f), y = lift(b, *f);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] -= y[i];
    return ExactReal::in_field(f, std::move(x));
}

ExactReal operator*(const ExactReal& a, const ExactReal& b)
{
    if (!a.field_ && !b.field_)
        return ExactReal(Rational(a.coeffs_[0] * b.coeffs_[0]));
    auto f = common_field(a, b);
    if (!a.field_ || !b.field_) {
        const ExactReal& scalar = a.field_ ? b : a;
        const ExactReal& elem = a.field_ ? a : b;
        auto x = elem.coeffs_;
        for (auto& c : x)
            c *= scalar.coeffs_[0];
        return ExactReal::in_field(f, std::move(x));
    }
    return ExactReal::in_field(f, f->multiply(a.coeffs_, b.coeffs_));
}

ExactReal operator/(const ExactReal& a, const ExactReal& b)
{
    if (!b.field_) {
        if (b.coeffs_[0] == 0)
            throw DomainError("division by zero");
        if (!a.field_)
            return ExactReal(Rational(a.coeffs_[0] / b.coeffs_[0]));
        auto x = a.coeffs_;
        for (auto& c : x)
            c /= b.coeffs_[0];
        return ExactReal::in_field(a.field_, std::move(x));
    }
    auto f = common_field(a, b);
    auto inv = f->inverse(b.coeffs_);
    return ExactReal::in_field(f, f->multiply(lift(a, *f), inv));
}

namespace {

// Squarefree polynomial vanishing at x.
RatPoly annihilator(const ExactReal& x)
{
    if (x.is_rational())
        return {Rational(-x.rational_value()), Rational(1)};
    return detail::squarefree_part(x.field()->charpoly(x.field_coefficients()));
}

int sign_of_poly_at(const RatPoly& p, const ExactReal& x)
{
    ExactReal acc;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + ExactReal(p[i]);
    return acc.sign();
}

Ordering order_of(int s)
{
    return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

// Both operands are algebraic over unrelated fields.
Ordering compare_across_fields(const ExactReal& a, const ExactReal& b)
{
    RatPoly g = detail::gcd(annihilator(a), annihilator(b));
    bool may_be_equal = detail::degree(g) >= 1 && sign_of_poly_at(g, a) == 0 &&
                        sign_of_poly_at(g, b) == 0;
    std::vector<RatPoly> chain;
    if (may_be_equal)
        chain = detail::sturm_chain(g);
    for (unsigned bits = 32;; bits *= 2) {
        auto [alo, ahi] = a.enclosure(bits);
        auto [blo, bhi] = b.enclosure(bits);
        if (ahi < blo)
            return Ordering::Less;
        if (bhi < alo)
            return Ordering::Greater;
        if (may_be_equal &&
            detail::count_roots(chain, std::min(alo, blo), std::max(ahi, bhi)) == 1)
            return Ordering::Equal;
    }
}

} // namespace

Ordering compare(const ExactReal& a, const ExactReal& b)
{
    if (a.is_rational() && b.is_rational())
        return order_of(cmp(a.rational_value(), b.rational_value()));
    const auto& fa = a.field();
    const auto& fb = b.field();
    if (!fa || !fb || fa == fb || fa->same_as(*fb))
        return order_of((a - b).sign());
    return compare_across_fields(a, b);
}

bool operator==(const ExactReal& a, const ExactReal& b)
{
    return compare(a, b) == Ordering::Equal;
}

std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b)
{
    switch (compare(a, b)) {
    case Ordering::Less:
        return std::strong_ordering::less;
    case Ordering::Greater:
        return std::strong_ordering::greater;
    default:
        return std::strong_ordering::equal;
    }
}

ExactReal arith(const ExactReal& a, const ExactReal& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return a + b;
    case ArithOp::Sub:
        return a - b;
    case ArithOp::Mul:
        return a * b;
    case ArithOp::Div:
        return a / b;
    }
    throw DomainError("unknown arithmetic operation");
}

ExactReal eval(const IntPoly& p, const ExactReal& x)
{
    ExactReal acc;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + ExactReal(c[i]);
    return acc;
}

int sign_at(const IntPoly& p, const ExactReal& x)
{
    if (x.is_rational())
        return sgn(p.eval(x.rational_value()));
    return eval(p, x).sign();
}

const ExactReal& min(const ExactReal& a, const ExactReal& b)
{
    return compare(b, a) == Ordering::Less ? b : a;
}

const ExactReal& max(const ExactReal& a, const ExactReal& b)
{
    return compare(b, a) == Ordering::Greater ? b : a;
}

std::string ExactReal::to_string() const
{
    if (!field_)
        return topskit::to_string(coeffs_[0]);
    const auto d = static_cast<std::size_t>(field_->degree());
    bool is_generator = true;
    for (std::size_t i = 0; i < d; ++i)
        if (coeffs_[i] != (i == 1 ? 1 : 0))
            is_generator = false;
    if (is_generator)
        return "poly:" + field_->defining_poly().to_string() + "@[" +
               topskit::to_string(field_->given_lower()) + "," +
               topskit::to_string(field_->given_upper()) + "]";
    RatPoly ann = annihilator(*this);
    if (detail::degree(ann) == 1)
        return topskit::to_string(Rational(-ann[0] / ann[1]));
    auto chain = detail::sturm_chain(ann);
    for (unsigned bits = 16;; bits += 16) {
        auto [lo, hi] = enclosure(bits);
        if (detail::count_roots(chain, lo, hi) == 1)
            return "poly:" + detail::to_primitive_int(ann).to_string() + "@[" +
                   topskit::to_string(lo) + "," + topskit::to_string(hi) + "]";
    }
}

} // namespace topskit
