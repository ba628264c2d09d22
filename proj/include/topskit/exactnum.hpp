#ifndef TOPSKIT_EXACTNUM_HPP
#define TOPSKIT_EXACTNUM_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace topskit {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

constexpr Ordering invert(Ordering o) noexcept
{
    return static_cast<Ordering>(-static_cast<int>(o));
}

const char* to_string(Ordering o) noexcept;

// Polynomial with integer coefficients, lowest degree first. The leading
// coefficient is nonzero unless the polynomial is zero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly monomial(const Integer& c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t i) const;
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    Rational eval(const Rational& x) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    // "[c0,c1,...]"
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

// Q(theta) where theta is the unique real root of a squarefree integer
// polynomial inside a rational isolating interval. The polynomial need not be
// irreducible: zero tests go through gcd + root counting instead of relying
// on a nonzero remainder.
class NumberField {
public:
    // Throws ValidationError unless [lo, hi] contains exactly one root of the
    // squarefree part of poly and that root is irrational-looking (the caller
    // handles the rational-root case before getting here).
    NumberField(const IntPoly& poly, const Rational& lo, const Rational& hi);

    const IntPoly& defining_poly() const noexcept { return poly_; }
    int degree() const noexcept { return poly_.degree(); }
    const Rational& given_lower() const noexcept { return given_lo_; }
    const Rational& given_upper() const noexcept { return given_hi_; }

    // Both fields adjoin the same real number with the same defining poly.
    bool same_as(const NumberField& other) const;

    using Element = std::vector<Rational>; // padded to degree() entries

    Element reduce(std::vector<Rational> p) const;
    Element multiply(const Element& a, const Element& b) const;
    // Throws DomainError when a represents zero.
    Element inverse(const Element& a) const;

    int sign(const Element& a) const;
    bool is_zero(const Element& a) const;
    // Closed rational interval containing the value, of width <= 2^-bits.
    std::pair<Rational, Rational> enclose(const Element& a, unsigned bits) const;
    // Characteristic polynomial of multiplication-by-a, as a rational poly.
    std::vector<Rational> charpoly(const Element& a) const;

private:
    std::pair<Rational, Rational> eval_interval(const Element& a, const Rational& lo,
                                                const Rational& hi) const;
    void bisect(Rational& lo, Rational& hi) const;

    IntPoly poly_;
    std::vector<std::vector<Rational>> sturm_;
    Rational given_lo_, given_hi_;
    Rational lo_, hi_; // refined isolating interval
    int sign_at_lo_ = 0;
};

// An exact real number: either a rational, or an element of a single real
// algebraic extension Q(theta). Values are immutable.
class ExactReal {
public:
    ExactReal();
    ExactReal(long v);
    ExactReal(int v) : ExactReal(static_cast<long>(v)) {}
    ExactReal(const Integer& v);
    ExactReal(Rational v);

    static ExactReal fraction(long num, long den);
    // The unique real root of poly in [lo, hi]. A root that turns out to be
    // rational is returned as a rational.
    static ExactReal algebraic(const IntPoly& poly, const Rational& lo, const Rational& hi);
    // Value sum_i coeffs[i] * theta^i in the given field.
    static ExactReal in_field(std::shared_ptr<const NumberField> field,
                              std::vector<Rational> coeffs);
    // "p/q", integers, decimals, or "poly:[c0,c1,...]@[lo,hi]".
    static ExactReal parse(std::string_view text);

    bool is_rational() const noexcept { return field_ == nullptr; }
    const Rational& rational_value() const;
    const std::shared_ptr<const NumberField>& field() const noexcept { return field_; }
    const std::vector<Rational>& field_coefficients() const noexcept { return coeffs_; }

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    ExactReal operator-() const;
    ExactReal abs() const { return sign() < 0 ? -*this : *this; }
    ExactReal pow(unsigned n) const;

    std::pair<Rational, Rational> enclosure(unsigned bits) const;
    // For rendering only.
    double approx() const;

    // Rationals as "p/q" or "p"; algebraic values as
    // "poly:[...]@[lo,hi]", which parse() reads back to an equal value.
    std::string to_string() const;

    friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
    friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
    friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
    friend ExactReal operator/(const ExactReal& a, const ExactReal& b);
    ExactReal& operator+=(const ExactReal& b) { return *this = *this + b; }
    ExactReal& operator-=(const ExactReal& b) { return *this = *this - b; }
    ExactReal& operator*=(const ExactReal& b) { return *this = *this * b; }
    ExactReal& operator/=(const ExactReal& b) { return *this = *this / b; }

    friend bool operator==(const ExactReal& a, const ExactReal& b);
    friend std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b);

private:
    void normalize();

    std::shared_ptr<const NumberField> field_;
    std::vector<Rational> coeffs_; // rational: single entry
};

enum class ArithOp { Add, Sub, Mul, Div };

Ordering compare(const ExactReal& a, const ExactReal& b);
ExactReal arith(const ExactReal& a, const ExactReal& b, ArithOp op);
// Exact sign of p(x).
int sign_at(const IntPoly& p, const ExactReal& x);
ExactReal eval(const IntPoly& p, const ExactReal& x);

const ExactReal& min(const ExactReal& a, const ExactReal& b);
const ExactReal& max(const ExactReal& a, const ExactReal& b);

// Reads "p/q", "-7", "0.625".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

} // namespace topskit

#endif
