#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace dqs {

using Int = mpz_class;

// Raised when an evaluation hits a pole (zero denominator, excluded
// summation index, log of a zero of R, ...).
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact rational scalar, the base field for every coefficient in the
// library.  Values are always stored canonically: positive denominator,
// gcd(|num|, den) = 1.  Equality is therefore structural equality.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}           // NOLINT: implicit on purpose
    Rational(const Int& n) : q_(n) {}     // NOLINT
    Rational(long num, long den) : q_(num, den) { canonicalize(); }
    Rational(const Int& num, const Int& den) : q_(num, den) { canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    Int numerator() const { return Int(q_.get_num()); }
    Int denominator() const { return Int(q_.get_den()); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw PoleError("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const {
        if (is_zero()) throw PoleError("Rational: inverse of zero");
        return Rational(mpq_class(1) / q_);
    }
    Rational pow(unsigned e) const;

    // Upper bound on |value| as a double (never underestimates).
    double abs_double_upper() const;

    std::string str() const;

private:
    void canonicalize() {
        if (q_.get_den() == 0) throw PoleError("Rational: zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

// C(n, k) over exact integers; 0 outside 0 <= k <= n.  Rows up to a small
// cap are memoized since the family constructors hit the same row
// repeatedly.
Int binomial(unsigned long n, long k);

// Sum_{k=a}^{b} 1/k^p, exact.  Empty range (a > b) gives 0; a range
// containing 0 is a pole.
Rational power_sum(unsigned p, long a, long b);

// "3/2" -> 3/2; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Exact complex literals RE, IMi or RE+IMi with rational components,
// e.g. "-3", "3/2+1/2i", "2-i".  Returns (re, im).
std::pair<Rational, Rational> parse_complex(const std::string& s);

}  // namespace dqs
