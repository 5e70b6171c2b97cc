#pragma once

#include <initializer_list>
#include <vector>

#include "dqs/rational.hpp"

namespace dqs {

class CBall;
struct Precision;

// Polynomial in the formal symbol w over the rationals, with w standing
// for i*pi.  Since w^2 = -pi^2, the constants i*pi and pi^2 both live in
// this ring and all series coefficients stay exact.  Trailing zeros are
// stripped on construction, so equality is structural.
class CoeffW {
public:
    CoeffW() = default;
    CoeffW(long n) { if (n != 0) c_.assign(1, Rational(n)); }      // NOLINT
    CoeffW(const Rational& r) { if (!r.is_zero()) c_.assign(1, r); }  // NOLINT
    CoeffW(std::initializer_list<Rational> cs) : c_(cs) { trim(); }

    static CoeffW w() { return monomial(Rational(1), 1); }
    static CoeffW monomial(const Rational& coef, unsigned p) {
        CoeffW r;
        if (!coef.is_zero()) {
            r.c_.assign(p + 1, Rational(0));
            r.c_[p] = coef;
        }
        return r;
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(unsigned p) const {
        return p < c_.size() ? c_[p] : Rational(0);
    }

    CoeffW& operator+=(const CoeffW& o);
    CoeffW& operator-=(const CoeffW& o);
    CoeffW& operator*=(const CoeffW& o);

    friend CoeffW operator+(CoeffW a, const CoeffW& b) { return a += b; }
    friend CoeffW operator-(CoeffW a, const CoeffW& b) { return a -= b; }
    friend CoeffW operator*(CoeffW a, const CoeffW& b) { return a *= b; }
    friend CoeffW operator-(const CoeffW& a);
    friend bool operator==(const CoeffW& a, const CoeffW& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CoeffW& a, const CoeffW& b) { return !(a == b); }

    // Upper bound on |value| after the substitution w := i*pi.
    double abs_upper() const;

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Numeric substitution w := i*pi at the requested precision, with a
// reported absolute error radius.
CBall coeffw_eval(const CoeffW& c, Precision prec);

}  // namespace dqs
