#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "dqs/rational.hpp"

namespace dqs {

// Binary working precision for numeric evaluation.
struct Precision {
    unsigned bits;
    explicit Precision(unsigned b) : bits(b) {
        if (b < 64) throw std::invalid_argument("Precision: at least 64 bits required");
    }
};

// Complex number at a fixed binary precision together with a tracked
// worst-case absolute error radius.  This is the ulp-accumulation model:
// every operation is correctly rounded by MPFR and contributes at most one
// ulp of the result to the radius; radius bookkeeping itself is done in
// doubles inflated upward so it can never turn optimistic.  Exact inputs
// and exact operations keep the radius at exactly 0.
class CBall {
public:
    explicit CBall(Precision prec);
    CBall(const CBall& o);
    CBall(CBall&& o) noexcept;
    CBall& operator=(const CBall& o);
    CBall& operator=(CBall&& o) noexcept;
    ~CBall();

    static CBall zero(Precision prec) { return CBall(prec); }
    static CBall from_rational(const Rational& re, const Rational& im, Precision prec);
    static CBall from_long(long re, Precision prec) { return from_rational(Rational(re), Rational(0), prec); }
    static CBall pi(Precision prec);    // (pi, 0)
    static CBall i_pi(Precision prec);  // (0, pi)

    Precision precision() const { return Precision(static_cast<unsigned>(prec_)); }
    double radius() const { return rad_; }
    bool is_exact() const { return rad_ == 0.0; }
    void add_error(double r);

    double re_double() const { return mpfr_get_d(re_, MPFR_RNDN); }
    double im_double() const { return mpfr_get_d(im_, MPFR_RNDN); }
    std::string re_str() const { return to_str(re_); }
    std::string im_str() const { return to_str(im_); }

    // Upper bound on |value| + radius, respectively max(|value| - radius, 0).
    double abs_upper() const;
    double abs_lower() const;

    friend CBall add(const CBall& a, const CBall& b);
    friend CBall sub(const CBall& a, const CBall& b);
    friend CBall neg(const CBall& a);
    friend CBall mul(const CBall& a, const CBall& b);
    friend CBall div(const CBall& a, const CBall& b);
    friend CBall mul_rational(const CBall& a, const Rational& q);
    friend CBall mul_i(const CBall& a);  // exact rotation by i

    friend CBall log_paper(const Rational& re, const Rational& im, Precision prec);

private:
    std::string to_str(const mpfr_t x) const;

    mpfr_t re_, im_;
    double rad_;
    mpfr_prec_t prec_;
};

namespace ball_detail {

// Round a nonnegative radius term upward; up(0) == 0 so exactness survives.
inline double up(double x) {
    if (x == 0.0) return 0.0;
    return x * (1.0 + 0x1p-30) + 0x1p-1000;
}

double ulp_bound(const mpfr_t x, mpfr_prec_t prec, int ternary);

}  // namespace ball_detail

}  // namespace dqs
