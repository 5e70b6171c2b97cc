#include "dqs/ball.hpp"

#include <cmath>

namespace dqs {

namespace ball_detail {

double ulp_bound(const mpfr_t x, mpfr_prec_t prec, int ternary) {
    if (ternary == 0) return 0.0;  // correctly rounded and exact
    if (mpfr_zero_p(x)) return 0x1p-1060;
    long e = mpfr_get_exp(x);  // |x| in [2^(e-1), 2^e)
    long k = e - static_cast<long>(prec);
    if (k < -1060) return 0x1p-1060;
    if (k > 1020) return HUGE_VAL;
    return std::ldexp(1.0, static_cast<int>(k));
}

}  // namespace ball_detail

using ball_detail::ulp_bound;
using ball_detail::up;

CBall::CBall(Precision prec) : rad_(0.0), prec_(prec.bits) {
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
}

CBall::CBall(const CBall& o) : rad_(o.rad_), prec_(o.prec_) {
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
}

CBall::CBall(CBall&& o) noexcept : rad_(o.rad_), prec_(o.prec_) {
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
}

CBall& CBall::operator=(const CBall& o) {
    if (this != &o) {
        mpfr_set_prec(re_, o.prec_);
        mpfr_set_prec(im_, o.prec_);
        mpfr_set(re_, o.re_, MPFR_RNDN);
        mpfr_set(im_, o.im_, MPFR_RNDN);
        rad_ = o.rad_;
        prec_ = o.prec_;
    }
    return *this;
}

CBall& CBall::operator=(CBall&& o) noexcept {
    if (this != &o) {
        mpfr_swap(re_, o.re_);
        mpfr_swap(im_, o.im_);
        rad_ = o.rad_;
        prec_ = o.prec_;
    }
    return *this;
}

CBall::~CBall() {
    mpfr_clear(re_);
    mpfr_clear(im_);
}

CBall CBall::from_rational(const Rational& re, const Rational& im, Precision prec) {
    CBall r(prec);
    int tr = mpfr_set_q(r.re_, re.raw().get_mpq_t(), MPFR_RNDN);
    int ti = mpfr_set_q(r.im_, im.raw().get_mpq_t(), MPFR_RNDN);
    r.rad_ = up(ulp_bound(r.re_, r.prec_, tr) + ulp_bound(r.im_, r.prec_, ti));
    return r;
}

CBall CBall::pi(Precision prec) {
    CBall r(prec);
    int t = mpfr_const_pi(r.re_, MPFR_RNDN);
    r.rad_ = up(ulp_bound(r.re_, r.prec_, t));
    return r;
}

CBall CBall::i_pi(Precision prec) {
    CBall r(prec);
    int t = mpfr_const_pi(r.im_, MPFR_RNDN);
    r.rad_ = up(ulp_bound(r.im_, r.prec_, t));
    return r;
}

void CBall::add_error(double r) {
    if (r < 0) throw std::invalid_argument("CBall::add_error: negative radius");
    rad_ = up(rad_ + r);
}

double CBall::abs_upper() const {
    mpfr_t h;
    mpfr_init2(h, 64);
    mpfr_hypot(h, re_, im_, MPFR_RNDU);
    double d = mpfr_get_d(h, MPFR_RNDU);
    mpfr_clear(h);
    return up(d) + rad_;
}

double CBall::abs_lower() const {
    mpfr_t h;
    mpfr_init2(h, 64);
    mpfr_hypot(h, re_, im_, MPFR_RNDD);
    double d = mpfr_get_d(h, MPFR_RNDD);
    mpfr_clear(h);
    double lo = d * (1.0 - 0x1p-30) - rad_;
    return lo > 0 ? lo : 0.0;
}

std::string CBall::to_str(const mpfr_t x) const {
    // enough decimal digits to reproduce the binary value
    int digits = static_cast<int>(static_cast<double>(prec_) * 0.30103) + 3;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

CBall add(const CBall& a, const CBall& b) {
    CBall r(a.precision());
    int tr = mpfr_add(r.re_, a.re_, b.re_, MPFR_RNDN);
    int ti = mpfr_add(r.im_, a.im_, b.im_, MPFR_RNDN);
    r.rad_ = up(a.rad_ + b.rad_ + ulp_bound(r.re_, r.prec_, tr) + ulp_bound(r.im_, r.prec_, ti));
    return r;
}

CBall sub(const CBall& a, const CBall& b) {
    CBall r(a.precision());
    int tr = mpfr_sub(r.re_, a.re_, b.re_, MPFR_RNDN);
    int ti = mpfr_sub(r.im_, a.im_, b.im_, MPFR_RNDN);
    r.rad_ = up(a.rad_ + b.rad_ + ulp_bound(r.re_, r.prec_, tr) + ulp_bound(r.im_, r.prec_, ti));
    return r;
}

CBall neg(const CBall& a) {
    CBall r(a);
    mpfr_neg(r.re_, r.re_, MPFR_RNDN);  // exact
    mpfr_neg(r.im_, r.im_, MPFR_RNDN);
    return r;
}

CBall mul_i(const CBall& a) {
    CBall r(a.precision());
    mpfr_neg(r.re_, a.im_, MPFR_RNDN);  // exact
    mpfr_set(r.im_, a.re_, MPFR_RNDN);
    r.rad_ = a.rad_;
    return r;
}

CBall mul(const CBall& a, const CBall& b) {
    CBall r(a.precision());
    // single correctly rounded fused forms per component
    int tr = mpfr_fmms(r.re_, a.re_, b.re_, a.im_, b.im_, MPFR_RNDN);
    int ti = mpfr_fmma(r.im_, a.re_, b.im_, a.im_, b.re_, MPFR_RNDN);
    double ma = a.abs_upper(), mb = b.abs_upper();
    r.rad_ = up(a.rad_ * mb + b.rad_ * ma + a.rad_ * b.rad_ +
                ulp_bound(r.re_, r.prec_, tr) + ulp_bound(r.im_, r.prec_, ti));
    return r;
}

CBall mul_rational(const CBall& a, const Rational& q) {
    CBall r(a.precision());
    int tr = mpfr_mul_q(r.re_, a.re_, q.raw().get_mpq_t(), MPFR_RNDN);
    int ti = mpfr_mul_q(r.im_, a.im_, q.raw().get_mpq_t(), MPFR_RNDN);
    r.rad_ = up(a.rad_ * q.abs_double_upper() +
                ulp_bound(r.re_, r.prec_, tr) + ulp_bound(r.im_, r.prec_, ti));
    return r;
}

CBall div(const CBall& a, const CBall& b) {
    double bl = b.abs_lower();
    if (bl <= 0.0) throw std::domain_error("CBall: division by a ball containing zero");
    CBall r(a.precision());
    mpfr_t d, n1, n2;
    mpfr_init2(d, a.prec_);
    mpfr_init2(n1, a.prec_);
    mpfr_init2(n2, a.prec_);
    mpfr_fmma(d, b.re_, b.re_, b.im_, b.im_, MPFR_RNDN);       // |b|^2
    mpfr_fmma(n1, a.re_, b.re_, a.im_, b.im_, MPFR_RNDN);      // re(a * conj b)
    mpfr_fmms(n2, a.im_, b.re_, a.re_, b.im_, MPFR_RNDN);      // im(a * conj b)
    mpfr_div(r.re_, n1, d, MPFR_RNDN);
    mpfr_div(r.im_, n2, d, MPFR_RNDN);
    mpfr_clear(d);
    mpfr_clear(n1);
    mpfr_clear(n2);
    // |a/b - rounded| <= (ra + |a/b| rb)/ (|b| - rb) + rounding; each
    // component passed through <= 2 roundings, use 4 ulps to be safe
    double au = a.abs_upper();
    double quot = up(au / bl);
    double prop = up((a.rad_ + quot * b.rad_) / bl);
    r.rad_ = up(prop + 4.0 * (ulp_bound(r.re_, r.prec_, 1) + ulp_bound(r.im_, r.prec_, 1)));
    return r;
}

}  // namespace dqs
