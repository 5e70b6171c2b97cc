#pragma once

#include <vector>

#include "dqs/rational.hpp"

namespace dqs {

// Dense polynomial in one variable over the rationals.  Just enough for
// the quotient-rule differentiation of R^m.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static RatPoly constant(const Rational& r) { return RatPoly({r}); }
    // t + c
    static RatPoly linear(const Rational& c) { return RatPoly({c, Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    RatPoly derivative() const;
    RatPoly pow(unsigned e) const;
    Rational eval(const Rational& t) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Argument of R(t, nu) = prod_{j=1}^{nu}(t-j) / prod_{j=0}^{nu}(t+j).
// Construction rejects the denominator poles t in {0, -1, ..., -nu}.
struct RPoint {
    Rational t;
    unsigned nu;

    RPoint(const Rational& t_, unsigned nu_) : t(t_), nu(nu_) {
        if (t.is_integer()) {
            const Int n = t.numerator();
            if (n <= 0 && n >= -Int(static_cast<long>(nu)))
                throw PoleError("RPoint: t is a pole of R(t,nu)");
        }
    }
};

// Order of differentiation p (at most 3) of the power R^m, m = 2+l.
struct DerivOrder {
    unsigned p;
    unsigned m;

    DerivOrder(unsigned p_, unsigned m_) : p(p_), m(m_) {
        if (p > 3) throw std::invalid_argument("DerivOrder: p <= 3 required");
        if (m < 2 || m > 4) throw std::invalid_argument("DerivOrder: m in {2,3,4} required");
    }
};

// Exact value of R(t, nu).
Rational r_eval(const RPoint& pt);

// p-th t-derivative of log R at pt, exact:
//   g_p = (-1)^(p-1) (p-1)! [ sum_{j=1}^{nu} (t-j)^-p - sum_{j=0}^{nu} (t+j)^-p ].
// Undefined on the zeros of R (t in {1,...,nu}).
Rational log_deriv(unsigned p, const RPoint& pt);

// Exact (d/dt)^p (R^m) at pt.  Off the zero set this uses the complete
// Bell polynomial form R^m B_p(m g_1, ..., m g_p); on t in {1,...,nu},
// where log R has poles, it falls back to quotient-rule differentiation
// of the explicit rational function.
Rational d_r_pow(const DerivOrder& ord, const RPoint& pt);

// True iff (d/dt)^p (R^(2+l))(j, nu) = 0 for all j in {1..nu} and all
// p < 2+l, i.e. R^(2+l) has zeros of order 2+l at t = 1..nu.
bool zero_order_check(unsigned l, unsigned nu);

// Proven upper bound on sum_{t>=t0} |(d/dt)^p (R^(2+l))(t,nu)| z_abs^-t
// for t0 >= nu+1 and z_abs > 1.  Deliberately crude: |R| <= 1 and
// |g_q| <= (q-1)! (2nu+1)/(t-nu)^q give a monotone majorant that is
// summed geometrically.
double tail_bound(unsigned l, unsigned p, unsigned nu, long t0, double z_abs);

// B_p at the bound constants c_q = m (q-1)! (2nu+1); exposed for the
// budget machinery in the verifier.
double bell_bound_constant(unsigned p, unsigned m, unsigned nu);

}  // namespace dqs
