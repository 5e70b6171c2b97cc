#include "dqs/r_derivatives.hpp"

#include <cmath>

namespace dqs {

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return RatPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(r));
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly r = constant(Rational(1));
    RatPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Rational RatPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

Rational r_eval(const RPoint& pt) {
    Rational num(1), den(1);
    for (unsigned j = 1; j <= pt.nu; ++j) num *= pt.t - Rational(static_cast<long>(j));
    for (unsigned j = 0; j <= pt.nu; ++j) den *= pt.t + Rational(static_cast<long>(j));
    return num / den;
}

namespace {

Int factorial(unsigned n) {
    Int r(1);
    for (unsigned i = 2; i <= n; ++i) r *= static_cast<long>(i);
    return r;
}

bool on_zero_set(const RPoint& pt) {
    if (!pt.t.is_integer()) return false;
    const Int n = pt.t.numerator();
    return n >= 1 && n <= Int(static_cast<long>(pt.nu));
}

// numerator/denominator polynomials of R
RatPoly r_num_poly(unsigned nu) {
    RatPoly p = RatPoly::constant(Rational(1));
    for (unsigned j = 1; j <= nu; ++j) p = p * RatPoly::linear(Rational(-static_cast<long>(j)));
    return p;
}

RatPoly r_den_poly(unsigned nu) {
    RatPoly q = RatPoly::constant(Rational(1));
    for (unsigned j = 0; j <= nu; ++j) q = q * RatPoly::linear(Rational(static_cast<long>(j)));
    return q;
}

// (d/dt)^p (P^m / Q^m) evaluated at t, carried as N/Q^e with
// d(N/Q^e) = (N'Q - e N Q') / Q^(e+1).
Rational d_r_pow_quotient(const DerivOrder& ord, const RPoint& pt) {
    const RatPoly q = r_den_poly(pt.nu);
    const RatPoly qd = q.derivative();
    RatPoly n = r_num_poly(pt.nu).pow(ord.m);
    unsigned e = ord.m;
    for (unsigned i = 0; i < ord.p; ++i) {
        n = n.derivative() * q - RatPoly::constant(Rational(static_cast<long>(e))) * n * qd;
        ++e;
    }
    return n.eval(pt.t) / q.eval(pt.t).pow(e);
}

// complete Bell polynomials, hard-coded up to order 3
Rational bell(unsigned p, const std::vector<Rational>& x) {
    switch (p) {
        case 0: return Rational(1);
        case 1: return x[1];
        case 2: return x[1] * x[1] + x[2];
        case 3: return x[1] * x[1] * x[1] + Rational(3) * x[1] * x[2] + x[3];
        default: throw std::invalid_argument("bell: order <= 3 required");
    }
}

}  // namespace

Rational log_deriv(unsigned p, const RPoint& pt) {
    if (p == 0) throw std::invalid_argument("log_deriv: p must be positive");
    if (on_zero_set(pt)) throw PoleError("log_deriv: t is a zero of R");
    Rational s(0);
    if (pt.t.is_integer()) {
        const long t = static_cast<long>(pt.t.numerator().get_si());
        const long nu = static_cast<long>(pt.nu);
        s = power_sum(p, t - nu, t - 1) - power_sum(p, t, t + nu);
    } else {
        for (unsigned j = 1; j <= pt.nu; ++j)
            s += (pt.t - Rational(static_cast<long>(j))).pow(p).inverse();
        for (unsigned j = 0; j <= pt.nu; ++j)
            s -= (pt.t + Rational(static_cast<long>(j))).pow(p).inverse();
    }
    Rational sign = (p % 2 == 1) ? Rational(1) : Rational(-1);  // (-1)^(p-1)
    return sign * Rational(factorial(p - 1)) * s;
}

Rational d_r_pow(const DerivOrder& ord, const RPoint& pt) {
    if (ord.p == 0) return r_eval(pt).pow(ord.m);
    if (on_zero_set(pt)) return d_r_pow_quotient(ord, pt);
    std::vector<Rational> x(ord.p + 1, Rational(0));
    for (unsigned q = 1; q <= ord.p; ++q)
        x[q] = Rational(static_cast<long>(ord.m)) * log_deriv(q, pt);
    return r_eval(pt).pow(ord.m) * bell(ord.p, x);
}

bool zero_order_check(unsigned l, unsigned nu) {
    const unsigned m = 2 + l;
    for (unsigned j = 1; j <= nu; ++j)
        for (unsigned p = 0; p < m; ++p) {
            Rational v = (p == 0) ? r_eval(RPoint(Rational(static_cast<long>(j)), nu)).pow(m)
                                  : d_r_pow(DerivOrder(p, m), RPoint(Rational(static_cast<long>(j)), nu));
            if (!v.is_zero()) return false;
        }
    return true;
}

double bell_bound_constant(unsigned p, unsigned m, unsigned nu) {
    // c_q = m (q-1)! (2nu+1) dominates m |g_q| (t-nu)^q for t >= nu+1
    double c1 = static_cast<double>(m) * (2.0 * nu + 1.0);
    double c2 = c1, c3 = 2.0 * c1;
    switch (p) {
        case 0: return 1.0;
        case 1: return c1;
        case 2: return c1 * c1 + c2;
        case 3: return c1 * c1 * c1 + 3.0 * c1 * c2 + c3;
        default: throw std::invalid_argument("bell_bound_constant: order <= 3 required");
    }
}

double tail_bound(unsigned l, unsigned p, unsigned nu, long t0, double z_abs) {
    if (t0 < static_cast<long>(nu) + 1) throw std::invalid_argument("tail_bound: t0 >= nu+1 required");
    if (!(z_abs > 1.0)) throw std::invalid_argument("tail_bound: z_abs > 1 required");
    const double cp = bell_bound_constant(p, 2 + l, nu);
    const double head = cp / std::pow(static_cast<double>(t0 - nu), static_cast<double>(p)) *
                        std::pow(z_abs, -static_cast<double>(t0));
    const double geom = z_abs / (z_abs - 1.0);
    return head * geom * (1.0 + 1e-9);
}

}  // namespace dqs
