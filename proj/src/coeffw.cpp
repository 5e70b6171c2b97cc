#include "dqs/coeffw.hpp"

#include <cmath>

#include "dqs/ball.hpp"

namespace dqs {

CoeffW& CoeffW::operator+=(const CoeffW& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t p = 0; p < o.c_.size(); ++p) c_[p] += o.c_[p];
    trim();
    return *this;
}

CoeffW& CoeffW::operator-=(const CoeffW& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t p = 0; p < o.c_.size(); ++p) c_[p] -= o.c_[p];
    trim();
    return *this;
}

CoeffW& CoeffW::operator*=(const CoeffW& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t p = 0; p < c_.size(); ++p)
        for (size_t q = 0; q < o.c_.size(); ++q) r[p + q] += c_[p] * o.c_[q];
    c_ = std::move(r);
    trim();
    return *this;
}

CoeffW operator-(const CoeffW& a) {
    CoeffW r;
    r.c_.reserve(a.c_.size());
    for (const auto& x : a.c_) r.c_.push_back(-x);
    return r;
}

double CoeffW::abs_upper() const {
    constexpr double kPiUp = 3.1415926535897936;  // > pi
    double s = 0.0, pw = 1.0;
    for (const auto& x : c_) {
        s += x.abs_double_upper() * pw;
        pw *= kPiUp;
    }
    return s * (1.0 + 0x1p-40);
}

std::string CoeffW::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t p = 0; p < c_.size(); ++p) {
        if (c_[p].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[p].str();
        if (p == 1) s += "*w";
        if (p > 1) s += "*w^" + std::to_string(p);
    }
    return s;
}

CBall coeffw_eval(const CoeffW& c, Precision prec) {
    CBall acc = CBall::from_rational(c.coeff(0), Rational(0), prec);
    if (c.degree() < 1) return acc;
    CBall ipi = CBall::i_pi(prec);
    CBall wpow = ipi;  // (i*pi)^p
    for (int p = 1; p <= c.degree(); ++p) {
        const Rational cp = c.coeff(static_cast<unsigned>(p));
        if (!cp.is_zero()) acc = add(acc, mul_rational(wpow, cp));
        if (p < c.degree()) wpow = mul(wpow, ipi);
    }
    return acc;
}

}  // namespace dqs
