#include "dqs/log_series.hpp"

#include <algorithm>
#include <limits>

namespace dqs {

using ball_detail::up;

LogSeries LogSeries::monomial(const CoeffW& c, unsigned m, int e) {
    LogSeries s;
    s.emin_ = s.emax_ = e;
    s.c_.assign(m + 1, std::vector<CoeffW>(1));
    s.c_[m][0] = c;
    s.trim_rows();
    return s;
}

LogSeries LogSeries::zero_window(int emin, int emax, unsigned max_log, bool truncated) {
    if (emin > emax) throw std::invalid_argument("LogSeries: e_min > e_max");
    LogSeries s;
    s.emin_ = emin;
    s.emax_ = emax;
    s.truncated_ = truncated;
    s.c_.assign(max_log + 1, std::vector<CoeffW>(static_cast<size_t>(emax - emin + 1)));
    return s;
}

CoeffW LogSeries::coeff(unsigned m, int e) const {
    if (m >= c_.size() || e < emin_ || e > emax_) return CoeffW();
    return c_[m][static_cast<size_t>(e - emin_)];
}

void LogSeries::set_coeff(unsigned m, int e, const CoeffW& c) {
    if (e < emin_ || e > emax_) throw std::out_of_range("LogSeries::set_coeff: outside window");
    if (m >= c_.size()) c_.resize(m + 1, std::vector<CoeffW>(static_cast<size_t>(emax_ - emin_ + 1)));
    c_[m][static_cast<size_t>(e - emin_)] = c;
}

bool LogSeries::all_zero() const {
    for (const auto& row : c_)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

std::optional<std::pair<unsigned, int>> LogSeries::first_nonzero() const {
    for (unsigned m = 0; m < c_.size(); ++m)
        for (int e = emin_; e <= emax_; ++e)
            if (!c_[m][static_cast<size_t>(e - emin_)].is_zero()) return std::make_pair(m, e);
    return std::nullopt;
}

LogSeries LogSeries::restricted(int lo, int hi) const {
    if (lo > hi) throw std::invalid_argument("LogSeries::restricted: empty window");
    LogSeries s = zero_window(lo, hi, max_log_power(), truncated_ || lo > emin_);
    for (unsigned m = 0; m < c_.size(); ++m)
        for (int e = std::max(lo, emin_); e <= std::min(hi, emax_); ++e)
            s.c_[m][static_cast<size_t>(e - lo)] = c_[m][static_cast<size_t>(e - emin_)];
    s.trim_rows();
    return s;
}

LogSeries LogSeries::log_slice(unsigned m) const {
    LogSeries s = zero_window(emin_, emax_, 0, truncated_);
    if (m < c_.size()) s.c_[0] = c_[m];
    return s;
}

void LogSeries::trim_rows() {
    while (c_.size() > 1) {
        bool zero = true;
        for (const auto& x : c_.back())
            if (!x.is_zero()) { zero = false; break; }
        if (!zero) break;
        c_.pop_back();
    }
}

LogSeries ls_add(const LogSeries& a, const LogSeries& b) {
    constexpr int kNoBound = std::numeric_limits<int>::min();
    int lo_a = a.truncated_ ? a.emin_ : kNoBound;
    int lo_b = b.truncated_ ? b.emin_ : kNoBound;
    int lo = std::max(lo_a, lo_b);
    if (lo == kNoBound) lo = std::min(a.emin_, b.emin_);
    int hi = std::max(a.emax_, b.emax_);
    LogSeries s = LogSeries::zero_window(lo, hi, std::max(a.max_log_power(), b.max_log_power()),
                                         a.truncated_ || b.truncated_);
    for (unsigned m = 0; m < s.c_.size(); ++m)
        for (int e = lo; e <= hi; ++e) s.c_[m][static_cast<size_t>(e - lo)] = a.coeff(m, e) + b.coeff(m, e);
    s.trim_rows();
    return s;
}

LogSeries ls_sub(const LogSeries& a, const LogSeries& b) {
    return ls_add(a, ls_scale(CoeffW(-1), b));
}

LogSeries ls_scale(const CoeffW& c, const LogSeries& a) {
    if (c.is_zero()) return LogSeries::zero();  // exactly zero everywhere
    LogSeries s = a;
    for (auto& row : s.c_)
        for (auto& x : row) x = x * c;
    s.trim_rows();
    return s;
}

LogSeries ls_mul_log(const LogSeries& a) {
    LogSeries s = a;
    s.c_.insert(s.c_.begin(), std::vector<CoeffW>(static_cast<size_t>(s.emax_ - s.emin_ + 1)));
    return s;
}

LogSeries ls_mul_z(const LogSeries& a) {
    LogSeries s = a;
    ++s.emin_;
    ++s.emax_;
    return s;
}

LogSeries ls_delta(const LogSeries& a) {
    // delta((log z)^m z^e) = e (log z)^m z^e + m (log z)^(m-1) z^e
    LogSeries s = LogSeries::zero_window(a.emin_, a.emax_, a.max_log_power(), a.truncated_);
    for (unsigned m = 0; m < s.c_.size(); ++m)
        for (int e = a.emin_; e <= a.emax_; ++e) {
            CoeffW v = a.coeff(m, e) * CoeffW(Rational(Int(e)));
            v += a.coeff(m + 1, e) * CoeffW(static_cast<long>(m) + 1);
            s.c_[m][static_cast<size_t>(e - a.emin_)] = v;
        }
    s.trim_rows();
    return s;
}

bool operator==(const LogSeries& a, const LogSeries& b) {
    if (a.truncated_ != b.truncated_) return false;
    if (a.truncated_ && a.emin_ != b.emin_) return false;
    int lo = std::min(a.emin_, b.emin_);
    if (a.truncated_) lo = a.emin_;
    int hi = std::max(a.emax_, b.emax_);
    unsigned mm = std::max(a.max_log_power(), b.max_log_power());
    for (unsigned m = 0; m <= mm; ++m)
        for (int e = lo; e <= hi; ++e)
            if (a.coeff(m, e) != b.coeff(m, e)) return false;
    return true;
}

std::string LogSeries::str() const {
    std::string s;
    for (unsigned m = 0; m < c_.size(); ++m)
        for (int e = emin_; e <= emax_; ++e) {
            const CoeffW& x = c_[m][static_cast<size_t>(e - emin_)];
            if (x.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + x.str() + ")";
            if (m == 1) s += "*log(z)";
            if (m > 1) s += "*log(z)^" + std::to_string(m);
            if (e != 0) s += "*z^" + std::to_string(e);
        }
    if (s.empty()) s = "0";
    if (truncated_) s += "  [exact for z-exponents >= " + std::to_string(emin_) + "]";
    return s;
}

namespace {

// CoeffW -> ball using a precomputed (i*pi)^p table
CBall coeffw_to_ball(const CoeffW& c, const std::vector<CBall>& wpows, Precision prec) {
    CBall acc = CBall::from_rational(c.coeff(0), Rational(0), prec);
    for (int p = 1; p <= c.degree(); ++p) {
        const Rational cp = c.coeff(static_cast<unsigned>(p));
        if (!cp.is_zero()) acc = add(acc, mul_rational(wpows[static_cast<size_t>(p)], cp));
    }
    return acc;
}

}  // namespace

CBall log_paper(const Rational& re, const Rational& im, Precision prec) {
    if (re.is_zero() && im.is_zero()) throw PoleError("log_paper: z = 0");
    CBall z = CBall::from_rational(re, im, prec);
    CBall out(prec);

    mpfr_t h;
    mpfr_init2(h, prec.bits);
    int th = mpfr_hypot(h, z.re_, z.im_, MPFR_RNDN);
    double hl = mpfr_get_d(h, MPFR_RNDD) * (1.0 - 0x1p-30) - z.radius();
    if (hl <= 0.0) {
        mpfr_clear(h);
        throw std::domain_error("log_paper: cannot certify |z| > 0");
    }
    double dh = up(z.radius() + ball_detail::ulp_bound(h, prec.bits, th));

    int tl = mpfr_log(out.re_, h, MPFR_RNDN);
    double rad_ln = up(ball_detail::ulp_bound(out.re_, prec.bits, tl) + dh / hl);

    int ta = mpfr_atan2(out.im_, z.im_, z.re_, MPFR_RNDN);
    double rad_arg = up(ball_detail::ulp_bound(out.im_, prec.bits, ta) + 2.0 * z.radius() / hl);

    // shift out of the principal branch exactly when Arg(z) > pi/2, which
    // for exact rational z is the sign predicate Re z < 0 and Im z >= 0
    if (re.sign() < 0 && im.sign() >= 0) {
        mpfr_t twopi;
        mpfr_init2(twopi, prec.bits);
        mpfr_const_pi(twopi, MPFR_RNDN);
        mpfr_mul_ui(twopi, twopi, 2, MPFR_RNDN);  // exact scaling of the rounded pi
        int ts = mpfr_sub(out.im_, out.im_, twopi, MPFR_RNDN);
        rad_arg = up(rad_arg + 2.0 * ball_detail::ulp_bound(twopi, prec.bits, 1) +
                     ball_detail::ulp_bound(out.im_, prec.bits, ts));
        mpfr_clear(twopi);
    }
    mpfr_clear(h);
    out.rad_ = up(rad_ln + rad_arg);
    return out;
}

CBall ls_eval(const LogSeries& a, const EvalPoint& pt, const TailBound& tail) {
    const Precision prec = pt.prec;
    if ((a.truncated_ || a.emin_ < 0) && !pt.modulus_greater_one())
        throw std::domain_error("ls_eval: |z| > 1 required for Laurent tails");

    std::vector<CBall> wpows;  // (i*pi)^p up to the highest w-degree present
    int wdeg = 0;
    for (const auto& row : a.c_)
        for (const auto& x : row) wdeg = std::max(wdeg, x.degree());
    wpows.reserve(static_cast<size_t>(wdeg) + 1);
    wpows.push_back(CBall::from_long(1, prec));
    if (wdeg >= 1) wpows.push_back(CBall::i_pi(prec));
    for (int p = 2; p <= wdeg; ++p) wpows.push_back(mul(wpows.back(), wpows[1]));

    CBall zb = CBall::from_rational(pt.re, pt.im, prec);
    std::optional<CBall> zinv;
    if (a.emin_ < 0) zinv = div(CBall::from_long(1, prec), zb);
    std::optional<CBall> logz;
    if (a.max_log_power() >= 1) logz = log_paper(pt.re, pt.im, prec);

    CBall total(prec);
    CBall lpow = CBall::from_long(1, prec);  // (log z)^m
    for (unsigned m = 0; m <= a.max_log_power(); ++m) {
        CBall row(prec);
        if (a.emin_ < 0) {
            // Horner in 1/z over exponents e_min..-1 (absent ones are zero)
            CBall acc(prec);
            for (int e = a.emin_; e <= -1; ++e)
                acc = add(mul(acc, *zinv), coeffw_to_ball(a.coeff(m, e), wpows, prec));
            row = mul(acc, *zinv);
        }
        if (a.emax_ >= 0) {
            // Horner in z over exponents 0..e_max
            CBall acc(prec);
            for (int e = a.emax_; e >= 0; --e)
                acc = add(mul(acc, zb), coeffw_to_ball(a.coeff(m, e), wpows, prec));
            row = add(row, acc);
        }
        if (m == 0) {
            total = row;
        } else {
            lpow = (m == 1) ? *logz : mul(lpow, *logz);
            total = add(total, mul(row, lpow));
        }
    }
    total.add_error(tail.bound);
    return total;
}

}  // namespace dqs
