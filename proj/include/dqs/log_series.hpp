#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "dqs/ball.hpp"
#include "dqs/coeffw.hpp"
#include "dqs/rational.hpp"

namespace dqs {

// Evaluation point: an exact complex number (pair of rationals) plus the
// working precision.  The default factory enforces |z| > 1, the domain of
// the truncated Laurent tails; for_polynomial() admits any z and is only
// accepted by evaluation of series without negative powers.
struct EvalPoint {
    Rational re, im;
    Precision prec;

    static EvalPoint make(const Rational& re, const Rational& im, Precision prec) {
        if (re * re + im * im <= Rational(1))
            throw std::invalid_argument("EvalPoint: |z| > 1 required");
        return EvalPoint{re, im, prec};
    }
    static EvalPoint for_polynomial(const Rational& re, const Rational& im, Precision prec) {
        return EvalPoint{re, im, prec};
    }
    bool modulus_greater_one() const { return re * re + im * im > Rational(1); }
};

// Proven upper bound on the modulus of a discarded series tail at a given
// evaluation point.  Folded into the reported error radius by ls_eval.
struct TailBound {
    double bound;
    explicit TailBound(double b) : bound(b) {
        if (!(b >= 0.0)) throw std::invalid_argument("TailBound: negative bound");
    }
    static TailBound none() { return TailBound(0.0); }
};

// Truncated Laurent series in z whose coefficients are polynomials in
// log(z) over Q[w]:
//
//     sum_{m=0}^{M} (log z)^m  sum_{e=e_min}^{e_max} c(m,e) z^e .
//
// The window [e_min, e_max] is the region where coefficients are stored
// and provably exact.  Above e_max every coefficient is exactly zero.
// Below e_min coefficients are exactly zero too unless the series is
// flagged truncated, in which case they were discarded and are unknown.
// Binary operations produce the tightest window on which the result is
// provably exact.
class LogSeries {
public:
    LogSeries() : emin_(0), emax_(0), truncated_(false), c_(1, std::vector<CoeffW>(1)) {}

    static LogSeries zero() { return LogSeries(); }
    // c * (log z)^m * z^e
    static LogSeries monomial(const CoeffW& c, unsigned m, int e);
    // all-zero series carrying an explicit window and flag (test helper
    // and building block for the family constructors)
    static LogSeries zero_window(int emin, int emax, unsigned max_log, bool truncated);

    int e_min() const { return emin_; }
    int e_max() const { return emax_; }
    unsigned max_log_power() const { return static_cast<unsigned>(c_.size()) - 1; }
    bool truncated() const { return truncated_; }

    // Coefficient of (log z)^m z^e; zero outside the stored window.
    CoeffW coeff(unsigned m, int e) const;
    void set_coeff(unsigned m, int e, const CoeffW& c);

    bool all_zero() const;
    // first (smallest m, then smallest e) stored nonzero coefficient
    std::optional<std::pair<unsigned, int>> first_nonzero() const;

    // Window view [lo, hi]; used to put both sides of an identity on a
    // common exponent range before numeric comparison.
    LogSeries restricted(int lo, int hi) const;
    // the log-power-m slice as a plain series (M = 0)
    LogSeries log_slice(unsigned m) const;

    friend LogSeries ls_add(const LogSeries& a, const LogSeries& b);
    friend LogSeries ls_sub(const LogSeries& a, const LogSeries& b);
    friend LogSeries ls_scale(const CoeffW& c, const LogSeries& a);
    friend LogSeries ls_mul_log(const LogSeries& a);
    friend LogSeries ls_mul_z(const LogSeries& a);
    friend LogSeries ls_delta(const LogSeries& a);
    friend bool operator==(const LogSeries& a, const LogSeries& b);
    friend bool operator!=(const LogSeries& a, const LogSeries& b) { return !(a == b); }

    friend CBall ls_eval(const LogSeries& a, const EvalPoint& pt, const TailBound& tail);

    std::string str() const;

private:
    void trim_rows();

    int emin_, emax_;
    bool truncated_;
    std::vector<std::vector<CoeffW>> c_;  // c_[m][e - emin_]
};

LogSeries ls_add(const LogSeries& a, const LogSeries& b);
LogSeries ls_sub(const LogSeries& a, const LogSeries& b);
LogSeries ls_scale(const CoeffW& c, const LogSeries& a);
LogSeries ls_mul_log(const LogSeries& a);
LogSeries ls_mul_z(const LogSeries& a);
LogSeries ls_delta(const LogSeries& a);
CBall ls_eval(const LogSeries& a, const EvalPoint& pt, const TailBound& tail);

// The branch convention used throughout: log z = ln|z| + i arg(z) with
// -3pi/2 < arg(z) <= pi/2, i.e. the principal argument shifted down by
// 2pi whenever it exceeds pi/2.  Satisfies log(-z) = log(z) - i pi for
// Re z > 0 and log(z) = log(-z) - i pi for Re z < 0.
CBall log_paper(const Rational& re, const Rational& im, Precision prec);
inline CBall log_paper(const EvalPoint& pt) { return log_paper(pt.re, pt.im, pt.prec); }

}  // namespace dqs
