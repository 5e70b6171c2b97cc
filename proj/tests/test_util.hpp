#pragma once

#include <cmath>
#include <random>

#include "dqs/ball.hpp"
#include "dqs/coeffw.hpp"
#include "dqs/log_series.hpp"
#include "dqs/rational.hpp"

namespace dqs_test {

inline dqs::Rational random_rational(std::mt19937& rng, long num_lo = -20, long num_hi = 20,
                                     long den_hi = 9) {
    std::uniform_int_distribution<long> num(num_lo, num_hi);
    std::uniform_int_distribution<long> den(1, den_hi);
    return dqs::Rational(num(rng), den(rng));
}

inline dqs::CoeffW random_coeffw(std::mt19937& rng, unsigned max_deg = 2) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    dqs::CoeffW c;
    unsigned d = deg(rng);
    for (unsigned p = 0; p <= d; ++p)
        c += dqs::CoeffW::monomial(random_rational(rng, -9, 9, 5), p);
    return c;
}

inline dqs::LogSeries random_series(std::mt19937& rng, bool allow_truncated = true) {
    std::uniform_int_distribution<int> lo(-10, 0), width(0, 8);
    std::uniform_int_distribution<unsigned> logs(0, 2);
    std::uniform_int_distribution<int> flag(0, 1);
    int emin = lo(rng);
    int emax = emin + width(rng);
    unsigned mm = logs(rng);
    bool trunc = allow_truncated && flag(rng) == 1;
    dqs::LogSeries s = dqs::LogSeries::zero_window(emin, emax, mm, trunc);
    for (unsigned m = 0; m <= mm; ++m)
        for (int e = emin; e <= emax; ++e) s.set_coeff(m, e, random_coeffw(rng));
    return s;
}

// |mid(a) - mid(b)| as a plain double, for ball comparisons in tests
inline double mid_distance(const dqs::CBall& a, const dqs::CBall& b) {
    dqs::CBall d = sub(a, b);
    return std::hypot(d.re_double(), d.im_double());
}

}  // namespace dqs_test
