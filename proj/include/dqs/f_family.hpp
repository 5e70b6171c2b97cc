#pragma once

#include <vector>

#include "dqs/log_series.hpp"

namespace dqs {

// Index into the function family: l in {0,1,2}, k in K_l, nu >= 0, where
// K_0 = {1,2,3}, K_1 = {1,2,3,5}, K_2 = {1,2,3,5,7}.
struct FamilyIndex {
    unsigned l, k, nu;

    FamilyIndex(unsigned l_, unsigned k_, unsigned nu_);
};

const std::vector<unsigned>& family_k_set(unsigned l);
std::string family_k_set_str(unsigned l);

// Series are computed exactly for z-exponents >= -T.  The floor keeps a
// usable comparison window after the recurrence's z-shift.
struct Truncation {
    long T;

    Truncation(long T_, unsigned l, unsigned nu) : T(T_) {
        if (T < static_cast<long>(nu) + 4 + 2 * static_cast<long>(l))
            throw std::invalid_argument("Truncation: T >= nu + 4 + 2l required");
    }
};

inline long default_truncation(unsigned nu) { return 2L * nu + 40; }

// Polynomial sum_{k=0}^{nu} (-1)^((nu+k)l) z^k C(nu,k)^(2+l) C(nu+k,nu)^(2+l).
LogSeries build_f1(unsigned l, unsigned nu);

// Shared kernel of the four tail functions: the coefficient of z^-t is
// (-1)^p/p! (d/dt)^p (R^(2+l))(t,nu) for t in [t_start, T].  The
// definitions start at t_start = nu+1; starting at 1 instead must give the
// identical series by the zero-order property (checked in the tests, not
// assumed).
LogSeries build_tail_series(unsigned l, unsigned nu, long T, unsigned p, long t_start);

LogSeries build_f2(unsigned l, unsigned nu, long T);
LogSeries build_f4(unsigned l, unsigned nu, long T);
LogSeries build_f6(unsigned l, unsigned nu, long T);  // requires l >= 1
LogSeries build_f8(unsigned l, unsigned nu, long T);  // requires l == 2

// f3 = log(z) f2 + f4
LogSeries build_f3(unsigned l, unsigned nu, long T);
// f5 = 1/2 log^2(z) f2 + log(z) f4 + f6            (l >= 1)
LogSeries build_f5(unsigned l, unsigned nu, long T);
// f5v = -w f3 + f5, w standing for i*pi
LogSeries build_f5_vee(unsigned l, unsigned nu, long T);
// f7 = 1/6 log^3(z) f2 - 1/2 log^2(z) f3 + log(z) f5 + f8   (l == 2)
LogSeries build_f7(unsigned l, unsigned nu, long T);
// f7v = f7 - (2/3) w^2 f3   (the constant 2 pi^2/3)
LogSeries build_f7_vee(unsigned l, unsigned nu, long T);

// The column entry convention: k in {1,2,3} uses the function itself,
// k = 5 and k = 7 use the vee combination.
LogSeries build_f(const FamilyIndex& idx, long T);

// Column with 4+2l entries, entry i = (nu^-1 delta)^(i-1) applied to the
// k-th family member.  Requires nu >= 1.
std::vector<LogSeries> build_Y(const FamilyIndex& idx, const Truncation& T);

// Drop all memoized series (test isolation).
void clear_series_cache();

}  // namespace dqs
