#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqs/f_family.hpp"
#include "dqs/log_series.hpp"
#include "dqs/matrix_system.hpp"

namespace dqs {

// Exact verification sweep over a contiguous nu range (nu >= 2, the
// recurrence hypothesis).
struct ExactCheckSpec {
    unsigned l, k;
    unsigned nu_min, nu_max;
    long T;

    ExactCheckSpec(unsigned l_, unsigned k_, unsigned nu_min_, unsigned nu_max_, long T_)
        : l(l_), k(k_), nu_min(nu_min_), nu_max(nu_max_), T(T_) {
        FamilyIndex check(l_, k_, nu_min_);  // validates the (l,k) pair
        (void)check;
        if (nu_min_ < 2) throw std::invalid_argument("ExactCheckSpec: nu_min >= 2 required");
        if (nu_max_ < nu_min_) throw std::invalid_argument("ExactCheckSpec: empty nu range");
    }
};

struct NumericCheckSpec {
    unsigned l, k, nu;
    EvalPoint pt;  // |z| > 1 enforced by EvalPoint::make
    long T;

    NumericCheckSpec(unsigned l_, unsigned k_, unsigned nu_, const EvalPoint& pt_, long T_)
        : l(l_), k(k_), nu(nu_), pt(pt_), T(T_) {
        FamilyIndex check(l_, k_, nu_);
        (void)check;
        if (nu_ < 2) throw std::invalid_argument("NumericCheckSpec: nu >= 2 required");
        if (!pt_.modulus_greater_one())
            throw std::invalid_argument("NumericCheckSpec: |z| > 1 required");
    }
};

struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    // numeric mode only
    std::optional<double> residual, budget;
    // comparison window of z-exponents (exact mode); unbounded_below marks
    // residuals that are exact at every exponent under the reported one
    std::optional<std::pair<long, long>> window;
    bool window_unbounded_below = false;
    std::string detail;  // located witness on failure
    double elapsed_ms = 0.0;
};

enum class RecEq { Eq16, Eq17 };

// Eq. (16):  A(z;nu) Y(nu) = T_{1-1/nu} Y(nu-1), residual checked
// coefficientwise over Q[w] on the provably exact window.
std::vector<CheckReport> verify_eq16_exact(const ExactCheckSpec& spec,
                                           const MatrixSet* mats = nullptr);
// Eq. (17):  Y(nu) = T_{-1} A(z;-nu) T_{-1+1/nu} Y(nu-1), same discipline.
std::vector<CheckReport> verify_eq17_exact(const ExactCheckSpec& spec,
                                           const MatrixSet* mats = nullptr);

// Numeric instantiation at an exact z: both sides are assembled exactly,
// restricted to the common comparison window, and evaluated with the
// branch-correct log.  Passes iff the max-norm residual stays within the
// budget (tail bounds through the matrix row norms plus rounding radii).
CheckReport verify_numeric(const NumericCheckSpec& spec, RecEq which,
                           const MatrixSet* mats = nullptr);

struct SweepConfig {
    std::vector<unsigned> ls = {0, 1, 2};
    std::optional<unsigned> k;  // default: every k in K_l
    unsigned nu_min = 2, nu_max = 12;
    bool numeric = false;
    std::optional<EvalPoint> pt;  // required when numeric
    std::optional<long> T;        // default 2 nu + 40
    unsigned jobs = 1;
    std::optional<Mutation> mutation;
};

// Runs Eq. (16) and Eq. (17) checks for every combination; never aborts on
// a failing check.  Reports come back ordered by check_id regardless of
// the number of jobs.
std::vector<CheckReport> sweep(const SweepConfig& config);

// Upper bound on the evaluated modulus of the discarded tail (t > from-1,
// i.e. summands from t0 = from on) of Y entry `entry` (1-based) of the
// (l,k,nu) column, at |z| >= z_abs_lower with |log z| <= log_abs_upper.
// entry = 1 bounds the bare family function's tail.
double y_entry_tail_bound(unsigned l, unsigned k, unsigned nu, unsigned entry, long from,
                          double z_abs_lower, double log_abs_upper);

}  // namespace dqs
