#include "dqs/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "dqs/r_derivatives.hpp"

namespace dqs {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double fudge_up(double x) { return x * (1.0 + 1e-9); }

// z-linear matrix entry c0 + c1 z
struct ZLin {
    Rational c0, c1;
};
using ZLinMatrix = std::vector<std::vector<ZLin>>;

ZLinMatrix zlin_from(const PolyMatrix& m) {
    ZLinMatrix r(m.dim(), std::vector<ZLin>(m.dim()));
    for (unsigned i = 0; i < m.dim(); ++i)
        for (unsigned j = 0; j < m.dim(); ++j) {
            const PolyZU& e = m.at(i, j);
            if (e.z_degree() > 1) throw std::logic_error("zlin_from: z-degree > 1");
            r[i][j] = ZLin{e.z_coeff(0), e.z_coeff(1)};
        }
    return r;
}

std::vector<LogSeries> apply_zlin(const ZLinMatrix& m, const std::vector<LogSeries>& y) {
    std::vector<LogSeries> out;
    out.reserve(m.size());
    for (unsigned i = 0; i < m.size(); ++i) {
        LogSeries acc;
        bool first = true;
        for (unsigned j = 0; j < m.size(); ++j) {
            const ZLin& e = m[i][j];
            LogSeries term;
            bool have = false;
            if (!e.c0.is_zero()) {
                term = ls_scale(CoeffW(e.c0), y[j]);
                have = true;
            }
            if (!e.c1.is_zero()) {
                LogSeries zpart = ls_mul_z(ls_scale(CoeffW(e.c1), y[j]));
                term = have ? ls_add(term, zpart) : zpart;
                have = true;
            }
            if (!have) continue;
            acc = first ? term : ls_add(acc, term);
            first = false;
        }
        out.push_back(first ? LogSeries::zero() : acc);
    }
    return out;
}

MatrixSet resolve_matrices(unsigned l, const MatrixSet* mats) {
    return mats ? *mats : canonical_matrices(l);
}

// Operator of Eq. (17): T_-1 A(z;-nu) T_{-1+1/nu}.
PolyMatrix eq17_operator(unsigned l, long nu, const MatrixSet& mats) {
    const unsigned n = mats.n;
    const Rational mu = Rational(1, nu) - Rational(1);
    PolyMatrix a_neg = a_matrix_sym(l, true, mats).subst_u(Rational(1, nu));
    return t_matrix(n, Rational(-1)) * a_neg * t_matrix(n, mu);
}

std::string coeff_witness(unsigned entry, unsigned m, int e, const CoeffW& c) {
    return "entry " + std::to_string(entry + 1) + ", log-power " + std::to_string(m) +
           ", z-exponent " + std::to_string(e) + ": residual coefficient " + c.str();
}

// Exact-mode verdict: every stored coefficient of lhs[i]-rhs[i] must be the
// zero of Q[w]; the stored window of the difference is the provably exact
// region by construction of the series operations.
CheckReport exact_report(std::string id, std::vector<std::pair<std::string, std::string>> params,
                         const std::vector<LogSeries>& lhs, const std::vector<LogSeries>& rhs,
                         long T, Clock::time_point t0) {
    CheckReport rep;
    rep.check_id = std::move(id);
    rep.params = std::move(params);
    long lo = std::numeric_limits<long>::min(), hi = std::numeric_limits<long>::max();
    bool unbounded = true;
    rep.pass = true;
    for (unsigned i = 0; i < lhs.size(); ++i) {
        LogSeries d = ls_sub(lhs[i], rhs[i]);
        if (auto nz = d.first_nonzero(); nz && rep.pass) {
            rep.pass = false;
            rep.detail = coeff_witness(i, nz->first, nz->second, d.coeff(nz->first, nz->second));
        }
        long lo_i = d.truncated() ? d.e_min() : std::min<long>(-T + 1, d.e_min());
        if (d.truncated()) unbounded = false;
        lo = std::max(lo, lo_i);
        hi = std::min<long>(hi, d.e_max());
    }
    if (lo > hi) {
        rep.pass = false;
        if (rep.detail.empty()) rep.detail = "empty comparison window";
    } else {
        rep.window = std::make_pair(lo, hi);
        rep.window_unbounded_below = unbounded;
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::vector<std::pair<std::string, std::string>> base_params(unsigned l, unsigned k, unsigned nu,
                                                             long T) {
    return {{"l", std::to_string(l)},
            {"k", std::to_string(k)},
            {"nu", std::to_string(nu)},
            {"T", std::to_string(T)}};
}

std::string rec_id(RecEq eq, unsigned l, unsigned k, unsigned nu, bool numeric,
                   const std::string& zstr = {}) {
    std::string id = numeric ? "numeric:" : "recurrence:";
    id += (eq == RecEq::Eq16) ? "eq16" : "eq17";
    id += ":l=" + std::to_string(l) + ":k=" + std::to_string(k) + ":nu=" + std::to_string(nu);
    if (!zstr.empty()) id += ":z=" + zstr;
    return id;
}

std::string z_str(const EvalPoint& pt) {
    std::string s = pt.re.str();
    if (!pt.im.is_zero()) {
        if (pt.im.sign() > 0) s += "+";
        s += pt.im.str() + "i";
    }
    return s;
}

struct Sides {
    std::vector<LogSeries> lhs, rhs;
    ZLinMatrix op_lhs;  // matrix applied on the Y(nu) side (Eq16) or identity
    ZLinMatrix op_rhs;  // matrix applied on the Y(nu-1) side
};

Sides assemble_sides(RecEq eq, unsigned l, unsigned k, unsigned nu, long T, const MatrixSet& mats) {
    const unsigned n = mats.n;
    const FamilyIndex idx_hi(l, k, nu), idx_lo(l, k, nu - 1);
    const Truncation tr_hi(T, l, nu), tr_lo(T, l, nu - 1);
    const std::vector<LogSeries> y_hi = build_Y(idx_hi, tr_hi);
    const std::vector<LogSeries> y_lo = build_Y(idx_lo, tr_lo);

    Sides s;
    if (eq == RecEq::Eq16) {
        s.op_lhs = zlin_from(a_matrix_at(l, static_cast<long>(nu), mats));
        s.lhs = apply_zlin(s.op_lhs, y_hi);
        const Rational lambda = Rational(1) - Rational(1, static_cast<long>(nu));
        s.op_rhs = zlin_from(t_matrix(n, lambda));
        s.rhs = apply_zlin(s.op_rhs, y_lo);
    } else {
        s.op_lhs = zlin_from(PolyMatrix::identity(n));
        s.lhs = y_hi;
        s.op_rhs = zlin_from(eq17_operator(l, static_cast<long>(nu), mats));
        s.rhs = apply_zlin(s.op_rhs, y_lo);
    }
    return s;
}

}  // namespace

std::vector<CheckReport> verify_eq16_exact(const ExactCheckSpec& spec, const MatrixSet* mats) {
    const MatrixSet m = resolve_matrices(spec.l, mats);
    std::vector<CheckReport> out;
    for (unsigned nu = spec.nu_min; nu <= spec.nu_max; ++nu) {
        auto t0 = Clock::now();
        Sides s = assemble_sides(RecEq::Eq16, spec.l, spec.k, nu, spec.T, m);
        out.push_back(exact_report(rec_id(RecEq::Eq16, spec.l, spec.k, nu, false),
                                   base_params(spec.l, spec.k, nu, spec.T), s.lhs, s.rhs, spec.T,
                                   t0));
    }
    return out;
}

std::vector<CheckReport> verify_eq17_exact(const ExactCheckSpec& spec, const MatrixSet* mats) {
    const MatrixSet m = resolve_matrices(spec.l, mats);
    std::vector<CheckReport> out;
    for (unsigned nu = spec.nu_min; nu <= spec.nu_max; ++nu) {
        auto t0 = Clock::now();
        Sides s = assemble_sides(RecEq::Eq17, spec.l, spec.k, nu, spec.T, m);
        out.push_back(exact_report(rec_id(RecEq::Eq17, spec.l, spec.k, nu, false),
                                   base_params(spec.l, spec.k, nu, spec.T), s.lhs, s.rhs, spec.T,
                                   t0));
    }
    return out;
}

double y_entry_tail_bound(unsigned l, unsigned k, unsigned nu, unsigned entry, long from,
                          double z_abs_lower, double log_abs_upper) {
    if (k == 1) return 0.0;  // polynomial, no tail
    if (!(z_abs_lower > 1.0)) return std::numeric_limits<double>::infinity();
    const unsigned m = 2 + l;
    // d_p bounds |(d/dt)^p R^m| / p! for t >= nu+1
    const double d0 = 1.0;
    const double d1 = bell_bound_constant(1, m, nu);
    const double d2 = bell_bound_constant(2, m, nu) / 2.0;
    const double d3 = bell_bound_constant(3, m, nu) / 6.0;
    constexpr double kPiUp = 3.1415926535897936;
    constexpr double kTwoPi2Over3Up = 6.5797362673929105;  // > 2 pi^2 / 3
    // gamma_m bounds the Q[w]-coefficient of (log z)^m z^-t after |w| -> pi
    double g0 = 0, g1 = 0, g2 = 0, g3 = 0;
    switch (k) {
        case 2: g0 = d0; break;
        case 3: g0 = d1; g1 = d0; break;
        case 5:
            g0 = d2 + kPiUp * d1;
            g1 = d1 + kPiUp * d0;
            g2 = d0 / 2.0;
            break;
        case 7:
            g0 = d3 + kTwoPi2Over3Up * d1;
            g1 = d2 + kTwoPi2Over3Up * d0;
            g2 = 1.5 * d1;
            g3 = 7.0 / 6.0 * d0;
            break;
        default: throw std::invalid_argument("y_entry_tail_bound: bad k");
    }
    const double gamma = std::max(std::max(g0, g1), std::max(g2, g3));
    const double lu = std::max(1.0, log_abs_upper);
    const unsigned j = entry - 1;  // delta power
    // sum_{t >= from} ((t+3)/nu)^j z^-t via a geometric majorant
    const double q =
        fudge_up(std::pow((from + 4.0) / (from + 3.0), static_cast<double>(j)) / z_abs_lower);
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    const double head = std::pow((from + 3.0) / nu, static_cast<double>(j)) *
                        std::pow(z_abs_lower, -static_cast<double>(from));
    return fudge_up(4.0 * lu * lu * lu * gamma * head / (1.0 - q));
}

namespace {

// upper bound on |sum_m c(m,e) (log z)^m| z_abs^e for one stored column
double column_eval_bound(const LogSeries& s, int e, double log_abs_upper, double z_abs_upper,
                         double z_abs_lower) {
    double acc = 0.0, lp = 1.0;
    const double lu = std::max(1.0, log_abs_upper);
    for (unsigned m = 0; m <= s.max_log_power(); ++m) {
        acc += s.coeff(m, e).abs_upper() * lp;
        lp *= lu;
    }
    const double zb = e >= 0 ? std::pow(z_abs_upper, static_cast<double>(e))
                             : std::pow(z_abs_lower, static_cast<double>(e));
    return fudge_up(acc * zb);
}

double row_norm(const ZLinMatrix& m, unsigned i, double z_abs_upper) {
    double s = 0.0;
    for (const auto& e : m[i])
        s += e.c0.abs_double_upper() + z_abs_upper * e.c1.abs_double_upper();
    return fudge_up(s);
}

}  // namespace

CheckReport verify_numeric(const NumericCheckSpec& spec, RecEq which, const MatrixSet* mats) {
    auto t0 = Clock::now();
    const MatrixSet m = resolve_matrices(spec.l, mats);
    Sides s = assemble_sides(which, spec.l, spec.k, spec.nu, spec.T, m);

    const double re2 = spec.pt.re.abs_double_upper() * spec.pt.re.abs_double_upper();
    const double im2 = spec.pt.im.abs_double_upper() * spec.pt.im.abs_double_upper();
    const double z_up = fudge_up(std::sqrt(re2 + im2));
    const double z_lo = std::sqrt(re2 + im2) * (1.0 - 1e-9);
    const CBall logz = log_paper(spec.pt.re, spec.pt.im, spec.pt.prec);
    const double lu = logz.abs_upper();

    CheckReport rep;
    rep.check_id = rec_id(which, spec.l, spec.k, spec.nu, true, z_str(spec.pt));
    rep.params = base_params(spec.l, spec.k, spec.nu, spec.T);
    rep.params.emplace_back("z", z_str(spec.pt));
    rep.params.emplace_back("prec", std::to_string(spec.pt.prec.bits));

    double residual = 0.0, budget = 0.0;
    rep.pass = true;
    long wlo = std::numeric_limits<long>::min(), whi = std::numeric_limits<long>::max();
    for (unsigned i = 0; i < s.lhs.size(); ++i) {
        const LogSeries& a = s.lhs[i];
        const LogSeries& b = s.rhs[i];
        // common comparison window: only provably exact coefficients of
        // both sides take part in the evaluation
        constexpr int kBot = std::numeric_limits<int>::min();
        int lo_a = a.truncated() ? a.e_min() : kBot;
        int lo_b = b.truncated() ? b.e_min() : kBot;
        int lo = std::max(lo_a, lo_b);
        if (lo == kBot) lo = std::min(a.e_min(), b.e_min());
        int hi = std::max(a.e_max(), b.e_max());
        if (lo > hi) {
            rep.pass = false;
            rep.detail = "entry " + std::to_string(i + 1) + ": empty comparison window";
            break;
        }
        wlo = std::max(wlo, static_cast<long>(lo));
        whi = std::min(whi, static_cast<long>(hi));

        CBall va = ls_eval(a.restricted(lo, hi), spec.pt, TailBound::none());
        CBall vb = ls_eval(b.restricted(lo, hi), spec.pt, TailBound::none());
        CBall diff = sub(va, vb);
        const double res_i = fudge_up(std::hypot(diff.re_double(), diff.im_double()));

        // budget: rounding radii of both evaluations, plus everything each
        // side omits below the window, pushed through the operator norms
        double omitted = 0.0;
        for (int e = a.e_min(); e < lo; ++e)  // stored but outside the window
            omitted += column_eval_bound(a, e, lu, z_up, z_lo);
        for (int e = b.e_min(); e < lo; ++e)
            omitted += column_eval_bound(b, e, lu, z_up, z_lo);
        const long from = spec.T + 1;  // unknown region of every Y entry
        double tails_hi = 0.0, tails_lo = 0.0;
        for (unsigned j = 1; j <= s.lhs.size(); ++j) {
            tails_hi += y_entry_tail_bound(spec.l, spec.k, spec.nu, j, from, z_lo, lu);
            tails_lo += y_entry_tail_bound(spec.l, spec.k, spec.nu - 1, j, from, z_lo, lu);
        }
        const double unknown = row_norm(s.op_lhs, i, z_up) * tails_hi +
                               row_norm(s.op_rhs, i, z_up) * tails_lo;
        const double budget_i = fudge_up(va.radius() + vb.radius() + omitted + unknown);

        residual = std::max(residual, res_i);
        budget = std::max(budget, budget_i);
        if (res_i > budget_i) {
            rep.pass = false;
            if (rep.detail.empty())
                rep.detail = "entry " + std::to_string(i + 1) + ": residual " +
                             std::to_string(res_i) + " exceeds budget " + std::to_string(budget_i);
        }
    }
    rep.residual = residual;
    rep.budget = budget;
    if (wlo <= whi) rep.window = std::make_pair(wlo, whi);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::vector<CheckReport> sweep(const SweepConfig& config) {
    struct Item {
        unsigned l, k, nu;
        RecEq eq;
    };
    std::vector<Item> items;
    for (unsigned l : config.ls) {
        for (unsigned k : family_k_set(l)) {
            if (config.k && *config.k != k) continue;
            for (unsigned nu = config.nu_min; nu <= config.nu_max; ++nu) {
                items.push_back({l, k, nu, RecEq::Eq16});
                items.push_back({l, k, nu, RecEq::Eq17});
            }
        }
    }
    std::vector<CheckReport> out(items.size());
    auto worker = [&](size_t begin, size_t step) {
        for (size_t idx = begin; idx < items.size(); idx += step) {
            const Item& it = items[idx];
            const long T = config.T.value_or(default_truncation(it.nu));
            MatrixSet mats = config.mutation ? mutated_matrices(it.l, *config.mutation)
                                             : canonical_matrices(it.l);
            try {
                if (config.numeric) {
                    NumericCheckSpec spec(it.l, it.k, it.nu, *config.pt, T);
                    out[idx] = verify_numeric(spec, it.eq, &mats);
                } else {
                    ExactCheckSpec spec(it.l, it.k, it.nu, it.nu, T);
                    auto r = (it.eq == RecEq::Eq16) ? verify_eq16_exact(spec, &mats)
                                                    : verify_eq17_exact(spec, &mats);
                    out[idx] = r.at(0);
                }
            } catch (const std::exception& ex) {
                CheckReport rep;
                rep.check_id = rec_id(it.eq, it.l, it.k, it.nu, config.numeric);
                rep.pass = false;
                rep.detail = std::string("error: ") + ex.what();
                out[idx] = rep;
            }
        }
    };
    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1 || items.size() <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t, jobs);
        for (auto& th : pool) th.join();
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
    return out;
}

}  // namespace dqs
