#include "dqs/f_family.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "dqs/r_derivatives.hpp"

namespace dqs {

namespace {

const std::vector<unsigned> kSet0 = {1, 2, 3};
const std::vector<unsigned> kSet1 = {1, 2, 3, 5};
const std::vector<unsigned> kSet2 = {1, 2, 3, 5, 7};

enum class Kind { F1, F2, F3, F4, F5, F5V, F6, F7, F7V, F8 };

using FKey = std::tuple<Kind, unsigned, unsigned, long>;
using YKey = std::tuple<unsigned, unsigned, unsigned, long>;

std::mutex cache_mutex;
std::map<FKey, std::shared_ptr<const LogSeries>> f_cache;
std::map<YKey, std::shared_ptr<const std::vector<LogSeries>>> y_cache;

template <typename Map, typename Key, typename Fn>
auto cached(Map& map, const Key& key, Fn&& build) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = map.find(key);
        if (it != map.end()) return it->second;
    }
    auto value = std::make_shared<const typename Map::mapped_type::element_type>(build());
    std::lock_guard<std::mutex> lock(cache_mutex);
    return map.emplace(key, std::move(value)).first->second;  // first insert wins
}

void require_l(unsigned l, unsigned min_l, const char* who) {
    if (l > 2) throw std::invalid_argument(std::string(who) + ": l in {0,1,2} required");
    if (l < min_l)
        throw std::invalid_argument(std::string(who) + ": l >= " + std::to_string(min_l) + " required");
}

}  // namespace

const std::vector<unsigned>& family_k_set(unsigned l) {
    switch (l) {
        case 0: return kSet0;
        case 1: return kSet1;
        case 2: return kSet2;
        default: throw std::invalid_argument("family_k_set: l in {0,1,2} required");
    }
}

std::string family_k_set_str(unsigned l) {
    std::string s = "K_" + std::to_string(l) + "={";
    const auto& ks = family_k_set(l);
    for (size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
    return s + "}";
}

FamilyIndex::FamilyIndex(unsigned l_, unsigned k_, unsigned nu_) : l(l_), k(k_), nu(nu_) {
    const auto& ks = family_k_set(l_);
    for (unsigned kk : ks)
        if (kk == k_) return;
    throw std::invalid_argument("FamilyIndex: k=" + std::to_string(k_) + " not in " + family_k_set_str(l_));
}

LogSeries build_f1(unsigned l, unsigned nu) {
    require_l(l, 0, "build_f1");
    auto build = [=]() {
        LogSeries s = LogSeries::zero_window(0, static_cast<int>(nu), 0, false);
        const unsigned m = 2 + l;
        for (unsigned k = 0; k <= nu; ++k) {
            Rational c = Rational(binomial(nu, static_cast<long>(k))).pow(m) *
                         Rational(binomial(nu + k, static_cast<long>(nu))).pow(m);
            if (((nu + k) * l) % 2 == 1) c = -c;
            s.set_coeff(0, static_cast<int>(k), CoeffW(c));
        }
        return s;
    };
    return *cached(f_cache, FKey{Kind::F1, l, nu, 0}, build);
}

LogSeries build_tail_series(unsigned l, unsigned nu, long T, unsigned p, long t_start) {
    require_l(l, 0, "build_tail_series");
    if (t_start < 1) throw std::invalid_argument("build_tail_series: t_start >= 1 required");
    if (T < t_start) throw std::invalid_argument("build_tail_series: T >= t_start required");
    const unsigned m = 2 + l;
    Rational pref(1);
    for (unsigned i = 1; i <= p; ++i) pref *= Rational(-1, static_cast<long>(i));  // (-1)^p / p!
    LogSeries s = LogSeries::zero_window(static_cast<int>(-T), static_cast<int>(-t_start), 0, true);
    for (long t = t_start; t <= T; ++t) {
        const RPoint pt(Rational(t), nu);
        Rational v = (p == 0) ? r_eval(pt).pow(m) : d_r_pow(DerivOrder(p, m), pt);
        s.set_coeff(0, static_cast<int>(-t), CoeffW(pref * v));
    }
    return s;
}

namespace {

LogSeries cached_tail(Kind kind, unsigned l, unsigned nu, long T, unsigned p) {
    Truncation check(T, l, nu);  // enforce the window floor
    (void)check;
    return *cached(f_cache, FKey{kind, l, nu, T},
                   [=]() { return build_tail_series(l, nu, T, p, static_cast<long>(nu) + 1); });
}

}  // namespace

LogSeries build_f2(unsigned l, unsigned nu, long T) {
    require_l(l, 0, "build_f2");
    return cached_tail(Kind::F2, l, nu, T, 0);
}

LogSeries build_f4(unsigned l, unsigned nu, long T) {
    require_l(l, 0, "build_f4");
    return cached_tail(Kind::F4, l, nu, T, 1);
}

LogSeries build_f6(unsigned l, unsigned nu, long T) {
    require_l(l, 1, "build_f6");
    return cached_tail(Kind::F6, l, nu, T, 2);
}

LogSeries build_f8(unsigned l, unsigned nu, long T) {
    require_l(l, 2, "build_f8");
    return cached_tail(Kind::F8, l, nu, T, 3);
}

LogSeries build_f3(unsigned l, unsigned nu, long T) {
    require_l(l, 0, "build_f3");
    auto build = [=]() { return ls_add(ls_mul_log(build_f2(l, nu, T)), build_f4(l, nu, T)); };
    return *cached(f_cache, FKey{Kind::F3, l, nu, T}, build);
}

LogSeries build_f5(unsigned l, unsigned nu, long T) {
    require_l(l, 1, "build_f5");
    auto build = [=]() {
        LogSeries log2_f2 = ls_mul_log(ls_mul_log(build_f2(l, nu, T)));
        return ls_add(ls_add(ls_scale(CoeffW(Rational(1, 2)), log2_f2),
                             ls_mul_log(build_f4(l, nu, T))),
                      build_f6(l, nu, T));
    };
    return *cached(f_cache, FKey{Kind::F5, l, nu, T}, build);
}

LogSeries build_f5_vee(unsigned l, unsigned nu, long T) {
    require_l(l, 1, "build_f5_vee");
    auto build = [=]() {
        return ls_add(ls_scale(-CoeffW::w(), build_f3(l, nu, T)), build_f5(l, nu, T));
    };
    return *cached(f_cache, FKey{Kind::F5V, l, nu, T}, build);
}

LogSeries build_f7(unsigned l, unsigned nu, long T) {
    require_l(l, 2, "build_f7");
    auto build = [=]() {
        LogSeries log3_f2 = ls_mul_log(ls_mul_log(ls_mul_log(build_f2(l, nu, T))));
        LogSeries log2_f3 = ls_mul_log(ls_mul_log(build_f3(l, nu, T)));
        return ls_add(ls_add(ls_scale(CoeffW(Rational(1, 6)), log3_f2),
                             ls_scale(CoeffW(Rational(-1, 2)), log2_f3)),
                      ls_add(ls_mul_log(build_f5(l, nu, T)), build_f8(l, nu, T)));
    };
    return *cached(f_cache, FKey{Kind::F7, l, nu, T}, build);
}

LogSeries build_f7_vee(unsigned l, unsigned nu, long T) {
    require_l(l, 2, "build_f7_vee");
    auto build = [=]() {
        // 2 pi^2/3 = -(2/3) w^2
        CoeffW c = CoeffW::monomial(Rational(-2, 3), 2);
        return ls_add(build_f7(l, nu, T), ls_scale(c, build_f3(l, nu, T)));
    };
    return *cached(f_cache, FKey{Kind::F7V, l, nu, T}, build);
}

LogSeries build_f(const FamilyIndex& idx, long T) {
    switch (idx.k) {
        case 1: return build_f1(idx.l, idx.nu);
        case 2: return build_f2(idx.l, idx.nu, T);
        case 3: return build_f3(idx.l, idx.nu, T);
        case 5: return build_f5_vee(idx.l, idx.nu, T);
        case 7: return build_f7_vee(idx.l, idx.nu, T);
        default: throw std::invalid_argument("build_f: k not in " + family_k_set_str(idx.l));
    }
}

std::vector<LogSeries> build_Y(const FamilyIndex& idx, const Truncation& T) {
    if (idx.nu < 1) throw std::invalid_argument("build_Y: nu >= 1 required");
    auto build = [&]() {
        const unsigned n = 4 + 2 * idx.l;
        std::vector<LogSeries> col;
        col.reserve(n);
        col.push_back(build_f(idx, T.T));
        const CoeffW inv_nu(Rational(1, static_cast<long>(idx.nu)));
        for (unsigned i = 1; i < n; ++i) col.push_back(ls_scale(inv_nu, ls_delta(col.back())));
        return col;
    };
    return *cached(y_cache, YKey{idx.l, idx.k, idx.nu, T.T}, build);
}

void clear_series_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    f_cache.clear();
    y_cache.clear();
}

}  // namespace dqs
