#include "dqs/rational.hpp"

#include <cctype>
#include <cmath>
#include <mutex>
#include <utility>
#include <vector>

namespace dqs {

Rational Rational::pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

double Rational::abs_double_upper() const {
    // mpq_get_d truncates toward zero, so inflate by a couple of ulps.
    double d = std::fabs(q_.get_d());
    if (d == 0.0 && !is_zero()) return 5e-324;
    return d * (1.0 + 0x1p-50) + 0x1p-1060;
}

std::string Rational::str() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
    return s;
}

namespace {

constexpr unsigned long kBinomialRowCap = 256;

std::vector<std::vector<Int>>& binomial_rows() {
    static std::vector<std::vector<Int>> rows;
    return rows;
}

std::mutex& binomial_mutex() {
    static std::mutex m;
    return m;
}

std::vector<Int> make_row(unsigned long n) {
    std::vector<Int> row(n + 1);
    row[0] = 1;
    for (unsigned long k = 1; k <= n; ++k) {
        // multiplicative recurrence C(n,k) = C(n,k-1)*(n-k+1)/k, exact
        row[k] = row[k - 1] * Int(n - k + 1) / Int(k);
    }
    return row;
}

}  // namespace

Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
    if (n <= kBinomialRowCap) {
        std::lock_guard<std::mutex> lock(binomial_mutex());
        auto& rows = binomial_rows();
        if (rows.size() <= n) rows.resize(n + 1);
        if (rows[n].empty()) rows[n] = make_row(n);
        return rows[n][static_cast<unsigned long>(k)];
    }
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Rational power_sum(unsigned p, long a, long b) {
    if (p == 0) throw std::invalid_argument("power_sum: p must be positive");
    if (a > b) return Rational(0);
    if (a <= 0 && 0 <= b) throw PoleError("power_sum: range contains 0");
    Rational s(0);
    for (long k = a; k <= b; ++k) s += Rational(Int(k)).pow(p).inverse();
    return s;
}

Rational parse_rational(const std::string& s) {
    std::string t = (!s.empty() && s.front() == '+') ? s.substr(1) : s;
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    try {
        return Rational(mpq_class(t, 10));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    }
}

std::pair<Rational, Rational> parse_complex(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return {parse_rational(s), Rational(0)};
    s.pop_back();
    size_t split = std::string::npos;
    for (size_t p = s.size(); p-- > 1;) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/') {
            split = p;
            break;
        }
    }
    std::string re_part = (split == std::string::npos) ? "" : s.substr(0, split);
    std::string im_part = (split == std::string::npos) ? s : s.substr(split);
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    Rational im(1);
    if (im_part == "-")
        im = Rational(-1);
    else if (!im_part.empty() && im_part != "+")
        im = parse_rational(im_part);
    return {re, im};
}

}  // namespace dqs
