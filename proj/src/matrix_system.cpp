#include "dqs/matrix_system.hpp"

#include <stdexcept>

namespace dqs {

void PolyZU::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

void PolyZU::set(unsigned dz, unsigned du, const Rational& v) {
    if (c_.size() <= dz) c_.resize(dz + 1);
    if (c_[dz].size() <= du) c_[dz].resize(du + 1, Rational(0));
    c_[dz][du] = v;
}

PolyZU PolyZU::constant(const Rational& r) {
    PolyZU p;
    if (!r.is_zero()) p.set(0, 0, r);
    return p;
}

PolyZU PolyZU::var_z() {
    PolyZU p;
    p.set(1, 0, Rational(1));
    return p;
}

PolyZU PolyZU::var_u() {
    PolyZU p;
    p.set(0, 1, Rational(1));
    return p;
}

int PolyZU::u_degree() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

Rational PolyZU::coeff(unsigned dz, unsigned du) const {
    if (dz >= c_.size() || du >= c_[dz].size()) return Rational(0);
    return c_[dz][du];
}

PolyZU& PolyZU::operator+=(const PolyZU& o) {
    for (unsigned dz = 0; dz < o.c_.size(); ++dz)
        for (unsigned du = 0; du < o.c_[dz].size(); ++du)
            if (!o.c_[dz][du].is_zero()) set(dz, du, coeff(dz, du) + o.c_[dz][du]);
    trim();
    return *this;
}

PolyZU& PolyZU::operator-=(const PolyZU& o) {
    for (unsigned dz = 0; dz < o.c_.size(); ++dz)
        for (unsigned du = 0; du < o.c_[dz].size(); ++du)
            if (!o.c_[dz][du].is_zero()) set(dz, du, coeff(dz, du) - o.c_[dz][du]);
    trim();
    return *this;
}

PolyZU operator*(const PolyZU& a, const PolyZU& b) {
    PolyZU r;
    for (unsigned az = 0; az < a.c_.size(); ++az)
        for (unsigned au = 0; au < a.c_[az].size(); ++au) {
            if (a.c_[az][au].is_zero()) continue;
            for (unsigned bz = 0; bz < b.c_.size(); ++bz)
                for (unsigned bu = 0; bu < b.c_[bz].size(); ++bu) {
                    if (b.c_[bz][bu].is_zero()) continue;
                    r.set(az + bz, au + bu, r.coeff(az + bz, au + bu) + a.c_[az][au] * b.c_[bz][bu]);
                }
        }
    r.trim();
    return r;
}

PolyZU operator-(const PolyZU& a) {
    PolyZU r = a;
    for (auto& row : r.c_)
        for (auto& x : row) x = -x;
    return r;
}

PolyZU PolyZU::pow(unsigned e) const {
    PolyZU r = constant(Rational(1));
    PolyZU base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

PolyZU PolyZU::subst_u(const Rational& u) const {
    PolyZU r;
    for (unsigned dz = 0; dz < c_.size(); ++dz) {
        Rational acc(0);
        for (size_t du = c_[dz].size(); du-- > 0;) acc = acc * u + c_[dz][du];
        if (!acc.is_zero()) r.set(dz, 0, acc);
    }
    r.trim();
    return r;
}

Rational PolyZU::z_coeff(unsigned dz) const {
    if (u_degree() > 0) throw std::logic_error("PolyZU::z_coeff: polynomial still depends on u");
    return coeff(dz, 0);
}

std::string PolyZU::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (unsigned dz = 0; dz < c_.size(); ++dz)
        for (unsigned du = 0; du < c_[dz].size(); ++du) {
            if (c_[dz][du].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[dz][du].str();
            if (dz == 1) s += "*z";
            if (dz > 1) s += "*z^" + std::to_string(dz);
            if (du == 1) s += "*u";
            if (du > 1) s += "*u^" + std::to_string(du);
        }
    return s;
}

PolyMatrix PolyMatrix::identity(unsigned n) {
    PolyMatrix m(n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = PolyZU::constant(Rational(1));
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix r(a.n_);
    for (unsigned i = 0; i < a.n_; ++i)
        for (unsigned j = 0; j < a.n_; ++j) {
            PolyZU s;
            for (unsigned k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::subst_u(const Rational& u) const {
    PolyMatrix r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].subst_u(u);
    return r;
}

PolyMatrix PolyMatrix::scaled(const Rational& s) const {
    PolyMatrix r = *this;
    PolyZU c = PolyZU::constant(s);
    for (auto& e : r.e_) e = e * c;
    return r;
}

PolyMatrix t_matrix(const DiagSpec& spec) {
    PolyMatrix m(spec.n);
    for (unsigned i = 0; i < spec.n; ++i) m.at(i, i) = spec.lambda.pow(i);
    return m;
}

PolyMatrix t_matrix(unsigned n, const Rational& lambda) {
    return t_matrix(DiagSpec{n, PolyZU::constant(lambda)});
}

namespace {

// Transcription of the recurrence constants.  Prefactors are kept apart
// from the tables so each table mirrors its displayed form.
const RawMatrix kS0 = {4, 1, {{
    {1, -4, 8, -12, 0, 0, 0, 0},
    {0, 1, -4, 8, 0, 0, 0, 0},
    {0, 0, 1, -4, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0},
    {}, {}, {}, {},
}}};

const RawMatrix kS1 = {6, 1, {{
    {-1, 6, -18, 38, -66, 102, 0, 0},
    {0, -1, 6, -18, 38, -66, 0, 0},
    {0, 0, -1, 6, -18, 38, 0, 0},
    {0, 0, 0, -1, 6, -18, 0, 0},
    {0, 0, 0, 0, -1, 6, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 0},
    {}, {},
}}};

const RawMatrix kS2 = {8, 1, {{
    {1, -8, 32, -88, 192, -360, 608, -952},
    {0, 1, -8, 32, -88, 192, -360, 608},
    {0, 0, 1, -8, 32, -88, 192, -360},
    {0, 0, 0, 1, -8, 32, -88, 192},
    {0, 0, 0, 0, 1, -8, 32, -88},
    {0, 0, 0, 0, 0, 1, -8, 32},
    {0, 0, 0, 0, 0, 0, 1, -8},
    {0, 0, 0, 0, 0, 0, 0, 1},
}}};

const RawMatrix kV00 = {4, 4, {{
    {4, -5, -2, 3, 0, 0, 0, 0},
    {-3, 4, 1, -2, 0, 0, 0, 0},
    {2, -3, 0, 1, 0, 0, 0, 0},
    {-1, 2, -1, 0, 0, 0, 0, 0},
    {}, {}, {}, {},
}}};

const RawMatrix kV01 = {4, 4, {{
    {3, -6, 3, 0, 0, 0, 0, 0},
    {-2, 4, -2, 0, 0, 0, 0, 0},
    {1, -2, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
    {}, {}, {}, {},
}}};

const RawMatrix kV10 = {6, 1, {{
    {146, -198, -180, 268, 66, -102, 0, 0},
    {-102, 146, 108, -180, -38, 66, 0, 0},
    {66, -102, -52, 108, 18, -38, 0, 0},
    {-38, 66, 12, -52, -6, 18, 0, 0},
    {18, -38, 12, 12, 2, -6, 0, 0},
    {-6, 18, -20, 12, -6, 2, 0, 0},
    {}, {},
}}};

const RawMatrix kV11 = {6, 1, {{
    {240, -516, 108, 372, -204, 0, 0, 0},
    {-160, 348, -84, -236, 132, 0, 0, 0},
    {96, -212, 60, 132, -76, 0, 0, 0},
    {-48, 108, -36, -60, 36, 0, 0, 0},
    {16, -36, 12, 20, -12, 0, 0, 0},
    {0, -4, 12, -12, 4, 0, 0, 0},
    {}, {},
}}};

const RawMatrix kV12 = {6, 1, {{
    {102, -306, 306, -102, 0, 0, 0, 0},
    {-66, 198, -198, 66, 0, 0, 0, 0},
    {38, -114, 114, -38, 0, 0, 0, 0},
    {-18, 54, -54, 18, 0, 0, 0, 0},
    {6, -18, 18, -6, 0, 0, 0, 0},
    {-2, 6, -6, 2, 0, 0, 0, 0},
    {}, {},
}}};

const RawMatrix kV20 = {8, 8, {{
    {176, -249, -364, 545, 280, -431, -76, 119},
    {-119, 176, 227, -364, -169, 280, 45, -76},
    {76, -119, -128, 227, 92, -169, -24, 45},
    {-45, 76, 61, -128, -43, 92, 11, -24},
    {24, -45, -20, 61, 16, -43, -4, 11},
    {-11, 24, -1, -20, -5, 16, 1, -4},
    {4, -11, 8, -1, 4, -5, 0, 1},
    {-1, 4, -7, 8, -7, 4, -1, 0},
}}};

const RawMatrix kV21 = {8, 8, {{
    {455, -1020, -113, 1552, -603, -628, 357, 0},
    {-300, 682, 44, -996, 404, 394, -228, 0},
    {185, -428, -3, 592, -253, -228, 135, 0},
    {-104, 246, -16, -316, 144, 118, -72, 0},
    {51, -124, 19, 144, -71, -52, 33, 0},
    {-20, 50, -12, -52, 28, 18, -12, 0},
    {5, -12, 1, 16, -9, -4, 3, 0},
    {0, -2, 8, -12, 8, -2, 0, 0},
}}};

const RawMatrix kV22 = {8, 8, {{
    {400, -1243, 972, 542, -1028, 357, 0, 0},
    {-259, 808, -642, -332, 653, -228, 0, 0},
    {156, -489, 396, 186, -384, 135, 0, 0},
    {-85, 268, -222, -92, 203, -72, 0, 0},
    {40, -127, 108, 38, -92, 33, 0, 0},
    {-15, 48, -42, -12, 33, -12, 0, 0},
    {4, -13, 12, 2, -8, 3, 0, 0},
    {-1, 4, -6, 4, -1, 0, 0, 0},
}}};

const RawMatrix kV23 = {8, 8, {{
    {119, -476, 714, -476, 119, 0, 0, 0},
    {-76, 304, -456, 304, -76, 0, 0, 0},
    {45, -180, 270, -180, 45, 0, 0, 0},
    {-24, 96, -144, 96, -24, 0, 0, 0},
    {11, -44, 66, -44, 11, 0, 0, 0},
    {-4, 16, -24, 16, -4, 0, 0, 0},
    {1, -4, 6, -4, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
}}};

void require_l_range(unsigned l) {
    if (l > 2) throw std::out_of_range("l in {0,1,2} required");
}

PolyMatrix from_raw(const RawMatrix& raw, long extra_delta = 0, unsigned drow = 0, unsigned dcol = 0,
                    bool mutate = false) {
    PolyMatrix m(raw.n);
    for (unsigned r = 0; r < raw.n; ++r)
        for (unsigned c = 0; c < raw.n; ++c) {
            long e = raw.entry[r][c];
            if (mutate && r == drow && c == dcol) e += extra_delta;
            m.at(r, c) = PolyZU::constant(Rational(e * raw.prefactor));
        }
    return m;
}

}  // namespace

const RawMatrix& s_raw(unsigned l) {
    require_l_range(l);
    switch (l) {
        case 0: return kS0;
        case 1: return kS1;
        default: return kS2;
    }
}

unsigned v_count(unsigned l) {
    require_l_range(l);
    return l + 2;
}

const RawMatrix& v_raw(unsigned l, unsigned i) {
    require_l_range(l);
    if (i >= v_count(l)) throw std::out_of_range("v_raw: i in [0, 1+l] required");
    static const RawMatrix* vs[3][4] = {
        {&kV00, &kV01, nullptr, nullptr},
        {&kV10, &kV11, &kV12, nullptr},
        {&kV20, &kV21, &kV22, &kV23},
    };
    return *vs[l][i];
}

MatrixSet canonical_matrices(unsigned l) {
    MatrixSet m;
    m.n = s_raw(l).n;
    m.s = from_raw(s_raw(l));
    for (unsigned i = 0; i < v_count(l); ++i) m.v.push_back(from_raw(v_raw(l, i)));
    return m;
}

MatrixSet mutated_matrices(unsigned l, const Mutation& mut) {
    if (mut.l != l) return canonical_matrices(l);
    MatrixSet m;
    m.n = s_raw(l).n;
    m.s = from_raw(s_raw(l), mut.delta, mut.row, mut.col, mut.target == -1);
    for (unsigned i = 0; i < v_count(l); ++i)
        m.v.push_back(from_raw(v_raw(l, i), mut.delta, mut.row, mut.col,
                               mut.target == static_cast<int>(i)));
    return m;
}

PolyMatrix s_matrix(unsigned l) { return from_raw(s_raw(l)); }

PolyMatrix v_matrix(unsigned l, unsigned i) { return from_raw(v_raw(l, i)); }

PolyMatrix a_matrix_sym(unsigned l, bool negate_nu, const MatrixSet& mats) {
    (void)l;
    const PolyZU z = PolyZU::var_z();
    PolyZU u = PolyZU::var_u();
    if (negate_nu) u = -u;  // (-nu)^-i = (-u)^i
    PolyMatrix sum(mats.n);
    for (unsigned i = 0; i < mats.v.size(); ++i) {
        PolyZU w = z * u.pow(i);
        PolyMatrix term(mats.n);
        for (unsigned r = 0; r < mats.n; ++r)
            for (unsigned c = 0; c < mats.n; ++c) term.at(r, c) = mats.v[i].at(r, c) * w;
        sum = sum + term;
    }
    return mats.s + sum;
}

PolyMatrix a_matrix_sym(unsigned l, bool negate_nu) {
    return a_matrix_sym(l, negate_nu, canonical_matrices(l));
}

PolyMatrix a_matrix_at(unsigned l, long nu, const MatrixSet& mats) {
    if (nu == 0) throw PoleError("a_matrix_at: nu must be nonzero");
    return a_matrix_sym(l, false, mats).subst_u(Rational(1, nu));
}

PolyMatrix a_matrix_at(unsigned l, long nu) { return a_matrix_at(l, nu, canonical_matrices(l)); }

bool IdentityReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string first_diff(const PolyMatrix& got, const PolyMatrix& want, const std::string& tag) {
    for (unsigned r = 0; r < got.dim(); ++r)
        for (unsigned c = 0; c < got.dim(); ++c)
            if (got.at(r, c) != want.at(r, c))
                return tag + " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                       "): got " + got.at(r, c).str() + ", want " + want.at(r, c).str();
    return {};
}

}  // namespace

IdentityReport check_identities(unsigned l, const MatrixSet& mats) {
    require_l_range(l);
    IdentityReport rep;
    const unsigned n = mats.n;
    const PolyMatrix tm1 = t_matrix(n, Rational(-1));

    {
        PolyMatrix lhs = a_matrix_sym(l, true, mats) * tm1 * a_matrix_sym(l, false, mats);
        std::string w = first_diff(lhs, tm1, "A(z;-nu) T_-1 A(z;nu)");
        rep.checks.push_back({"eq21_inverse", w.empty(), w});
    }
    {
        PolyMatrix st = mats.s * tm1;
        std::string w = first_diff(st * st, PolyMatrix::identity(n), "(S T_-1)^2");
        rep.checks.push_back({"eq22_involution", w.empty(), w});
    }
    {
        std::string w;
        for (unsigned i = 0; i < mats.v.size() && w.empty(); ++i) {
            Rational sign = (i % 2 == 0) ? Rational(-1) : Rational(1);  // -(-1)^i
            PolyMatrix lhs = mats.s * tm1 * mats.v[i];
            PolyMatrix rhs = (mats.v[i] * tm1 * mats.s).scaled(sign);
            w = first_diff(lhs, rhs, "i=" + std::to_string(i));
        }
        rep.checks.push_back({"eq23_twist", w.empty(), w});
    }
    {
        std::string w;
        const PolyMatrix zero(n);
        for (unsigned i = 0; i < mats.v.size() && w.empty(); ++i)
            for (unsigned k = 0; k < mats.v.size() && w.empty(); ++k)
                w = first_diff(mats.v[i] * tm1 * mats.v[k], zero,
                               "(i,k)=(" + std::to_string(i) + "," + std::to_string(k) + ")");
        rep.checks.push_back({"eq24_annihilate", w.empty(), w});
    }
    return rep;
}

IdentityReport check_identities(unsigned l) { return check_identities(l, canonical_matrices(l)); }

}  // namespace dqs
