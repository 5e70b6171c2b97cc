#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dqs/rational.hpp"

namespace dqs {

// Dense polynomial in the two formal variables z and u (u stands for
// 1/nu) over the rationals.  Degrees stay tiny (z-degree <= 2, u-degree
// <= 2(1+l)), so nothing sparse is needed.
class PolyZU {
public:
    PolyZU() = default;
    static PolyZU constant(const Rational& r);
    static PolyZU var_z();
    static PolyZU var_u();

    bool is_zero() const { return c_.empty(); }
    int z_degree() const { return static_cast<int>(c_.size()) - 1; }
    int u_degree() const;
    Rational coeff(unsigned dz, unsigned du) const;

    PolyZU& operator+=(const PolyZU& o);
    PolyZU& operator-=(const PolyZU& o);
    friend PolyZU operator+(PolyZU a, const PolyZU& b) { return a += b; }
    friend PolyZU operator-(PolyZU a, const PolyZU& b) { return a -= b; }
    friend PolyZU operator*(const PolyZU& a, const PolyZU& b);
    friend PolyZU operator-(const PolyZU& a);
    friend bool operator==(const PolyZU& a, const PolyZU& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyZU& a, const PolyZU& b) { return !(a == b); }

    PolyZU pow(unsigned e) const;
    // substitute an exact rational for u, leaving a polynomial in z
    PolyZU subst_u(const Rational& u) const;
    // coefficient of z^dz of a u-free polynomial
    Rational z_coeff(unsigned dz) const;

    std::string str() const;

private:
    void trim();
    void set(unsigned dz, unsigned du, const Rational& v);

    // c_[dz][du]
    std::vector<std::vector<Rational>> c_;
};

// Square matrix with PolyZU entries.
class PolyMatrix {
public:
    PolyMatrix() : n_(0) {}
    explicit PolyMatrix(unsigned n) : n_(n), e_(static_cast<size_t>(n) * n) {}
    static PolyMatrix identity(unsigned n);

    unsigned dim() const { return n_; }
    PolyZU& at(unsigned r, unsigned c) { return e_[static_cast<size_t>(r) * n_ + c]; }
    const PolyZU& at(unsigned r, unsigned c) const { return e_[static_cast<size_t>(r) * n_ + c]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    bool is_zero() const;

    PolyMatrix subst_u(const Rational& u) const;
    PolyMatrix scaled(const Rational& s) const;

private:
    unsigned n_;
    std::vector<PolyZU> e_;
};

// Diagonal matrix T_{n,lambda} = diag(1, lambda, ..., lambda^(n-1)).
struct DiagSpec {
    unsigned n;
    PolyZU lambda;
};
PolyMatrix t_matrix(const DiagSpec& spec);
PolyMatrix t_matrix(unsigned n, const Rational& lambda);

// Raw transcription of one constant matrix: prefactor kept separate from
// the table so the source mirrors the displayed form entry for entry.
struct RawMatrix {
    unsigned n;
    long prefactor;
    std::array<std::array<long, 8>, 8> entry;
};

const RawMatrix& s_raw(unsigned l);
const RawMatrix& v_raw(unsigned l, unsigned i);
unsigned v_count(unsigned l);  // 2 + l matrices, i = 0 .. 1+l

// The constant matrices with prefactors multiplied through, as used by
// the recurrence.  An optional single-entry perturbation supports the
// fault-detection tests.
struct Mutation {
    unsigned l;
    int target;  // -1 for S, i >= 0 for V(i)
    unsigned row, col;
    long delta;
};

struct MatrixSet {
    unsigned n = 0;
    PolyMatrix s;
    std::vector<PolyMatrix> v;
};

MatrixSet canonical_matrices(unsigned l);
MatrixSet mutated_matrices(unsigned l, const Mutation& mut);

PolyMatrix s_matrix(unsigned l);
PolyMatrix v_matrix(unsigned l, unsigned i);

// A(z; nu) = S + z sum_i nu^-i V(i).  The symbolic forms keep u (and -u
// for the negated argument); the rational form substitutes u = 1/nu for a
// signed nonzero nu.
PolyMatrix a_matrix_sym(unsigned l, bool negate_nu, const MatrixSet& mats);
PolyMatrix a_matrix_sym(unsigned l, bool negate_nu = false);
PolyMatrix a_matrix_at(unsigned l, long nu, const MatrixSet& mats);
PolyMatrix a_matrix_at(unsigned l, long nu);

struct IdentityCheck {
    std::string id;
    bool pass;
    std::string witness;  // first offending entry when failing
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};

// The four structural identities, verified entrywise over Q[z,u]:
//   inverse:     A(z;-nu) T_-1 A(z;nu) = T_-1         (symbolic in z and u)
//   involution:  (S T_-1)^2 = I
//   twist:       S T_-1 V(i) = -(-1)^i V(i) T_-1 S     for 0 <= i <= 1+l
//   annihilate:  V(i) T_-1 V(k) = 0                    for all i, k
IdentityReport check_identities(unsigned l, const MatrixSet& mats);
IdentityReport check_identities(unsigned l);

}  // namespace dqs
