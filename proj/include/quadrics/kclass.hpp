#pragma once

#include "quadrics/chow.hpp"
#include "quadrics/numeric.hpp"

#include <compare>
#include <map>
#include <string>

namespace quadrics {

// Formal K-theory classes on the quadric threefold Q3, written as integer
// combinations over a fixed atom vocabulary:
//
//   O(t)   line bundles
//   S(t)   twists of the spinor bundle S (rank 2, c1 = h, c2 = l, h0(S) = 4,
//          S^vee = S(-1), with the tautological sequence 0->S^vee->O^4->S->0)
//   T4     the restriction of T_{P4}(-2); in K-theory 5[O(-1)] - [O(-2)]
//   Om4    the restriction of Omega_{P4}(1); in K-theory 5[O] - [O(1)]
//   O_H    structure sheaf of a hyperplane section (a quadric surface)
//   O_L    structure sheaf of a line
//   k(p)   skyscraper at a point
//
// The torsion atoms carry Chern data only; duals and restrictions are not
// defined for them in this vocabulary.

enum class AtomKind3 { Line, Spinor, TP4, OmegaP4, OH, OL, KP };

struct Atom3 {
    AtomKind3 kind{AtomKind3::Line};
    int t{0};  // twist, meaningful for Line and Spinor only

    friend auto operator<=>(const Atom3&, const Atom3&) = default;
};

inline Atom3 line3(int t) { return {AtomKind3::Line, t}; }
inline Atom3 spinor3(int t) { return {AtomKind3::Spinor, t}; }
inline Atom3 tp4() { return {AtomKind3::TP4, 0}; }
inline Atom3 omega_p4() { return {AtomKind3::OmegaP4, 0}; }
inline Atom3 o_hyperplane() { return {AtomKind3::OH, 0}; }
inline Atom3 o_line() { return {AtomKind3::OL, 0}; }
inline Atom3 skyscraper3() { return {AtomKind3::KP, 0}; }

struct KClass3 {
    std::map<Atom3, Int> c;  // atom -> multiplicity, zero entries erased

    void add(const Atom3& a, const Int& n) {
        if (n == 0)
            return;
        auto it = c.find(a);
        if (it == c.end()) {
            c.emplace(a, n);
        } else {
            it->second += n;
            if (it->second == 0)
                c.erase(it);
        }
    }

    KClass3& operator+=(const KClass3& o) {
        for (const auto& [a, n] : o.c)
            add(a, n);
        return *this;
    }
    KClass3& operator-=(const KClass3& o) {
        for (const auto& [a, n] : o.c)
            add(a, -n);
        return *this;
    }
    friend KClass3 operator+(KClass3 x, const KClass3& y) { return x += y; }
    friend KClass3 operator-(KClass3 x, const KClass3& y) { return x -= y; }
    KClass3 operator*(const Int& s) const {
        KClass3 r;
        if (s == 0)
            return r;
        for (const auto& [a, n] : c)
            r.c.emplace(a, n * s);
        return r;
    }

    // Formal equality of atom combinations; semantic K-theory equality is
    // kclass3_equal below.
    friend bool operator==(const KClass3&, const KClass3&) = default;
};

inline KClass3 single3(const Atom3& a, const Int& n = 1) {
    KClass3 x;
    x.add(a, n);
    return x;
}

// Chern data of a class on Q3 in the fixed basis: c1 = c1 * h, c2 = c2 * l,
// c3 = c3 * pt. All entries are integers; the computation never leaves the
// integral Chow ring.
struct ChernData3 {
    Int rank{}, c1{}, c2{}, c3{};

    friend bool operator==(const ChernData3&, const ChernData3&) = default;
};

// K-theory classes on the quadric surface. Atoms are the line bundles O(a,b)
// and the skyscraper k(p), the latter only as a rank-zero correction term.
enum class AtomKind2 { Line, KP };

struct Atom2 {
    AtomKind2 kind{AtomKind2::Line};
    int a{0}, b{0};

    friend auto operator<=>(const Atom2&, const Atom2&) = default;
};

inline Atom2 line2(int a, int b) { return {AtomKind2::Line, a, b}; }
inline Atom2 skyscraper2() { return {AtomKind2::KP, 0, 0}; }

struct KClass2 {
    std::map<Atom2, Int> c;

    void add(const Atom2& a, const Int& n) {
        if (n == 0)
            return;
        auto it = c.find(a);
        if (it == c.end()) {
            c.emplace(a, n);
        } else {
            it->second += n;
            if (it->second == 0)
                c.erase(it);
        }
    }

    KClass2& operator+=(const KClass2& o) {
        for (const auto& [a, n] : o.c)
            add(a, n);
        return *this;
    }
    KClass2& operator-=(const KClass2& o) {
        for (const auto& [a, n] : o.c)
            add(a, -n);
        return *this;
    }
    friend KClass2 operator+(KClass2 x, const KClass2& y) { return x += y; }
    friend KClass2 operator-(KClass2 x, const KClass2& y) { return x -= y; }

    friend bool operator==(const KClass2&, const KClass2&) = default;
};

inline KClass2 single2(const Atom2& a, const Int& n = 1) {
    KClass2 x;
    x.add(a, n);
    return x;
}

// Chern data on the surface: rank, bidegree (c1a, c1b) of c1, and the degree
// of c2 (coefficient of pt).
struct ChernData2 {
    Int rank{}, c1a{}, c1b{}, c2{};

    friend bool operator==(const ChernData2&, const ChernData2&) = default;
};

// --- operations on Q3 classes -------------------------------------------

// Total Chern class data via truncated Chern polynomial arithmetic (Whitney
// formula, with formal inverses for negative multiplicities). Total on the
// whole vocabulary, torsion atoms included.
ChernData3 chern_of(const KClass3& x);

// Chern data of x(t) via the universal twist formulas
//   c1(E(t)) = c1 + r t h
//   c2(E(t)) = c2 + (r-1) t c1 h + C(r,2) t^2 h^2
//   c3(E(t)) = c3 + (r-2) t c2 h + C(r-1,2) t^2 c1 h^2 + C(r,3) t^3 h^3
ChernData3 twist(const ChernData3& d, int t);

// Tensoring by O(t). Line and spinor atoms shift their twist; T4 and Om4 are
// rewritten through their defining sequences; k(p) is twist invariant; the
// remaining torsion atoms leave the vocabulary and are rejected.
KClass3 twist(const KClass3& x, int t);

// Dual class: O(t) -> O(-t), S(t) -> S(-1-t) (since S^vee = S(-1)); T4 and
// Om4 are rewritten into line bundles first. Torsion atoms are rejected.
KClass3 dual(const KClass3& x);

// Chern sign rule (-1)^i c_i for the dual class.
ChernData3 dual(const ChernData3& d);

// Chern data of S^vee (x) E from the closed formulas
//   rank = 2r
//   c1 = 2 c1(E) - r h
//   c2 = 2 c2(E) - (2r-1) c1 h + c1^2 + C(r,2) h^2 + r c2(S)
//   c3 = 2 c3 - 2(r-1) c2 h + (r-1)^2 c1 h^2 + 2(r-1) c1 c2(S) + 2 c1 c2
//        - (r-1) c1^2 h - r(r^2-1)/3
ChernData3 tensor_spinor_dual(const ChernData3& d);

// The same operation at the K-class level, expanding atom by atom:
// S^vee (x) O(t) = S(t-1), and S^vee (x) S(t) expands in the rank-4 basis
// {[O],[O(-1)],[O(-2)],[S(-1)]} as [O] - 6[O(-1)] + [O(-2)] + 4[S(-1)],
// twisted by t. Torsion atoms are rejected.
KClass3 tensor_spinor_dual_expand(const KClass3& x);

// Restriction to a smooth hyperplane section Q2: O(t) -> O(t,t) and
// S(t) -> O(1+t,t) + O(t,1+t) (the spinor bundle restricts to the sum of the
// two rulings' line bundles). Torsion atoms are rejected.
KClass2 restrict_to_q2(const KClass3& x);

// Chern characters (rational Chow vectors); used by the Riemann-Roch oracle
// and by the dual-route tests.
ChowClass3Q ch3(const ChernData3& d);
ChowClass3Q ch3(const KClass3& x);
// Inverse conversion; throws if the vector is not the character of an
// integral class.
ChernData3 chern_from_ch3(const ChowClass3Q& v);

// --- operations on Q2 classes -------------------------------------------

ChernData2 chern_of(const KClass2& x);
ChowClass2Q ch2(const KClass2& x);
ChernData2 chern_from_ch2(const ChowClass2Q& v);

// Semantic equality on the surface: the invariant quadruple
// (rank, c1 bidegree, deg c2) decides equality in K-theory of P1 x P1; the
// Euler characteristic is compared as a redundant cross-check.
bool kclass2_equal(const KClass2& x, const KClass2& y);

// Semantic equality on the threefold: rank and Chern data decide equality
// (the Chern character embeds K(Q3) into the rational Chow group); the Euler
// characteristics at two twists are compared as a redundant cross-check.
bool kclass3_equal(const KClass3& x, const KClass3& y);

// Canonical printing, matching the expression grammar of the CLI.
std::string to_string(const Atom3& a);
std::string to_string(const KClass3& x);
std::string to_string(const Atom2& a);
std::string to_string(const KClass2& x);
std::string to_string(const ChernData3& d);
std::string to_string(const ChernData2& d);

}  // namespace quadrics
