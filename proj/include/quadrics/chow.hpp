#pragma once

#include "quadrics/numeric.hpp"

#include <ostream>

namespace quadrics {

// Chow ring of the smooth quadric threefold, with the fixed additive basis
//
//   1 (degree 0), h (hyperplane class, degree 1), l (line class, degree 2),
//   pt (point class, degree 3)
//
// and multiplication h.h = 2l, h.l = pt, l.l = h.pt = 0, so h^3 = 2 pt and
// deg(h^3) = 2, deg(h.l) = 1. Classes are plain coefficient vectors; the
// coefficient type is a template parameter because Chern classes live in the
// integral ring while Chern characters and Todd classes need rationals.

template <class T>
struct Chow3 {
    T a0{}, a1{}, a2{}, a3{};  // coefficients of 1, h, l, pt

    friend bool operator==(const Chow3&, const Chow3&) = default;

    Chow3 operator+(const Chow3& o) const { return {a0 + o.a0, a1 + o.a1, a2 + o.a2, a3 + o.a3}; }
    Chow3 operator-(const Chow3& o) const { return {a0 - o.a0, a1 - o.a1, a2 - o.a2, a3 - o.a3}; }
    Chow3 operator*(const T& s) const { return {a0 * s, a1 * s, a2 * s, a3 * s}; }
};

template <class T>
Chow3<T> mul3(const Chow3<T>& x, const Chow3<T>& y) {
    Chow3<T> r;
    r.a0 = x.a0 * y.a0;
    r.a1 = x.a0 * y.a1 + x.a1 * y.a0;
    r.a2 = x.a0 * y.a2 + x.a2 * y.a0 + T(2) * x.a1 * y.a1;  // h.h = 2l
    r.a3 = x.a0 * y.a3 + x.a3 * y.a0 + x.a1 * y.a2 + x.a2 * y.a1;  // h.l = pt
    return r;
}

// Degree map: coefficient of pt. Only the top piece survives integration.
template <class T>
T deg3(const Chow3<T>& x) {
    return x.a3;
}

using ChowClass3 = Chow3<Int>;
using ChowClass3Q = Chow3<Rat>;

// Chow ring of the smooth quadric surface P1 x P1, basis
//
//   1, A, B (the two rulings), pt
//
// with A.B = pt and A.A = B.B = 0. A line bundle O(a,b) has first Chern
// class aA + bB; deg((1,0).(0,1)) = 1.

template <class T>
struct Chow2 {
    T b0{}, bA{}, bB{}, b2{};  // coefficients of 1, A, B, pt

    friend bool operator==(const Chow2&, const Chow2&) = default;

    Chow2 operator+(const Chow2& o) const { return {b0 + o.b0, bA + o.bA, bB + o.bB, b2 + o.b2}; }
    Chow2 operator-(const Chow2& o) const { return {b0 - o.b0, bA - o.bA, bB - o.bB, b2 - o.b2}; }
    Chow2 operator*(const T& s) const { return {b0 * s, bA * s, bB * s, b2 * s}; }
};

template <class T>
Chow2<T> mul2(const Chow2<T>& x, const Chow2<T>& y) {
    Chow2<T> r;
    r.b0 = x.b0 * y.b0;
    r.bA = x.b0 * y.bA + x.bA * y.b0;
    r.bB = x.b0 * y.bB + x.bB * y.b0;
    r.b2 = x.b0 * y.b2 + x.b2 * y.b0 + x.bA * y.bB + x.bB * y.bA;  // A.B = pt
    return r;
}

template <class T>
T deg2(const Chow2<T>& x) {
    return x.b2;
}

using ChowClass2 = Chow2<Int>;
using ChowClass2Q = Chow2<Rat>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Chow3<T>& x) {
    return os << x.a0 << " + " << x.a1 << "*h + " << x.a2 << "*l + " << x.a3 << "*pt";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Chow2<T>& x) {
    return os << x.b0 << " + " << x.bA << "*A + " << x.bB << "*B + " << x.b2 << "*pt";
}

}  // namespace quadrics
