#pragma once

#include "quadrics/kclass.hpp"

#include <array>

namespace quadrics {

// Riemann-Roch on the quadric threefold and the quadric surface, computed two
// independent ways:
//
//   * closed forms: the Euler characteristic as an explicit polynomial in the
//     twist t with coefficients in (rank, c1, c2 h, c3);
//   * oracle: integration of ch(x) . e^{t h} . td against the degree map,
//     with the Todd class derived from the total Chern class of the tangent
//     bundle, c(T_{Q3}) = 1 + 3h + 4h^2 + 2h^3.
//
// The two routes are kept deliberately separate so that they can check each
// other; on any disagreement the oracle is authoritative.

// Exact polynomial in one variable t, degree at most 3. Evaluation at an
// integer must produce an integer (checked), since these polynomials are
// Euler characteristics.
struct ChiPolynomial {
    std::array<Rat, 4> coef{};  // coef[k] multiplies t^k

    Rat eval(const Rat& t) const;
    Int eval_int(int t) const;

    friend bool operator==(const ChiPolynomial&, const ChiPolynomial&) = default;
};

// chi(E(t)) for a class on Q3 with c1 = d h, written with its degree as a
// parameter:
//   chi(E(t)) = (r/6)(2t+3)(t+2)(t+1) + d t^2 + (d^2+3d) t - (c2 h) t
//               + (d/6)(2d^2+9d+13) + (c3 - (d+3) c2 h)/2
ChiPolynomial chi_q3_poly(const ChernData3& d);
Int chi_q3_closed(const ChernData3& d, int t);

// chi(S^vee (x) E(t)):
//   (2/3) r t(t+1)(t+2) + 2d t^2 + 2d(d+2) t + (2/3) d(d+1)(d+2)
//   - (2t+d+2) c2 h + c3
ChiPolynomial chi_spinor_poly(const ChernData3& d);
Int chi_spinor_closed(const ChernData3& d, int t);

// Todd class of Q3 computed from c(T): td = 1 + c1/2 + (c1^2+c2)/12 + c1 c2/24.
ChowClass3Q todd_q3();

// Hirzebruch-Riemann-Roch oracle: chi(x(t)) = deg( ch(x) . e^{t h} . td ).
Int chi_oracle(const KClass3& x, int t);
Int chi_oracle(const ChernData3& d, int t);

// Serre duality with omega_{Q3} = O(-3): returns -chi(dual(x), -3-t) and
// asserts that it agrees with the oracle value of chi(x(t)).
Int serre_dual_chi(const KClass3& x, int t);

// Euler characteristics on the surface: additive over atoms with
// chi(O(a,b)) = (a+1)(b+1) and chi(k(p)) = 1, plus the ch.td route as an
// independent oracle (td_{Q2} = 1 + A + B + pt).
Int chi_q2(const KClass2& x);
Int chi_q2_oracle(const KClass2& x);

// Lower bounds for c3 of a nef bundle with the given Chern data:
//   basic:    c3 >= 2 c1 c2 - c1^3
//   section:  c3 >= 2 c1 c2 - c1^3 + (c1^2 - c2) c1(L)   for a section
//             vanishing in L = O(ell)
// (products of Chern classes are read through the degree map).
Int nef_c3_bound_basic(const ChernData3& d);
Int nef_c3_bound_section(const ChernData3& d, int ell);

}  // namespace quadrics
