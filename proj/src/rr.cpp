#include "quadrics/rr.hpp"

#include <stdexcept>

namespace quadrics {

Rat ChiPolynomial::eval(const Rat& t) const {
    Rat v = 0;
    for (int k = 3; k >= 0; --k)
        v = v * t + coef[k];
    return v;
}

Int ChiPolynomial::eval_int(int t) const {
    return rat_to_int(eval(Rat(t)));
}

ChiPolynomial chi_q3_poly(const ChernData3& d) {
    Rat r(d.rank), c1(d.c1), c2(d.c2), c3(d.c3);
    ChiPolynomial p;
    // (r/6)(2t+3)(t+2)(t+1) = (r/6)(2t^3 + 9t^2 + 13t + 6)
    p.coef[3] = r / 3;
    p.coef[2] = r * 3 / 2 + c1;
    p.coef[1] = r * 13 / 6 + c1 * c1 + 3 * c1 - c2;
    p.coef[0] = r + c1 * (2 * c1 * c1 + 9 * c1 + 13) / 6 + (c3 - (c1 + 3) * c2) / 2;
    return p;
}

Int chi_q3_closed(const ChernData3& d, int t) {
    return chi_q3_poly(d).eval_int(t);
}

ChiPolynomial chi_spinor_poly(const ChernData3& d) {
    Rat r(d.rank), c1(d.c1), c2(d.c2), c3(d.c3);
    ChiPolynomial p;
    // (2r/3) t(t+1)(t+2) = (2r/3)(t^3 + 3t^2 + 2t)
    p.coef[3] = r * 2 / 3;
    p.coef[2] = 2 * r + 2 * c1;
    p.coef[1] = r * 4 / 3 + 2 * c1 * (c1 + 2) - 2 * c2;
    p.coef[0] = c1 * (c1 + 1) * (c1 + 2) * 2 / 3 - (c1 + 2) * c2 + c3;
    return p;
}

Int chi_spinor_closed(const ChernData3& d, int t) {
    return chi_spinor_poly(d).eval_int(t);
}

namespace {

// Todd class from a total Chern class (1, c1, c2, c3) of the tangent bundle:
// td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2 / 24.
ChowClass3Q todd_from_chern(const ChowClass3Q& c) {
    ChowClass3Q c1{0, c.a1, 0, 0};
    ChowClass3Q c2{0, 0, c.a2, 0};
    ChowClass3Q c1sq = mul3(c1, c1);
    ChowClass3Q c1c2 = mul3(c1, c2);
    ChowClass3Q td{1, 0, 0, 0};
    td = td + c1 * Rat(1, 2);
    td = td + (c1sq + c2) * Rat(1, 12);
    td = td + c1c2 * Rat(1, 24);
    return td;
}

// e^{t h} in the (1, h, l, pt) basis: h^2 = 2l, h^3 = 2pt.
ChowClass3Q exp_th(int t) {
    Rat tt(t);
    return {1, tt, tt * tt, tt * tt * tt / 3};
}

const ChowClass3Q& todd_q3_cached() {
    // c(T_{Q3}) = 1 + 3h + 4h^2 + 2h^3 = (1, 3, 8, 4) in the fixed basis.
    static const ChowClass3Q td = todd_from_chern(ChowClass3Q{1, 3, 8, 4});
    return td;
}

ChowClass2Q todd_q2() {
    // c(T_{Q2}) = (1+2A)(1+2B) = 1 + 2A + 2B + 4 pt, giving
    // td = 1 + (A+B) + pt.
    ChowClass2Q c1{0, 2, 2, 0};
    ChowClass2Q td{1, 0, 0, 0};
    td = td + c1 * Rat(1, 2);
    td = td + (mul2(c1, c1) + ChowClass2Q{0, 0, 0, 4}) * Rat(1, 12);
    return td;
}

}  // namespace

ChowClass3Q todd_q3() {
    return todd_q3_cached();
}

Int chi_oracle(const KClass3& x, int t) {
    ChowClass3Q v = mul3(mul3(ch3(x), exp_th(t)), todd_q3_cached());
    return rat_to_int(deg3(v));
}

Int chi_oracle(const ChernData3& d, int t) {
    ChowClass3Q v = mul3(mul3(ch3(d), exp_th(t)), todd_q3_cached());
    return rat_to_int(deg3(v));
}

Int serre_dual_chi(const KClass3& x, int t) {
    Int via_dual = -chi_oracle(dual(x), -3 - t);
    Int direct = chi_oracle(x, t);
    if (via_dual != direct)
        throw std::logic_error("serre_dual_chi: duality identity violated for " +
                               to_string(x));
    return via_dual;
}

Int chi_q2(const KClass2& x) {
    Int s = 0;
    for (const auto& [a, n] : x.c) {
        if (a.kind == AtomKind2::Line)
            s += n * Int(a.a + 1) * Int(a.b + 1);
        else
            s += n;  // chi(k(p)) = 1
    }
    return s;
}

Int chi_q2_oracle(const KClass2& x) {
    static const ChowClass2Q td = todd_q2();
    return rat_to_int(deg2(mul2(ch2(x), td)));
}

Int nef_c3_bound_basic(const ChernData3& d) {
    // 2 c1 c2 - c1^3 through the degree map: c1 c2 = c1 c2, c1^3 = 2 c1^3.
    return 2 * d.c1 * d.c2 - 2 * d.c1 * d.c1 * d.c1;
}

Int nef_c3_bound_section(const ChernData3& d, int ell) {
    // extra term (c1^2 - c2) c1(L) with c1(L) = ell h:
    // deg((2 c1^2 - c2) l . ell h) = ell (2 c1^2 - c2).
    return nef_c3_bound_basic(d) + Int(ell) * (2 * d.c1 * d.c1 - d.c2);
}

}  // namespace quadrics
