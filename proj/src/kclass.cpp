#include "quadrics/kclass.hpp"

#include "quadrics/rr.hpp"

#include <sstream>
#include <stdexcept>

namespace quadrics {

namespace {

Int atom_rank(const Atom3& a) {
    switch (a.kind) {
        case AtomKind3::Line: return 1;
        case AtomKind3::Spinor: return 2;
        case AtomKind3::TP4:
        case AtomKind3::OmegaP4: return 4;
        default: return 0;  // torsion atoms
    }
}

// Total Chern class of a single atom, truncated at degree 3. The two
// restricted bundles from P4 never reach this function: they are expanded
// into line bundles first.
ChowClass3 atom_chern(const Atom3& a) {
    switch (a.kind) {
        case AtomKind3::Line:
            return {1, a.t, 0, 0};
        case AtomKind3::Spinor: {
            // c1(S(t)) = (1+2t) h, c2(S(t)) = (1+2t+2t^2) l, c3 = 0
            Int t = a.t;
            return {1, 1 + 2 * t, 1 + 2 * t + 2 * t * t, 0};
        }
        case AtomKind3::OH:
            return {1, 1, 2, 2};
        case AtomKind3::OL:
            return {1, 0, -1, -1};
        case AtomKind3::KP:
            return {1, 0, 0, 2};
        default:
            throw std::logic_error("atom_chern: unexpanded P4 atom");
    }
}

// Replace T4 and Om4 by their K-theory expansions in line bundles,
//   [T4]  = 5[O(-1)] - [O(-2)],   [Om4] = 5[O] - [O(1)],
// so that every later computation only sees line bundles, spinor twists and
// torsion atoms.
KClass3 expand_p4_atoms(const KClass3& x) {
    KClass3 r;
    for (const auto& [a, n] : x.c) {
        switch (a.kind) {
            case AtomKind3::TP4:
                r.add(line3(-1), 5 * n);
                r.add(line3(-2), -n);
                break;
            case AtomKind3::OmegaP4:
                r.add(line3(0), 5 * n);
                r.add(line3(1), -n);
                break;
            default:
                r.add(a, n);
        }
    }
    return r;
}

// Inverse of a total Chern class (constant term 1) in the truncated ring.
ChowClass3 chern_inverse(const ChowClass3& c) {
    if (c.a0 != 1)
        throw std::logic_error("chern_inverse: constant term is not 1");
    ChowClass3 n{0, c.a1, c.a2, c.a3};
    ChowClass3 n2 = mul3(n, n);
    ChowClass3 n3 = mul3(n2, n);
    // 1 - n + n^2 - n^3
    return ChowClass3{1, 0, 0, 0} - n + n2 - n3;
}

ChowClass3 chern_pow(ChowClass3 base, Int e) {
    if (e < 0) {
        base = chern_inverse(base);
        e = -e;
    }
    ChowClass3 acc{1, 0, 0, 0};
    while (e > 0) {
        if (e % 2 == 1)
            acc = mul3(acc, base);
        base = mul3(base, base);
        e /= 2;
    }
    return acc;
}

Int atom_rank2(const Atom2& a) {
    return a.kind == AtomKind2::Line ? 1 : 0;
}

ChowClass2 atom_chern2(const Atom2& a) {
    if (a.kind == AtomKind2::Line)
        return {1, a.a, a.b, 0};
    return {1, 0, 0, -1};  // skyscraper on a surface: ch = pt, so c2 = -pt
}

ChowClass2 chern2_inverse(const ChowClass2& c) {
    if (c.b0 != 1)
        throw std::logic_error("chern2_inverse: constant term is not 1");
    ChowClass2 n{0, c.bA, c.bB, c.b2};
    return ChowClass2{1, 0, 0, 0} - n + mul2(n, n);
}

ChowClass2 chern2_pow(ChowClass2 base, Int e) {
    if (e < 0) {
        base = chern2_inverse(base);
        e = -e;
    }
    ChowClass2 acc{1, 0, 0, 0};
    while (e > 0) {
        if (e % 2 == 1)
            acc = mul2(acc, base);
        base = mul2(base, base);
        e /= 2;
    }
    return acc;
}

}  // namespace

ChernData3 chern_of(const KClass3& x) {
    KClass3 y = expand_p4_atoms(x);
    Int rank = 0;
    ChowClass3 total{1, 0, 0, 0};
    for (const auto& [a, n] : y.c) {
        rank += n * atom_rank(a);
        total = mul3(total, chern_pow(atom_chern(a), n));
    }
    return {rank, total.a1, total.a2, total.a3};
}

ChernData3 twist(const ChernData3& d, int t) {
    const Int& r = d.rank;
    Int tt = t;
    ChernData3 e;
    e.rank = r;
    e.c1 = d.c1 + r * tt;
    // c1 h = 2 d.c1 in l-units, h^2 = 2 l
    e.c2 = d.c2 + (r - 1) * tt * 2 * d.c1 + binom(r, 2) * tt * tt * 2;
    // c2 h = d.c2, c1 h^2 = 2 d.c1, h^3 = 2 in pt-units
    e.c3 = d.c3 + (r - 2) * tt * d.c2 + binom(r - 1, 2) * tt * tt * 2 * d.c1 +
           binom(r, 3) * tt * tt * tt * 2;
    return e;
}

KClass3 twist(const KClass3& x, int t) {
    if (t == 0)
        return x;
    KClass3 r;
    for (const auto& [a, n] : x.c) {
        switch (a.kind) {
            case AtomKind3::Line:
                r.add(line3(a.t + t), n);
                break;
            case AtomKind3::Spinor:
                r.add(spinor3(a.t + t), n);
                break;
            case AtomKind3::TP4:
                r.add(line3(-1 + t), 5 * n);
                r.add(line3(-2 + t), -n);
                break;
            case AtomKind3::OmegaP4:
                r.add(line3(t), 5 * n);
                r.add(line3(1 + t), -n);
                break;
            case AtomKind3::KP:
                r.add(a, n);  // a skyscraper is twist invariant
                break;
            default:
                throw std::domain_error(
                    "twist undefined for torsion atom in this vocabulary");
        }
    }
    return r;
}

KClass3 dual(const KClass3& x) {
    KClass3 r;
    for (const auto& [a, n] : expand_p4_atoms(x).c) {
        switch (a.kind) {
            case AtomKind3::Line:
                r.add(line3(-a.t), n);
                break;
            case AtomKind3::Spinor:
                r.add(spinor3(-1 - a.t), n);  // S^vee = S(-1)
                break;
            default:
                throw std::domain_error(
                    "dual undefined for torsion atom in this vocabulary");
        }
    }
    return r;
}

ChernData3 dual(const ChernData3& d) {
    return {d.rank, -d.c1, d.c2, -d.c3};
}

ChernData3 tensor_spinor_dual(const ChernData3& d) {
    const Int& r = d.rank;
    const Int& c1 = d.c1;
    const Int& c2 = d.c2;
    const Int& c3 = d.c3;
    ChernData3 e;
    e.rank = 2 * r;
    e.c1 = 2 * c1 - r;
    // l-units: c1 h = 2 c1, c1^2 = 2 c1^2, h^2 = 2, c2(S) = 1
    e.c2 = 2 * c2 - (2 * r - 1) * 2 * c1 + 2 * c1 * c1 + 2 * binom(r, 2) + r;
    // pt-units: c2 h = c2, c1 h^2 = 2 c1, c1 c2(S) = c1, c1 c2 = c1 c2,
    // c1^2 h = 2 c1^2
    e.c3 = 2 * c3 - 2 * (r - 1) * c2 + (r - 1) * (r - 1) * 2 * c1 +
           2 * (r - 1) * c1 + 2 * c1 * c2 - (r - 1) * 2 * c1 * c1 -
           exact_div(r * (r * r - 1), 3);
    return e;
}

KClass3 tensor_spinor_dual_expand(const KClass3& x) {
    // S^vee (x) S in the K-basis {[O],[O(-1)],[O(-2)],[S(-1)]}.
    KClass3 ss;
    ss.add(line3(0), 1);
    ss.add(line3(-1), -6);
    ss.add(line3(-2), 1);
    ss.add(spinor3(-1), 4);

    KClass3 r;
    for (const auto& [a, n] : expand_p4_atoms(x).c) {
        switch (a.kind) {
            case AtomKind3::Line:
                r.add(spinor3(a.t - 1), n);  // S^vee(t) = S(t-1)
                break;
            case AtomKind3::Spinor:
                r += twist(ss, a.t) * n;
                break;
            default:
                throw std::domain_error(
                    "spinor tensor undefined for torsion atom in this vocabulary");
        }
    }
    return r;
}

KClass2 restrict_to_q2(const KClass3& x) {
    KClass2 r;
    for (const auto& [a, n] : expand_p4_atoms(x).c) {
        switch (a.kind) {
            case AtomKind3::Line:
                r.add(line2(a.t, a.t), n);
                break;
            case AtomKind3::Spinor:
                // S restricts to O(1,0) + O(0,1)
                r.add(line2(1 + a.t, a.t), n);
                r.add(line2(a.t, 1 + a.t), n);
                break;
            default:
                throw std::domain_error(
                    "restriction undefined for torsion atom in this vocabulary");
        }
    }
    return r;
}

ChowClass3Q ch3(const ChernData3& d) {
    // ch = r + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6, written in
    // the (1, h, l, pt) basis: c1^2 = 2 c1^2 l, c1^3 = 2 c1^3 pt,
    // c1 c2 = c1 c2 pt.
    Rat r(d.rank), c1(d.c1), c2(d.c2), c3(d.c3);
    ChowClass3Q v;
    v.a0 = r;
    v.a1 = c1;
    v.a2 = (2 * c1 * c1 - 2 * c2) / 2;
    v.a3 = (2 * c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3) / 6;
    return v;
}

ChowClass3Q ch3(const KClass3& x) {
    ChowClass3Q v;
    for (const auto& [a, n] : x.c) {
        KClass3 one;
        one.c.emplace(a, 1);
        ChowClass3Q va = ch3(chern_of(one));
        v = v + va * Rat(n);
    }
    return v;
}

ChernData3 chern_from_ch3(const ChowClass3Q& v) {
    ChernData3 d;
    d.rank = rat_to_int(v.a0);
    d.c1 = rat_to_int(v.a1);
    Rat c1(d.c1);
    d.c2 = rat_to_int(c1 * c1 - v.a2);  // from ch2 = (c1^2 - c2) in l-units
    // from ch3 = (2 c1^3 - 3 c1 c2 + 3 c3)/6 in pt-units
    Rat c2(d.c2);
    d.c3 = rat_to_int((6 * v.a3 - 2 * c1 * c1 * c1 + 3 * c1 * c2) / 3);
    return d;
}

ChernData2 chern_of(const KClass2& x) {
    Int rank = 0;
    ChowClass2 total{1, 0, 0, 0};
    for (const auto& [a, n] : x.c) {
        rank += n * atom_rank2(a);
        total = mul2(total, chern2_pow(atom_chern2(a), n));
    }
    return {rank, total.bA, total.bB, total.b2};
}

ChowClass2Q ch2(const KClass2& x) {
    ChowClass2Q v;
    for (const auto& [a, n] : x.c) {
        ChowClass2Q va;
        if (a.kind == AtomKind2::Line) {
            va = {1, a.a, a.b, Rat(a.a) * Rat(a.b)};  // e^{aA+bB}
        } else {
            va = {0, 0, 0, 1};  // ch(k(p)) = pt
        }
        v = v + va * Rat(n);
    }
    return v;
}

ChernData2 chern_from_ch2(const ChowClass2Q& v) {
    ChernData2 d;
    d.rank = rat_to_int(v.b0);
    d.c1a = rat_to_int(v.bA);
    d.c1b = rat_to_int(v.bB);
    // ch2 = (c1^2 - 2 c2)/2 with c1^2 = 2 c1a c1b in pt-units
    d.c2 = rat_to_int(Rat(d.c1a) * Rat(d.c1b) - v.b2);
    return d;
}

bool kclass2_equal(const KClass2& x, const KClass2& y) {
    bool chern_eq = chern_of(x) == chern_of(y);
    bool chi_eq = chi_q2(x) == chi_q2(y);
    if (chern_eq && !chi_eq)
        throw std::logic_error(
            "kclass2_equal: Chern data agree but Euler characteristics differ");
    return chern_eq && chi_eq;
}

bool kclass3_equal(const KClass3& x, const KClass3& y) {
    bool chern_eq = chern_of(x) == chern_of(y);
    bool chi_eq = chi_oracle(x, 0) == chi_oracle(y, 0) &&
                  chi_oracle(x, -1) == chi_oracle(y, -1);
    if (chern_eq && !chi_eq)
        throw std::logic_error(
            "kclass3_equal: Chern data agree but Euler characteristics differ");
    return chern_eq && chi_eq;
}

std::string to_string(const Atom3& a) {
    std::ostringstream os;
    switch (a.kind) {
        case AtomKind3::Line: os << "O(" << a.t << ")"; break;
        case AtomKind3::Spinor: os << "S(" << a.t << ")"; break;
        case AtomKind3::TP4: os << "T4"; break;
        case AtomKind3::OmegaP4: os << "Om4"; break;
        case AtomKind3::OH: os << "O_H"; break;
        case AtomKind3::OL: os << "O_L"; break;
        case AtomKind3::KP: os << "k(p)"; break;
    }
    return os.str();
}

std::string to_string(const Atom2& a) {
    if (a.kind == AtomKind2::KP)
        return "k(p)";
    std::ostringstream os;
    os << "O(" << a.a << "," << a.b << ")";
    return os.str();
}

namespace {

template <class K>
std::string format_class(const K& x) {
    if (x.c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, n] : x.c) {
        Int m = n;
        if (first) {
            if (m < 0) {
                os << "-";
                m = -m;
            }
        } else {
            os << (m < 0 ? " - " : " + ");
            if (m < 0)
                m = -m;
        }
        if (m != 1)
            os << m << "*";
        os << to_string(a);
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_string(const KClass3& x) { return format_class(x); }
std::string to_string(const KClass2& x) { return format_class(x); }

std::string to_string(const ChernData3& d) {
    std::ostringstream os;
    os << "rank " << d.rank << ", c1 = " << d.c1 << "*h, c2 = " << d.c2
       << "*l, c3 = " << d.c3;
    return os.str();
}

std::string to_string(const ChernData2& d) {
    std::ostringstream os;
    os << "rank " << d.rank << ", c1 = (" << d.c1a << "," << d.c1b
       << "), deg c2 = " << d.c2;
    return os.str();
}

}  // namespace quadrics
