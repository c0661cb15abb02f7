#include "quadrics/cohom.hpp"

#include "quadrics/rr.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace quadrics {

std::string to_string(const CohTable& t) {
    std::ostringstream os;
    os << "(";
    for (int q = 0; q < t.len; ++q) {
        if (q)
            os << ", ";
        if (t.h[q])
            os << *t.h[q];
        else
            os << "?";
    }
    os << ")";
    return os.str();
}

CohTable table_line_q3(int t) {
    CohTable tab = CohTable::zero(4);
    if (t >= 0) {
        tab.h[0] = chi_q3_closed(chern_of(single3(line3(t))), 0);
    } else if (t <= -3) {
        // Serre duality with omega = O(-3): h^3(O(t)) = h^0(O(-3-t)).
        tab.h[3] = chi_q3_closed(chern_of(single3(line3(-3 - t))), 0);
    }
    // for -3 < t < 0 everything vanishes
    return tab;
}

CohTable table_spinor_q3(int t) {
    CohTable tab = CohTable::zero(4);
    if (t >= 0) {
        tab.h[0] = chi_q3_closed(chern_of(single3(spinor3(t))), 0);
    } else if (t <= -4) {
        // h^3(S(t)) = h^0(S(t)^vee (-3)) = h^0(S(-4-t)) since S^vee = S(-1).
        tab.h[3] = chi_q3_closed(chern_of(single3(spinor3(-4 - t))), 0);
    }
    // S(-1), S(-2), S(-3) have no cohomology at all
    return tab;
}

namespace {

Int p1_h0(int k) { return k >= 0 ? Int(k + 1) : Int(0); }
Int p1_h1(int k) { return k <= -2 ? Int(-k - 1) : Int(0); }

}  // namespace

CohTable table_line_q2(int a, int b) {
    // Kuenneth for O(a,b) on P1 x P1.
    CohTable tab = CohTable::zero(3);
    tab.h[0] = p1_h0(a) * p1_h0(b);
    tab.h[1] = p1_h0(a) * p1_h1(b) + p1_h1(a) * p1_h0(b);
    tab.h[2] = p1_h1(a) * p1_h1(b);
    return tab;
}

ExtGDims ext_g_dims(const CohTable& f, const CohTable& sf, const CohTable& fm1,
                    const CohTable& fm2) {
    const std::array<const CohTable*, 4> cols{&f, &sf, &fm1, &fm2};
    static const char* names[4] = {"F", "S^vee x F", "F(-1)", "F(-2)"};
    ExtGDims dims;
    for (int i = 0; i < 4; ++i) {
        if (cols[i]->len != 4)
            throw std::domain_error("ext_g_dims: threefold table expected for " +
                                    std::string(names[i]));
        for (int q = 0; q < 4; ++q) {
            const auto& e = cols[i]->h[q];
            if (!e) {
                std::ostringstream os;
                os << "ext_g_dims: h^" << q << "(" << names[i] << ") unknown";
                throw std::domain_error(os.str());
            }
            if (*e < 0)
                throw std::domain_error("ext_g_dims: negative dimension");
            dims.m[q][i] = *e;
        }
    }
    return dims;
}

namespace {

// The chase works on the twelve slots of the long exact sequence
//   0 -> H^0(sub) -> H^0(mid) -> H^0(quot) -> H^1(sub) -> ... -> H^3(quot) -> 0
// split into exact segments at every map known to vanish. A map is known to
// vanish if it was declared zero (a connecting map), or if its source or
// target is a known zero slot. Within a segment bounded by vanishing maps on
// both sides the alternating dimension sum is zero, which pins down a single
// unknown; iterating to a fixed point propagates everything that is forced.

std::string slot_name(int s) {
    static const char* part[3] = {"sub", "mid", "quot"};
    std::ostringstream os;
    os << "H^" << s / 3 << "(" << part[s % 3] << ")";
    return os.str();
}

}  // namespace

LesResult les_chase(const CohTable& sub, const CohTable& mid, const CohTable& quot,
                    const std::set<int>& zero_connecting) {
    for (int q : zero_connecting)
        if (q < 0 || q > 2)
            throw std::domain_error("les_chase: connecting map index out of range");

    std::array<std::optional<Int>, 12> d;
    const std::array<const CohTable*, 3> tabs{&sub, &mid, &quot};
    for (int s = 0; s < 12; ++s) {
        const CohTable& t = *tabs[s % 3];
        int q = s / 3;
        d[s] = (q >= t.len) ? std::optional<Int>(Int(0)) : t.h[q];
        if (d[s] && *d[s] < 0)
            throw les_inconsistency("les_chase: negative input at " + slot_name(s));
    }

    // zero_map[i] == true: the map from slot i-1 to slot i is known to vanish.
    // Indices 0 and 12 are the sequence ends.
    std::array<bool, 13> zero_map{};
    zero_map[0] = zero_map[12] = true;
    for (int q : zero_connecting)
        zero_map[3 * q + 3] = true;  // H^q(quot) -> H^{q+1}(sub)

    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < 12; ++s) {
            if (d[s] && *d[s] == 0) {
                if (!zero_map[s]) {
                    zero_map[s] = true;
                    changed = true;
                }
                if (!zero_map[s + 1]) {
                    zero_map[s + 1] = true;
                    changed = true;
                }
            }
        }
        int lo = 0;
        while (lo < 12) {
            if (!zero_map[lo]) {
                ++lo;
                continue;
            }
            int hi = lo;
            while (hi < 12 && !zero_map[hi + 1])
                ++hi;
            // exact segment: slots lo..hi with vanishing maps on both sides
            int unknowns = 0, where = -1, sign_at = 1;
            Int sum = 0;
            int sign = 1;
            for (int s = lo; s <= hi; ++s) {
                if (d[s]) {
                    sum += sign * *d[s];
                } else {
                    ++unknowns;
                    where = s;
                    sign_at = sign;
                }
                sign = -sign;
            }
            if (unknowns == 0 && sum != 0)
                throw les_inconsistency(
                    "les_chase: alternating sum violated on segment ending at " +
                    slot_name(hi));
            if (unknowns == 1) {
                Int v = sign_at == 1 ? -sum : sum;
                if (v < 0)
                    throw les_inconsistency(
                        "les_chase: negative forced dimension at " + slot_name(where));
                d[where] = v;
                changed = true;
            }
            lo = hi + 1;
        }
    }

    // Rank walk over the known prefix (and suffix) of each segment: the rank
    // of the map leaving slot s is d[s] minus the incoming rank, and every
    // rank must be nonnegative.
    int lo = 0;
    while (lo < 12) {
        if (!zero_map[lo]) {
            ++lo;
            continue;
        }
        int hi = lo;
        while (hi < 12 && !zero_map[hi + 1])
            ++hi;
        Int r = 0;
        for (int s = lo; s <= hi && d[s]; ++s) {
            r = *d[s] - r;
            if (r < 0)
                throw les_inconsistency("les_chase: negative rank forced after " +
                                        slot_name(s));
        }
        r = 0;
        for (int s = hi; s >= lo && d[s]; --s) {
            r = *d[s] - r;
            if (r < 0)
                throw les_inconsistency("les_chase: negative rank forced before " +
                                        slot_name(s));
        }
        lo = hi + 1;
    }

    LesResult out{sub, mid, quot};
    std::array<CohTable*, 3> outs{&out.sub, &out.mid, &out.quot};
    for (int s = 0; s < 12; ++s) {
        CohTable& t = *outs[s % 3];
        int q = s / 3;
        if (q < t.len)
            t.h[q] = d[s];
    }
    return out;
}

}  // namespace quadrics
