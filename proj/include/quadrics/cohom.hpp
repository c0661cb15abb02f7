#pragma once

#include "quadrics/kclass.hpp"

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace quadrics {

// Cohomology dimension bookkeeping. Tables record h^0..h^3 (threefold) or
// h^0..h^2 (surface); an absent entry means "not yet determined". The long
// exact sequence chaser fills entries that are forced by exactness and by
// explicitly declared zero connecting maps, and refuses to guess.

struct CohTable {
    int len{4};  // 4 on a threefold, 3 on a surface
    std::array<std::optional<Int>, 4> h{};

    static CohTable q3(std::optional<Int> h0, std::optional<Int> h1,
                       std::optional<Int> h2, std::optional<Int> h3) {
        return {4, {h0, h1, h2, h3}};
    }
    static CohTable q2(std::optional<Int> h0, std::optional<Int> h1,
                       std::optional<Int> h2) {
        return {3, {h0, h1, h2, std::nullopt}};
    }
    static CohTable zero(int len) {
        CohTable t;
        t.len = len;
        for (int q = 0; q < len; ++q)
            t.h[q] = Int(0);
        return t;
    }
    static CohTable unknown(int len) {
        CohTable t;
        t.len = len;
        return t;
    }

    bool complete() const {
        for (int q = 0; q < len; ++q)
            if (!h[q])
                return false;
        return true;
    }

    // Alternating sum; requires a complete table.
    Int chi() const {
        Int s = 0;
        for (int q = 0; q < len; ++q) {
            if (!h[q])
                throw std::logic_error("CohTable::chi on incomplete table");
            s += (q % 2 == 0 ? *h[q] : -*h[q]);
        }
        return s;
    }

    friend bool operator==(const CohTable&, const CohTable&) = default;
};

std::string to_string(const CohTable& t);

// Full cohomology table of O(t) on Q3: h^0 = chi(O(t)) for t >= 0, h^3 dual
// to h^0 of O(-3-t) by Serre duality, middle degrees always zero.
CohTable table_line_q3(int t);

// Full cohomology table of S(t): h^0 = chi(S(t)) for t >= 0 (h^0(S) = 4,
// h^0(S(1)) = 16), zero for t in {-1,-2,-3}, and h^3 = h^0(S(-4-t)) for
// t <= -4 (Serre duality composed with S^vee = S(-1)).
CohTable table_spinor_q3(int t);

// Kuenneth table of O(a,b) on the quadric surface.
CohTable table_line_q2(int a, int b);

// Graded dimensions of Ext^q(G, F) for the tilting bundle
// G = O + S + O(1) + O(2): row q holds
//   (h^q(F), h^q(S^vee x F), h^q(F(-1)), h^q(F(-2)))
// which are the dimensions of the four graded pieces of the End(G)-module
// Ext^q(G, F). Input: the four cohomology tables in that summand order; all
// sixteen entries must be known.
struct ExtGDims {
    std::array<std::array<Int, 4>, 4> m{};  // m[q][i]

    friend bool operator==(const ExtGDims&, const ExtGDims&) = default;
};

ExtGDims ext_g_dims(const CohTable& f, const CohTable& sf, const CohTable& fm1,
                    const CohTable& fm2);

struct les_inconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LesResult {
    CohTable sub, mid, quot;
};

// Dimension chase along the long exact cohomology sequence of
// 0 -> sub -> mid -> quot -> 0. zero_connecting lists the degrees q for
// which the connecting map H^q(quot) -> H^{q+1}(sub) is declared zero
// (beyond the zeros already forced by vanishing entries). Entries are filled
// exactly when exactness forces a unique value; contradictions (negative
// forced dimension, violated alternating sum) raise les_inconsistency naming
// the position. Known entries are never modified, and the operation is
// idempotent. A surface table in the quotient slot is treated as having
// h^3 = 0.
LesResult les_chase(const CohTable& sub, const CohTable& mid, const CohTable& quot,
                    const std::set<int>& zero_connecting);

}  // namespace quadrics
