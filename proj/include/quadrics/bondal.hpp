#pragma once

#include "quadrics/cohom.hpp"
#include "quadrics/kclass.hpp"

#include <map>
#include <utility>

namespace quadrics {

// Second page of the spectral sequence
//
//   E_2^{p,q} = Tor_{-p}^A(Ext^q(G, F), G)  ==>  F   (along p + q = 0)
//
// for the tilting bundle G = O + S + O(1) + O(2) with A = End(G). For the
// simple right A-modules the derived tensor product with G is a single sheaf
// in a single degree:
//
//   S_0 (x)^L G = O           at p = 0
//   S_1 (x)^L G = S(-1)[1]    at p = -1
//   S_2 (x)^L G = T4[2]       at p = -2
//   S_3 (x)^L G = O(-1)[3]    at p = -3
//
// so a graded piece of dimension m in Ext^q(G, F) contributes m copies of the
// corresponding sheaf at (p, q) = (-i, q). Differentials are never modeled;
// the artifact only certifies the K-theory identity carried by the abutment:
//
//   sum over (p,q) of (-1)^{p+q} [E_2^{p,q}] = [F].

struct E2Page {
    // (p, q) -> class; zero entries omitted. p in {-3..0}, q in {0..3}.
    std::map<std::pair<int, int>, KClass3> entries;

    friend bool operator==(const E2Page&, const E2Page&) = default;
};

// Build the page from graded Ext dimensions: entry (-i, q) is m[q][i] copies
// of the sheaf attached to S_i above.
E2Page e2_page(const ExtGDims& dims);

// Signed sum of the page entries in K-theory.
KClass3 e2_signed_sum(const E2Page& page);

// K-level abutment identity: the signed sum equals the target class, decided
// through the semantic equality on K(Q3) (Chern data and rank, with Euler
// characteristics at two twists as a redundant cross-check).
bool abutment_check(const E2Page& page, const KClass3& target);

}  // namespace quadrics
