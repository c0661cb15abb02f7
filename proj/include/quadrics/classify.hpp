#pragma once

#include "quadrics/bondal.hpp"
#include "quadrics/cohom.hpp"
#include "quadrics/kclass.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quadrics {

// Catalogs of the classified nef bundles with det = O(2) on the quadric
// threefold (nine cases) and with det = O(2,2) on the quadric surface
// (thirteen cases, some with subcases), each given by its K-class as a
// function of the rank r (and the extension parameter a where one exists).
// The golden numbers carried by each case are re-derived by the verifier
// from the class itself; the citation strings record why the expected value
// is what it is, in self-contained form.

enum class Theorem { Q3, Q2 };

struct CaseSpec {
    Theorem theorem{Theorem::Q3};
    std::string id;  // "1".."9" on Q3; "1".."13" and subcase ids like "6-2" on Q2
    Int r_min{1};
    bool has_a{false};  // extension parameter a in {0,1}; then min rank is r_min - a

    std::function<KClass3(const Int& r, int a)> class_q3;
    std::function<KClass2(const Int& r)> class_q2;

    // Golden invariants. On Q3: c2h = deg(c2.h) and c3; on Q2: c2h = deg c2,
    // c3 is unused and chi_offset records chi(E) - r.
    Int c2h{}, c3{}, chi_offset{};
    std::string citation;

    // Q3 only: graded Ext dimensions against G = O + S + O(1) + O(2),
    // recorded per case, and the Q2 cases the restriction lands in.
    std::function<ExtGDims(const Int& r, int a)> ext_dims;
    std::vector<std::string> restricts_to;

    // Q2 only: true when the classification shows no nef bundle on the
    // threefold restricts into this case.
    bool contradiction{false};

    std::string note;  // side conditions that are not machine checked, etc.

    Int min_rank(int a) const { return has_a ? r_min - Int(a) : r_min; }
};

const std::vector<CaseSpec>& catalog_q3();
const std::vector<CaseSpec>& catalog_q2();

// The correspondence "Q3 case -> Q2 cases its restriction matches", as
// certified by the verifier. Q2 cases absent from every image are exactly the
// contradiction cases.
const std::map<std::string, std::vector<std::string>>& restriction_map();

struct CheckRecord {
    std::string name;
    std::string computed;
    std::string expected;
    std::string citation;
    bool pass{false};
};

struct VerificationReport {
    std::string case_id;
    Int r;
    std::optional<int> a;
    std::vector<CheckRecord> checks;
    std::vector<std::string> notes;
    bool pass{false};
};

// Re-derives every numeric invariant of the case at rank r (and parameter a)
// and compares with the golden data: rank, c1, c2, c3, Euler characteristics
// at the probe twists, the spinor-twisted characteristic, the nef lower
// bounds for c3, the restriction to the quadric surface, and the K-level
// abutment identity of the case's E2 page.
VerificationReport verify_case(const CaseSpec& cs, const Int& r, int a = 0);

// Exact linear algebra behind the span argument for sections of the rank-2
// spinor quotient: the six pairwise wedges of four generic sections span the
// six-dimensional space of Pluecker quadrics, and still span a
// five-dimensional space after the identification X_{01} = X_{23} that cuts
// the threefold out of the four-dimensional quadric. Returns the two span
// dimensions (6, 5); 5 = h^0(O_{Q3}(1)).
std::pair<int, int> wedge_span_check();

}  // namespace quadrics
