#include "quadrics/bondal.hpp"

namespace quadrics {

namespace {

KClass3 sheaf_for_vertex(int i) {
    switch (i) {
        case 0: return single3(line3(0));
        case 1: return single3(spinor3(-1));
        case 2: return single3(tp4());
        case 3: return single3(line3(-1));
    }
    throw std::logic_error("sheaf_for_vertex: bad index");
}

}  // namespace

E2Page e2_page(const ExtGDims& dims) {
    E2Page page;
    for (int q = 0; q < 4; ++q) {
        for (int i = 0; i < 4; ++i) {
            const Int& m = dims.m[q][i];
            if (m < 0)
                throw std::domain_error("e2_page: negative graded dimension");
            if (m == 0)
                continue;
            page.entries[{-i, q}] = sheaf_for_vertex(i) * m;
        }
    }
    return page;
}

KClass3 e2_signed_sum(const E2Page& page) {
    KClass3 sum;
    for (const auto& [pq, cls] : page.entries) {
        int parity = ((pq.first + pq.second) % 2 + 2) % 2;
        if (parity == 0)
            sum += cls;
        else
            sum -= cls;
    }
    return sum;
}

bool abutment_check(const E2Page& page, const KClass3& target) {
    return kclass3_equal(e2_signed_sum(page), target);
}

}  // namespace quadrics
