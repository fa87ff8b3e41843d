#include "latsim/gf2.hpp"

namespace latsim {

Gf2Rref gf2_rref(Gf2Matrix a) {
    const int m = a.rows(), n = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i) {
            if (a.get(i, c)) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        a.swap_rows(r, piv);
        for (int i = 0; i < m; ++i) {
            if (i != r && a.get(i, c)) a.xor_rows(i, r);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots), r};
}

int gf2_rank(const Gf2Matrix& a) { return gf2_rref(a).rank; }

} // namespace latsim
