#pragma once

// Cross-check helper: straddle every isolated root with non-root grid points
// and count the sign flips of f across the grid. The result equals the number
// of odd-multiplicity real roots, counted without any of the library's root
// machinery beyond the isolating intervals under test.

#include <utility>
#include <vector>

#include "oracle.hpp"
#include "pinchuk/uniroots.hpp"

namespace rootcheck {

inline int grid_count(const pinchuk::UniPoly& f,
                      const std::vector<std::pair<pinchuk::AlgNum, unsigned>>& roots) {
    using pinchuk::Rat;
    Rat big = pinchuk::cauchy_bound(f) + 1;
    std::vector<Rat> grid{-big};
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const pinchuk::RatInterval& iv = roots[i].first.iv;
        if (iv.is_point()) {
            Rat gap(1);
            if (i > 0) gap = std::min(gap, Rat(iv.lo - roots[i - 1].first.iv.hi));
            if (i + 1 < roots.size())
                gap = std::min(gap, Rat(roots[i + 1].first.iv.lo - iv.lo));
            grid.push_back(iv.lo - gap / 3);
            grid.push_back(iv.lo + gap / 3);
        } else {
            grid.push_back(iv.lo);
            grid.push_back(iv.hi);
        }
    }
    grid.push_back(big);
    std::vector<oracle::Q> coeffs, pts;
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(f.coeff(static_cast<std::size_t>(i)));
    for (const Rat& g : grid) pts.push_back(g);
    return oracle::grid_sign_changes(coeffs, pts);
}

} // namespace rootcheck
