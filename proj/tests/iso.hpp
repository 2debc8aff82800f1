// Test-only isomorphism search between small stratified complexes:
// backtracking over dimension- and thinness-respecting bijections of
// non-degenerate simplices that commute with every elementary face.
#ifndef STRATA_TESTS_ISO_HPP
#define STRATA_TESTS_ISO_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "strata/stratified.hpp"

namespace strata {

inline std::optional<std::vector<int>> find_isomorphism(const StratifiedComplex& X,
                                                        const StratifiedComplex& Y) {
    if (X.size() != Y.size()) return std::nullopt;
    for (int d = 0;; ++d) {
        auto xs = X.simplices_of_dim(d), ys = Y.simplices_of_dim(d);
        if (xs.size() != ys.size()) return std::nullopt;
        if (xs.empty() && d > std::max(X.dim_bound(), Y.dim_bound())) break;
    }
    std::vector<int> order;  // X ids, dimension by dimension
    for (int d = 0; d <= X.dim_bound(); ++d)
        for (int id : X.simplices_of_dim(d)) order.push_back(id);
    std::vector<int> image(static_cast<std::size_t>(X.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(Y.size()), 0);

    auto face_ok = [&](int x, int y) {
        int d = X.dim(x);
        for (int i = 0; i <= (d >= 1 ? d : -1); ++i) {
            const NormalSimplex& fx = X.at(x).faces[static_cast<std::size_t>(i)];
            const NormalSimplex& fy = Y.at(y).faces[static_cast<std::size_t>(i)];
            if (fx.degen != fy.degen) return false;
            if (image[static_cast<std::size_t>(fx.base)] != fy.base) return false;
        }
        return true;
    };

    std::size_t pos = 0;
    std::vector<int> cursor(order.size(), 0);
    while (true) {
        if (pos == order.size()) return image;
        int x = order[pos];
        bool advanced = false;
        for (int& y = cursor[pos]; y < Y.size(); ++y) {
            if (used[static_cast<std::size_t>(y)]) continue;
            if (Y.dim(y) != X.dim(x) || Y.thin(y) != X.thin(x)) continue;
            image[static_cast<std::size_t>(x)] = y;
            if (!face_ok(x, y)) {
                image[static_cast<std::size_t>(x)] = -1;
                continue;
            }
            used[static_cast<std::size_t>(y)] = 1;
            ++y;
            ++pos;
            advanced = true;
            break;
        }
        if (advanced) continue;
        cursor[pos] = 0;
        if (pos == 0) return std::nullopt;
        --pos;
        int px = order[pos];
        used[static_cast<std::size_t>(image[static_cast<std::size_t>(px)])] = 0;
        image[static_cast<std::size_t>(px)] = -1;
    }
}

} // namespace strata

#endif
