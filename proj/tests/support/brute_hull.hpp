#pragma once

// Brute-force extreme-point finder used to check the monotone-chain hull:
// a point is a hull vertex iff it is not contained in a segment or triangle
// spanned by other support points (exact integer arithmetic).

#include <algorithm>
#include <vector>

#include "curvebound/newton.hpp"

namespace testsupport {

using curvebound::LatticePoint;

namespace detail {

inline long long cross3(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.k - o.k) * (b.l - o.l) - (a.l - o.l) * (b.k - o.k);
}

inline bool on_segment(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r) {
    if (cross3(q, r, p) != 0) return false;
    return std::min(q.k, r.k) <= p.k && p.k <= std::max(q.k, r.k) && std::min(q.l, r.l) <= p.l &&
           p.l <= std::max(q.l, r.l);
}

inline bool in_triangle(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b,
                        const LatticePoint& c) {
    long long d = cross3(a, b, c);
    if (d == 0) return false;  // degenerate; segment checks cover this
    long long s1 = cross3(p, a, b), s2 = cross3(p, b, c), s3 = cross3(p, c, a);
    if (d < 0) {
        s1 = -s1;
        s2 = -s2;
        s3 = -s3;
    }
    return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

}  // namespace detail

inline std::vector<LatticePoint> brute_extreme_points(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<LatticePoint> extreme;
    for (size_t i = 0; i < pts.size(); ++i) {
        bool inside = false;
        for (size_t a = 0; a < pts.size() && !inside; ++a) {
            if (a == i) continue;
            for (size_t b = a + 1; b < pts.size() && !inside; ++b) {
                if (b == i) continue;
                if (detail::on_segment(pts[i], pts[a], pts[b])) inside = true;
                for (size_t c = b + 1; c < pts.size() && !inside; ++c) {
                    if (c == i) continue;
                    if (detail::in_triangle(pts[i], pts[a], pts[b], pts[c])) inside = true;
                }
            }
        }
        if (!inside) extreme.push_back(pts[i]);
    }
    return extreme;
}

}  // namespace testsupport
