#include "curvebound/newton.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace curvebound {

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.k - o.k) * (b.l - o.l) - (a.l - o.l) * (b.k - o.k);
}

Normal preferred_of(const Normal& n1, const Normal& n2) {
    // Positive a wins; otherwise take the qualifying one; a full tie falls
    // back to lexicographic order.
    auto key = [](const Normal& n) { return std::make_tuple(n.a > 0, n.qualifies(), n.a, n.b); };
    return key(n1) >= key(n2) ? n1 : n2;
}

HullEdge make_edge(const LatticePoint& a, const LatticePoint& b, bool segment_hull) {
    HullEdge e;
    e.start = a;
    e.end = b;
    long long dk = b.k - a.k, dl = b.l - a.l;
    e.steps = std::gcd(std::abs(dk), std::abs(dl));
    assert(e.steps > 0);
    e.step_k = dk / e.steps;
    e.step_l = dl / e.steps;
    Normal right{e.step_l, -e.step_k};  // clockwise rotation of the direction
    if (segment_hull) {
        Normal left{-e.step_l, e.step_k};
        Normal first = preferred_of(right, left);
        Normal second = first == right ? left : right;
        e.normals = {first, second};
    } else {
        e.normals = {right};
    }
    e.outer = std::any_of(e.normals.begin(), e.normals.end(),
                          [](const Normal& n) { return n.qualifies(); });
    e.support_value = e.normals[0].a * a.k + e.normals[0].b * a.l;
    return e;
}

}  // namespace

std::vector<LatticePoint> support(const SparsePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("support: zero polynomial");
    std::vector<LatticePoint> pts;
    pts.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) pts.push_back({e.k, e.l});
    return pts;
}

NewtonPolygon convex_hull(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    std::vector<LatticePoint> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    NewtonPolygon np;
    if (pts.size() == 1) {
        np.kind = HullKind::Point;
        np.vertices = pts;
        return np;
    }

    // Monotone chain; strict turns only, so collinear interior points drop out.
    std::vector<LatticePoint> lower, upper;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }

    std::vector<LatticePoint> verts(lower.begin(), lower.end() - 1);
    verts.insert(verts.end(), upper.begin(), upper.end() - 1);

    if (verts.size() == 2) {
        np.kind = HullKind::Segment;
        std::sort(verts.begin(), verts.end());
        np.vertices = verts;
        np.edges.push_back(make_edge(verts[0], verts[1], /*segment_hull=*/true));
        return np;
    }

    np.kind = HullKind::Polygon;
    auto min_it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), min_it, verts.end());
    np.vertices = verts;
    for (size_t i = 0; i < verts.size(); ++i)
        np.edges.push_back(make_edge(verts[i], verts[(i + 1) % verts.size()], false));
    return np;
}

NewtonPolygon newton_polygon(const SparsePoly& p) {
    return convex_hull(support(p));
}

EdgePolynomial edge_polynomial(const SparsePoly& p, const HullEdge& edge) {
    std::vector<Rat> coeffs(static_cast<size_t>(edge.steps) + 1, Rat(0));
    const auto& terms = p.terms();
    for (long long i = 0; i <= edge.steps; ++i) {
        Exponent e{edge.start.k + i * edge.step_k, edge.start.l + i * edge.step_l};
        auto it = terms.find(e);
        if (it != terms.end()) coeffs[static_cast<size_t>(i)] = it->second;
    }
    if (coeffs.front() == 0 || coeffs.back() == 0)
        throw std::invalid_argument("edge_polynomial: edge endpoints are not in the support");
    EdgePolynomial ep{edge, UniPoly(std::move(coeffs))};
    assert(ep.poly.degree() == edge.steps);
    return ep;
}

HullEdge reversed(const HullEdge& edge) {
    HullEdge r = edge;
    std::swap(r.start, r.end);
    r.step_k = -edge.step_k;
    r.step_l = -edge.step_l;
    return r;
}

}  // namespace curvebound
