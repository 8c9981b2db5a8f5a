#pragma once

#include <vector>

#include "curvebound/sparsepoly.hpp"
#include "curvebound/unipoly.hpp"

namespace curvebound {

struct LatticePoint {
    long long k = 0;
    long long l = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

// Primitive integer outward normal (a, b) of a hull edge; the linear form
// a*k + b*l attains its maximum over the support on that edge.
struct Normal {
    long long a = 0;
    long long b = 0;
    auto operator<=>(const Normal&) const = default;
    bool qualifies() const { return a > 0 || b > 0; }
};

struct HullEdge {
    LatticePoint start, end;
    long long steps = 0;                  // gcd of the coordinate deltas
    long long step_k = 0, step_l = 0;     // primitive direction, end = start + steps*step
    // One outward normal for polygon edges; both for a segment hull, with
    // the preferred one (positive a, then lexicographically larger) first.
    std::vector<Normal> normals;
    bool outer = false;                   // some outward normal has a > 0 or b > 0
    long long support_value = 0;          // max of a*k + b*l under normals[0]
};

enum class HullKind { Point, Segment, Polygon };

struct NewtonPolygon {
    HullKind kind = HullKind::Point;
    // Hull vertices only, counterclockwise, starting at the lexicographically
    // smallest; collinear interior points are excluded.
    std::vector<LatticePoint> vertices;
    std::vector<HullEdge> edges;          // empty for a point hull
};

std::vector<LatticePoint> support(const SparsePoly& p);

// Convex hull of a nonempty lattice point set, exact integer arithmetic.
NewtonPolygon convex_hull(const std::vector<LatticePoint>& points);

NewtonPolygon newton_polygon(const SparsePoly& p);

// Coefficient slice along an edge: coefficient i is the coefficient of
// x^(k0 + i*step_k) y^(l0 + i*step_l), zero when that lattice point is not
// in the support. Degree is exactly edge.steps; the constant and leading
// coefficients are nonzero because the endpoints are hull vertices.
struct EdgePolynomial {
    HullEdge edge;
    UniPoly poly;
};

EdgePolynomial edge_polynomial(const SparsePoly& p, const HullEdge& edge);

// Same edge traversed the other way; the slice polynomial reverses.
HullEdge reversed(const HullEdge& edge);

}  // namespace curvebound
