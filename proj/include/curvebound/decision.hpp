#pragma once

#include <optional>
#include <vector>

#include "curvebound/newton.hpp"

namespace curvebound {

enum class Status { CompactCertified, NoncompactCertified, Unknown };

const char* status_name(Status s);

// Root analysis of one outer edge, in canonical edge order.
struct OuterEdgeReport {
    size_t edge_index = 0;      // index into the polygon's edge list
    EdgePolynomial slice;
    long distinct_real_roots = 0;
    long odd_order_roots = 0;
    std::vector<RootInterval> odd_root_intervals;
};

struct Violation {
    enum Kind { DivisibleByX, DivisibleByY, OddOrderEdgeRoot } kind;
    // For OddOrderEdgeRoot: which outer-edge report and which interval.
    size_t report_index = 0;
    RootInterval interval{};
};

// Everything the verdict rests on, in exact rationals.
struct Evidence {
    bool divisible_by_x = false;
    bool divisible_by_y = false;
    bool sufficient_holds = false;  // no divisibility, no outer edge has a real root
    bool necessary_holds = false;   // no divisibility, no outer edge has an odd-order root
    std::vector<OuterEdgeReport> outer_edges;
    std::vector<Violation> violations;        // all necessary-condition failures
    std::optional<Violation> primary_violation;  // first in canonical order
};

struct Verdict {
    Status status = Status::Unknown;
    Evidence evidence;
};

struct SufficiencyResult {
    bool holds = false;
    std::vector<OuterEdgeReport> per_edge;
};

struct NecessityResult {
    bool holds = false;
    std::optional<Violation> violation;
};

// The curve p = 0 is certified compact when p is divisible by neither
// variable and no outer edge polynomial has a real root.
SufficiencyResult check_sufficient(const SparsePoly& p);

// Compactness requires that p is divisible by neither variable and that no
// outer edge polynomial has a real root of odd order.
NecessityResult check_necessary(const SparsePoly& p);

// Three-valued combination: certified compact when the sufficient condition
// holds, certified noncompact when the necessary condition fails, Unknown
// otherwise. Evidence is always fully populated.
Verdict decide(const SparsePoly& p);

// Same, reusing an already computed polygon (the geometry is shared with
// report generation).
Verdict decide_with_polygon(const SparsePoly& p, const NewtonPolygon& np);

}  // namespace curvebound
