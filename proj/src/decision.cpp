#include "curvebound/decision.hpp"

#include <stdexcept>

namespace curvebound {

const char* status_name(Status s) {
    switch (s) {
        case Status::CompactCertified: return "CompactCertified";
        case Status::NoncompactCertified: return "NoncompactCertified";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

Evidence analyze(const SparsePoly& p, const NewtonPolygon& np) {
    if (p.is_zero()) throw std::invalid_argument("decide: zero polynomial");
    Evidence ev;
    ev.divisible_by_x = p.divisible_by_x();
    ev.divisible_by_y = p.divisible_by_y();

    for (size_t i = 0; i < np.edges.size(); ++i) {
        const HullEdge& edge = np.edges[i];
        if (!edge.outer) continue;
        OuterEdgeReport rep;
        rep.edge_index = i;
        rep.slice = edge_polynomial(p, edge);
        rep.distinct_real_roots = sturm_count_all(rep.slice.poly);
        OddRootReport odd = odd_order_real_roots(rep.slice.poly);
        rep.odd_order_roots = odd.count;
        rep.odd_root_intervals = std::move(odd.intervals);
        ev.outer_edges.push_back(std::move(rep));
    }

    bool any_real = false, any_odd = false;
    for (const auto& rep : ev.outer_edges) {
        if (rep.distinct_real_roots > 0) any_real = true;
        if (rep.odd_order_roots > 0) any_odd = true;
    }
    bool divisible = ev.divisible_by_x || ev.divisible_by_y;
    ev.sufficient_holds = !divisible && !any_real;
    ev.necessary_holds = !divisible && !any_odd;

    if (ev.divisible_by_x)
        ev.violations.push_back({Violation::DivisibleByX, 0, {}});
    if (ev.divisible_by_y)
        ev.violations.push_back({Violation::DivisibleByY, 0, {}});
    for (size_t i = 0; i < ev.outer_edges.size(); ++i)
        if (ev.outer_edges[i].odd_order_roots > 0)
            ev.violations.push_back(
                {Violation::OddOrderEdgeRoot, i, ev.outer_edges[i].odd_root_intervals.front()});
    if (!ev.violations.empty()) ev.primary_violation = ev.violations.front();
    return ev;
}

}  // namespace

SufficiencyResult check_sufficient(const SparsePoly& p) {
    Evidence ev = analyze(p, newton_polygon(p));
    return {ev.sufficient_holds, std::move(ev.outer_edges)};
}

NecessityResult check_necessary(const SparsePoly& p) {
    Evidence ev = analyze(p, newton_polygon(p));
    return {ev.necessary_holds, ev.primary_violation};
}

Verdict decide_with_polygon(const SparsePoly& p, const NewtonPolygon& np) {
    Verdict v;
    v.evidence = analyze(p, np);
    if (v.evidence.sufficient_holds)
        v.status = Status::CompactCertified;
    else if (!v.evidence.necessary_holds)
        v.status = Status::NoncompactCertified;
    else
        v.status = Status::Unknown;
    return v;
}

Verdict decide(const SparsePoly& p) {
    return decide_with_polygon(p, newton_polygon(p));
}

}  // namespace curvebound
