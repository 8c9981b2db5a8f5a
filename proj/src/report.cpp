#include "curvebound/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace curvebound {

using nlohmann::json;

int exit_code_for(Status status) {
    switch (status) {
        case Status::CompactCertified: return 0;
        case Status::NoncompactCertified: return 1;
        case Status::Unknown: return 2;
    }
    return 2;
}

AnalysisResult analyze_polynomial(const SparsePoly& p, const RunOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    AnalysisResult res;
    res.poly = p;
    res.polygon = newton_polygon(p);
    res.verdict = decide_with_polygon(p, res.polygon);
    if (opts.want_witness && res.verdict.status == Status::NoncompactCertified) {
        try {
            res.witness = witnesses_for_verdict(p, res.verdict, opts.scales, opts.width);
        } catch (const NoSignChangeAtAllScales& e) {
            res.witness_note = e.what();
        }
    } else if (opts.want_witness) {
        res.witness_note = "witnesses are only generated for NoncompactCertified verdicts";
    }
    if (opts.want_oracle)
        res.oracle = unboundedness_evidence(p, opts.radii, opts.samples);
    auto t1 = std::chrono::steady_clock::now();
    res.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return res;
}

namespace {

const char* hull_kind_name(HullKind k) {
    switch (k) {
        case HullKind::Point: return "point";
        case HullKind::Segment: return "segment";
        case HullKind::Polygon: return "polygon";
    }
    return "?";
}

json interval_json(const RootInterval& iv) {
    return json::array({rat_to_string(iv.lo), rat_to_string(iv.hi)});
}

json edge_json(const HullEdge& e) {
    json normals = json::array();
    for (const Normal& n : e.normals) normals.push_back(json::array({n.a, n.b}));
    return json{{"start", json::array({e.start.k, e.start.l})},
                {"end", json::array({e.end.k, e.end.l})},
                {"d", e.steps},
                {"p", e.step_k},
                {"q", e.step_l},
                {"normals", normals},
                {"outer", e.outer},
                {"support_value", e.support_value}};
}

json violation_json(const Violation& v, const Evidence& ev) {
    switch (v.kind) {
        case Violation::DivisibleByX:
            return json{{"kind", "divisibility"}, {"axis", "x"}};
        case Violation::DivisibleByY:
            return json{{"kind", "divisibility"}, {"axis", "y"}};
        case Violation::OddOrderEdgeRoot:
            return json{{"kind", "odd_order_edge_root"},
                        {"edge", ev.outer_edges[v.report_index].edge_index},
                        {"interval", interval_json(v.interval)}};
    }
    return json();
}

json witness_json(const WitnessReport& w) {
    json points = json::array();
    for (const WitnessPoint& pt : w.points) {
        points.push_back(json{{"scale", pt.scale},
                              {"t_interval", json::array({rat_to_string(pt.t_lo), rat_to_string(pt.t_hi)})},
                              {"point", json::array({rat_to_string(pt.x), rat_to_string(pt.y)})},
                              {"residual", rat_to_string(pt.residual)}});
    }
    json out{{"points", points}, {"skipped_scales", w.skipped_scales}};
    switch (w.kind) {
        case WitnessReport::AxisX:
            out["kind"] = "axis_x";
            break;
        case WitnessReport::AxisY:
            out["kind"] = "axis_y";
            break;
        case WitnessReport::EdgePath: {
            out["kind"] = "edge_path";
            out["path"] = json{
                {"t_pow_x", w.path.t_pow_x},
                {"t_pow_y", w.path.t_pow_y},
                {"normal", json::array({w.path.normal.a, w.path.normal.b})},
                {"bracket", json::array({rat_to_string(w.path.t_minus), rat_to_string(w.path.t_plus)})},
                {"support_value", w.path.support_value}};
            break;
        }
    }
    return out;
}

json oracle_json(const UnboundednessReport& o) {
    json probes = json::array();
    for (const RadiusFinding& f : o.findings) {
        probes.push_back(json{{"radius", rat_to_string(f.probe.radius)},
                              {"samples", f.probe.samples},
                              {"sign_changes", f.probe.sign_changes.size()},
                              {"contacts", f.probe.contacts.size()},
                              {"all_zero", f.probe.all_zero}});
    }
    return json{{"probes", probes}, {"evidence_of_unboundedness", o.evidence_of_unboundedness}};
}

}  // namespace

std::string render_json(const AnalysisResult& r, const std::string& input_echo) {
    const Evidence& ev = r.verdict.evidence;
    json vertices = json::array();
    for (const LatticePoint& v : r.polygon.vertices) vertices.push_back(json::array({v.k, v.l}));
    json edges = json::array();
    for (const HullEdge& e : r.polygon.edges) edges.push_back(edge_json(e));

    json outer = json::array();
    for (const OuterEdgeReport& rep : ev.outer_edges) {
        json coeffs = json::array();
        for (int i = 0; i <= rep.slice.poly.degree(); ++i)
            coeffs.push_back(rat_to_string(rep.slice.poly[static_cast<size_t>(i)]));
        json intervals = json::array();
        for (const RootInterval& iv : rep.odd_root_intervals) intervals.push_back(interval_json(iv));
        outer.push_back(json{{"edge", rep.edge_index},
                             {"coefficients", coeffs},
                             {"distinct_real_roots", rep.distinct_real_roots},
                             {"odd_order_real_roots", rep.odd_order_roots},
                             {"isolating_intervals", intervals}});
    }

    json violations = json::array();
    for (const Violation& v : ev.violations) violations.push_back(violation_json(v, ev));

    json doc{
        {"input",
         {{"expression", input_echo},
          {"canonical", r.poly.to_string()},
          {"support_size", r.poly.term_count()},
          {"total_degree", r.poly.total_degree()}}},
        {"newton_polygon", {{"kind", hull_kind_name(r.polygon.kind)}, {"vertices", vertices}}},
        {"edges", edges},
        {"outer_edge_analysis", outer},
        {"verdict", status_name(r.verdict.status)},
        {"evidence",
         {{"divisible_by_x", ev.divisible_by_x},
          {"divisible_by_y", ev.divisible_by_y},
          {"sufficient_holds", ev.sufficient_holds},
          {"necessary_holds", ev.necessary_holds},
          {"violations", violations},
          {"primary_violation",
           ev.primary_violation ? violation_json(*ev.primary_violation, ev) : json()}}},
        {"timing_ms", r.elapsed_ms},
    };
    doc["witness"] = r.witness ? witness_json(*r.witness) : json();
    if (r.witness_note) doc["witness_note"] = *r.witness_note;
    doc["oracle"] = r.oracle ? oracle_json(*r.oracle) : json();
    return doc.dump(2);
}

std::string render_text(const AnalysisResult& r, const std::string& input_echo) {
    const Evidence& ev = r.verdict.evidence;
    std::ostringstream os;
    os << "input:     " << input_echo << "\n";
    os << "canonical: " << r.poly.to_string() << "\n";
    os << "support:   " << r.poly.term_count() << " terms, total degree " << r.poly.total_degree()
       << "\n";
    os << "hull:      " << hull_kind_name(r.polygon.kind);
    for (const LatticePoint& v : r.polygon.vertices) os << " (" << v.k << "," << v.l << ")";
    os << "\n";
    for (const HullEdge& e : r.polygon.edges) {
        os << "edge:      (" << e.start.k << "," << e.start.l << ")->(" << e.end.k << "," << e.end.l
           << ")  d=" << e.steps << " step=(" << e.step_k << "," << e.step_l << ")"
           << " normal=(" << e.normals[0].a << "," << e.normals[0].b << ")"
           << (e.outer ? " outer" : "") << "\n";
    }
    os << "divisible: x " << (ev.divisible_by_x ? "yes" : "no") << ", y "
       << (ev.divisible_by_y ? "yes" : "no") << "\n";
    for (const OuterEdgeReport& rep : ev.outer_edges) {
        os << "outer edge " << rep.edge_index << ": e(t) = " << rep.slice.poly.to_string()
           << "; distinct real roots " << rep.distinct_real_roots << ", odd-order "
           << rep.odd_order_roots << "\n";
    }
    if (r.witness) {
        const WitnessReport& w = *r.witness;
        os << "witness:   "
           << (w.kind == WitnessReport::AxisX   ? "x = 0 axis"
               : w.kind == WitnessReport::AxisY ? "y = 0 axis"
                                                : "edge path")
           << "\n";
        for (const WitnessPoint& pt : w.points) {
            os << "  n=" << pt.scale << "  point (" << rat_to_string(pt.x) << ", "
               << rat_to_string(pt.y) << ")  residual " << rat_to_string(pt.residual) << "\n";
        }
        for (unsigned long n : w.skipped_scales)
            os << "  n=" << n << "  skipped (no sign change yet)\n";
    }
    if (r.witness_note) os << "witness:   " << *r.witness_note << "\n";
    if (r.oracle) {
        for (const RadiusFinding& f : r.oracle->findings) {
            os << "oracle:    radius " << rat_to_string(f.probe.radius) << ": "
               << f.probe.sign_changes.size() << " sign change(s), " << f.probe.contacts.size()
               << " contact(s)" << (f.probe.all_zero ? ", all samples on the curve" : "") << "\n";
        }
        os << "oracle:    " << (r.oracle->evidence_of_unboundedness
                                    ? "evidence of unboundedness at the largest radius"
                                    : "no evidence of unboundedness")
           << "\n";
    }
    os << "verdict:   " << status_name(r.verdict.status) << "  (" << r.elapsed_ms << " ms)\n";
    return os.str();
}

}  // namespace curvebound
