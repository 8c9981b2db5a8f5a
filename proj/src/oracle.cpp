#include "curvebound/oracle.hpp"

#include <cassert>
#include <stdexcept>

namespace curvebound {

namespace {

std::pair<Rat, Rat> half_angle_point(const Rat& radius, const Rat& u) {
    Rat u2 = u * u;
    Rat den = u2 + 1;
    Rat x = radius * (1 - u2) / den;
    Rat y = radius * 2 * u / den;
    return {x, y};
}

Rat chart_u(int index, int half) {
    // u_j = -1 + 2j/half for j in [0, half)
    Rat u(2 * index - half, half);
    u.canonicalize();
    return u;
}

void finish_probe(CircleProbe& probe) {
    int n = probe.samples;
    probe.all_zero = true;
    for (int i = 0; i < n; ++i) {
        if (probe.signs[i] != 0)
            probe.all_zero = false;
        else
            probe.contacts.push_back(i);
    }
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        if (probe.signs[i] != 0 && probe.signs[j] == -probe.signs[i])
            probe.sign_changes.emplace_back(i, j);
    }
}

int effective_samples(int samples) {
    if (samples < 8) throw std::invalid_argument("probe_circle: need at least 8 samples");
    return samples % 2 == 0 ? samples : samples + 1;
}

}  // namespace

std::pair<Rat, Rat> circle_sample_point(const Rat& radius, int index, int samples) {
    int half = samples / 2;
    if (index < half) return half_angle_point(radius, chart_u(index, half));
    auto [x, y] = half_angle_point(radius, chart_u(index - half, half));
    return {-x, -y};
}

CircleProbe probe_circle(const SparsePoly& p, const Rat& radius, int samples) {
    if (!(radius > 0)) throw std::invalid_argument("probe_circle: radius must be positive");
    CircleProbe probe;
    probe.radius = radius;
    probe.samples = effective_samples(samples);
    probe.signs.assign(probe.samples, 0);
    int n = probe.samples;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        auto [x, y] = circle_sample_point(radius, i, n);
        probe.signs[i] = sign_of(p.evaluate(x, y));
    }
    finish_probe(probe);
    return probe;
}

CircleProbe probe_circle_serial(const SparsePoly& p, const Rat& radius, int samples) {
    if (!(radius > 0)) throw std::invalid_argument("probe_circle: radius must be positive");
    CircleProbe probe;
    probe.radius = radius;
    probe.samples = effective_samples(samples);
    probe.signs.assign(probe.samples, 0);
    for (int i = 0; i < probe.samples; ++i) {
        auto [x, y] = circle_sample_point(radius, i, probe.samples);
        probe.signs[i] = sign_of(p.evaluate(x, y));
    }
    finish_probe(probe);
    return probe;
}

RefinedCrossing refine_sign_change(const SparsePoly& p, const CircleProbe& probe,
                                   size_t change_index, const Rat& width) {
    if (change_index >= probe.sign_changes.size())
        throw std::invalid_argument("refine_sign_change: no such sign change");
    auto [i, j] = probe.sign_changes[change_index];
    int half = probe.samples / 2;

    RefinedCrossing rc;
    // Each adjacent pair lies on a single chart: the right half for indices
    // below `half`, the mirrored half otherwise; the two seam pairs close a
    // chart at u = 1.
    rc.antipodal_chart = i >= half;
    int ci = rc.antipodal_chart ? i - half : i;
    rc.u_lo = chart_u(ci, half);
    rc.u_hi = (j == 0 || j == half) ? Rat(1) : chart_u((rc.antipodal_chart ? j - half : j), half);

    auto point_at = [&](const Rat& u) -> std::pair<Rat, Rat> {
        auto pt = half_angle_point(probe.radius, u);
        if (rc.antipodal_chart) return {Rat(-pt.first), Rat(-pt.second)};
        return pt;
    };
    auto sign_at = [&](const Rat& u) {
        auto pt = point_at(u);
        return sign_of(p.evaluate(pt.first, pt.second));
    };

    int slo = sign_at(rc.u_lo), shi = sign_at(rc.u_hi);
    assert(slo != 0 && shi == -slo);
    while (rc.u_hi - rc.u_lo > width) {
        Rat m = (rc.u_lo + rc.u_hi) / 2;
        int sm = sign_at(m);
        if (sm == 0) {
            // Exact curve point on the circle: collapse to it.
            rc.u_lo = rc.u_hi = m;
            break;
        }
        if (sm == slo)
            rc.u_lo = m;
        else
            rc.u_hi = m;
    }
    rc.point_lo = point_at(rc.u_lo);
    rc.point_hi = point_at(rc.u_hi);
    rc.sign_lo = sign_at(rc.u_lo);
    rc.sign_hi = sign_at(rc.u_hi);
    return rc;
}

UnboundednessReport unboundedness_evidence(const SparsePoly& p, const std::vector<Rat>& radii,
                                           int samples) {
    if (radii.empty()) throw std::invalid_argument("unboundedness_evidence: no radii");
    for (size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] < radii[i + 1]))
            throw std::invalid_argument("unboundedness_evidence: radii must be increasing");
    UnboundednessReport rep;
    for (const Rat& r : radii) rep.findings.push_back({probe_circle(p, r, samples)});
    rep.evidence_of_unboundedness = !rep.findings.back().probe.sign_changes.empty();
    return rep;
}

}  // namespace curvebound
