#include "curvebound/witness.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace curvebound {

Rat default_witness_width() {
    Rat w(1, int_pow(Int(2), 32));
    w.canonicalize();
    return w;
}

std::pair<Rat, Rat> find_sign_bracket(const EdgePolynomial& e, const RootInterval& interval) {
    Rat lo = interval.lo, hi = interval.hi;
    if (!(lo < hi)) throw BracketFailure("sign bracket: malformed interval");

    UniPoly odd = yun_squarefree(e.poly).odd_multiplicity_part();
    if (odd.degree() < 1)
        throw BracketFailure("sign bracket: the edge polynomial has no odd-order root");
    if (odd.eval(lo) == 0 || odd.eval(hi) == 0)
        throw BracketFailure("sign bracket: interval endpoint is a root");
    if (sturm_count(odd, ExtBound::at(lo), ExtBound::at(hi)) != 1)
        throw BracketFailure("sign bracket: interval does not isolate a single odd-order root");
    if (lo <= 0 && hi >= 0)
        throw BracketFailure("sign bracket: interval must avoid 0");

    // The lone odd-order root is the only sign change of e in the interval,
    // so it suffices to move the endpoints off any even-order roots of e.
    for (int guard = 0; guard < 4096 && (e.poly.eval(lo) == 0 || e.poly.eval(hi) == 0); ++guard) {
        Rat m = (lo + hi) / 2;
        Rat vm = odd.eval(m);
        if (vm == 0) {
            // Bisection landed exactly on the root; step a quarter width to
            // either side of it.
            Rat qlo = (lo + m) / 2, qhi = (m + hi) / 2;
            if (odd.eval(qlo) == 0 || odd.eval(qhi) == 0)
                throw BracketFailure("sign bracket: unexpected extra root");
            lo = qlo;
            hi = qhi;
        } else if (sign_of(vm) == sign_of(odd.eval(lo))) {
            lo = m;
        } else {
            hi = m;
        }
    }
    Rat vlo = e.poly.eval(lo), vhi = e.poly.eval(hi);
    if (sign_of(vlo) * sign_of(vhi) >= 0)
        throw BracketFailure("sign bracket: no sign change across the interval");
    return vlo < 0 ? std::make_pair(lo, hi) : std::make_pair(hi, lo);
}

WitnessPath build_path(const HullEdge& edge, const std::pair<Rat, Rat>& bracket) {
    WitnessPath path;
    path.edge = edge;
    auto it = std::find_if(edge.normals.begin(), edge.normals.end(),
                           [](const Normal& n) { return n.qualifies(); });
    if (it == edge.normals.end())
        throw std::invalid_argument("build_path: edge has no qualifying normal");
    path.normal = *it;
    assert(path.normal.a * edge.step_k + path.normal.b * edge.step_l == 0);

    BezoutResult bz = extended_gcd(Int(static_cast<long>(edge.step_k)),
                                   Int(static_cast<long>(edge.step_l)));
    assert(bz.g == 1);  // the edge direction is primitive
    path.t_pow_x = bz.r.get_si();
    path.t_pow_y = bz.s.get_si();
    path.t_minus = bracket.first;
    path.t_plus = bracket.second;
    if (sign_of(path.t_minus) == 0 || sign_of(path.t_minus) != sign_of(path.t_plus))
        throw BracketFailure("build_path: bracket endpoints must share a nonzero sign");
    path.support_value = path.normal.a * edge.start.k + path.normal.b * edge.start.l;
    return path;
}

namespace {

// p composed with the path at one scale, with the overall positive factor
// n^minE and the fixed-sign factor t^minT removed: a polynomial in t whose
// sign pattern on the bracket matches g_n up to one constant sign.
struct ComposedAtScale {
    UniPoly reduced;  // sum of c * t^(T - minT) * n^(E - minE)
    int t_factor_sign; // sign of t^minT on the bracket
};

ComposedAtScale compose(const SparsePoly& p, const WitnessPath& path, unsigned long n) {
    long long min_t = 0, min_e = 0;
    bool first = true;
    for (const auto& [ex, c] : p.terms()) {
        long long T = path.t_pow_x * ex.k + path.t_pow_y * ex.l;
        long long E = path.normal.a * ex.k + path.normal.b * ex.l;
        if (first || T < min_t) min_t = T;
        if (first || E < min_e) min_e = E;
        first = false;
    }
    std::map<long long, Rat> acc;
    Int base(static_cast<unsigned long>(n));
    for (const auto& [ex, c] : p.terms()) {
        long long T = path.t_pow_x * ex.k + path.t_pow_y * ex.l;
        long long E = path.normal.a * ex.k + path.normal.b * ex.l;
        Rat scaled = c * Rat(int_pow(base, static_cast<unsigned long>(E - min_e)));
        acc[T - min_t] += scaled;
    }
    long long top = acc.rbegin()->first;
    std::vector<Rat> coeffs(static_cast<size_t>(top) + 1, Rat(0));
    for (const auto& [e, v] : acc) coeffs[static_cast<size_t>(e)] = v;

    int bracket_sign = sign_of(path.t_minus);
    int t_factor = (bracket_sign < 0 && (min_t % 2 != 0)) ? -1 : 1;
    return {UniPoly(std::move(coeffs)), t_factor};
}

Rat path_x(const WitnessPath& path, const Rat& t, unsigned long n) {
    return rat_pow(t, path.t_pow_x) * rat_pow(Rat(static_cast<unsigned long>(n)), path.normal.a);
}

Rat path_y(const WitnessPath& path, const Rat& t, unsigned long n) {
    return rat_pow(t, path.t_pow_y) * rat_pow(Rat(static_cast<unsigned long>(n)), path.normal.b);
}

// Shrink [lo, hi] (g has strictly opposite signs at the ends) to width
// <= target while keeping the opposite signs. When a midpoint evaluates to
// exactly zero, re-bracket symmetrically around the hit.
void bisect_sign_change(const UniPoly& g, Rat& lo, Rat& hi, const Rat& target) {
    int sign_lo = sign_of(g.eval(lo));
    assert(sign_lo != 0 && sign_of(g.eval(hi)) == -sign_lo);
    while (hi - lo > target) {
        Rat m = (lo + hi) / 2;
        int sm = sign_of(g.eval(m));
        if (sm == 0) {
            // Exact root at m: find a half-width around it that still flips.
            Rat delta = target / 2;
            Rat quarter = (hi - lo) / 4;
            if (quarter < delta) delta = quarter;
            for (int guard = 0; guard < 128; ++guard) {
                Rat a = m - delta, b = m + delta;
                if (a > lo && b < hi) {
                    int sa = sign_of(g.eval(a)), sb = sign_of(g.eval(b));
                    if (sa != 0 && sb == -sa) {
                        lo = a;
                        hi = b;
                        return;
                    }
                    // No flip across the symmetric window (even-order
                    // contact or a neighbouring root): retreat to the side
                    // that still brackets a sign change.
                    if (sa != 0 && sa != sign_lo) {
                        hi = a;
                        break;
                    }
                    if (sb != 0 && sb == sign_lo) {
                        lo = b;
                        break;
                    }
                }
                delta /= 2;
            }
            sign_lo = sign_of(g.eval(lo));
            continue;
        }
        if (sm == sign_lo)
            lo = m;
        else
            hi = m;
    }
}

}  // namespace

std::vector<WitnessPoint> generate_witnesses(const SparsePoly& p, const WitnessPath& path,
                                             const std::vector<unsigned long>& scales,
                                             const Rat& width,
                                             std::vector<unsigned long>* skipped) {
    if (scales.empty()) throw std::invalid_argument("generate_witnesses: no scales");
    if (!(width > 0)) throw std::invalid_argument("generate_witnesses: width must be positive");
    for (size_t i = 0; i + 1 < scales.size(); ++i)
        if (scales[i] >= scales[i + 1])
            throw std::invalid_argument("generate_witnesses: scales must be strictly increasing");

    std::vector<WitnessPoint> out;
    for (unsigned long n : scales) {
        ComposedAtScale g = compose(p, path, n);
        Rat lo = std::min(path.t_minus, path.t_plus);
        Rat hi = std::max(path.t_minus, path.t_plus);
        int slo = sign_of(g.reduced.eval(lo));
        int shi = sign_of(g.reduced.eval(hi));
        if (slo == 0 || shi == 0 || slo == shi) {
            if (skipped) skipped->push_back(n);
            continue;
        }
        bisect_sign_change(g.reduced, lo, hi, width);

        WitnessPoint wp;
        wp.scale = n;
        wp.t_lo = lo;
        wp.t_hi = hi;
        Rat mid = (lo + hi) / 2;
        wp.x = path_x(path, mid, n);
        wp.y = path_y(path, mid, n);
        wp.residual = abs(p.evaluate(wp.x, wp.y));
        // The emitted bracket must still witness the crossing exactly.
        assert(sign_of(g.reduced.eval(wp.t_lo)) * sign_of(g.reduced.eval(wp.t_hi)) == -1);
        out.push_back(std::move(wp));
    }
    if (out.empty())
        throw NoSignChangeAtAllScales(
            "no scale exhibits the sign change yet; try larger scales");
    return out;
}

WitnessReport axis_witnesses(const SparsePoly& p, bool x_divides,
                             const std::vector<unsigned long>& scales) {
    WitnessReport rep;
    rep.kind = x_divides ? WitnessReport::AxisX : WitnessReport::AxisY;
    for (unsigned long n : scales) {
        WitnessPoint wp;
        wp.scale = n;
        wp.t_lo = wp.t_hi = Rat(0);
        wp.x = x_divides ? Rat(0) : Rat(static_cast<unsigned long>(n));
        wp.y = x_divides ? Rat(static_cast<unsigned long>(n)) : Rat(0);
        wp.residual = abs(p.evaluate(wp.x, wp.y));
        assert(wp.residual == 0);
        rep.points.push_back(std::move(wp));
    }
    return rep;
}

WitnessReport witnesses_for_verdict(const SparsePoly& p, const Verdict& verdict,
                                    const std::vector<unsigned long>& scales, const Rat& width) {
    if (verdict.status != Status::NoncompactCertified)
        throw std::invalid_argument("witnesses are only generated for noncompact certificates");
    const Evidence& ev = verdict.evidence;
    assert(ev.primary_violation.has_value());
    const Violation& v = *ev.primary_violation;
    if (v.kind == Violation::DivisibleByX || v.kind == Violation::DivisibleByY)
        return axis_witnesses(p, v.kind == Violation::DivisibleByX, scales);

    const OuterEdgeReport& rep = ev.outer_edges[v.report_index];
    auto bracket = find_sign_bracket(rep.slice, v.interval);
    WitnessPath path = build_path(rep.slice.edge, bracket);
    WitnessReport out;
    out.kind = WitnessReport::EdgePath;
    out.path = path;
    out.points = generate_witnesses(p, path, scales, width, &out.skipped_scales);
    return out;
}

}  // namespace curvebound
