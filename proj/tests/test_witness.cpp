#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvebound/parser.hpp"
#include "curvebound/witness.hpp"
#include "support/random_poly.hpp"

using namespace curvebound;

namespace {

Rat max_norm(const WitnessPoint& w) {
    Rat ax = abs(w.x), ay = abs(w.y);
    return ax > ay ? ax : ay;
}

// g_n(t) = p(t^rx n^a, t^ry n^b) evaluated exactly at rational t != 0.
Rat path_value(const SparsePoly& p, const WitnessPath& path, const Rat& t, unsigned long n) {
    Rat x = rat_pow(t, path.t_pow_x) * rat_pow(Rat(n), path.normal.a);
    Rat y = rat_pow(t, path.t_pow_y) * rat_pow(Rat(n), path.normal.b);
    return p.evaluate(x, y);
}

EdgePolynomial outer_slice(const SparsePoly& p) {
    NewtonPolygon np = newton_polygon(p);
    for (const HullEdge& e : np.edges)
        if (e.outer) return edge_polynomial(p, e);
    FAIL("no outer edge");
    return edge_polynomial(p, np.edges.front());
}

}  // namespace

TEST_CASE("sign bracket examples") {
    SUBCASE("t - 1 on (1/2, 3/2) is already a bracket") {
        SparsePoly p = parse_polynomial("x*y - 1");
        EdgePolynomial e = outer_slice(p);  // e(t) = t - 1
        auto [tm, tp] = find_sign_bracket(e, {Rat(1, 2), Rat(3, 2)});
        CHECK(tm == Rat(1, 2));
        CHECK(tp == Rat(3, 2));
        CHECK(e.poly.eval(tm) < 0);
        CHECK(e.poly.eval(tp) > 0);
    }
    SUBCASE("hyperbola slice on (1/2, 2)") {
        SparsePoly p = parse_polynomial("x*y - 1");
        EdgePolynomial e = outer_slice(p);
        auto [tm, tp] = find_sign_bracket(e, {Rat(1, 2), Rat(2)});
        CHECK(tm == Rat(1, 2));
        CHECK(tp == Rat(2));
    }
    SUBCASE("(t-1)^3 (t^2+1): odd-order root inside even-order noise") {
        // Build p with that slice directly: exponents along x-axis segment.
        UniPoly cube = UniPoly({std::vector<Rat>{Rat(-1), Rat(1)}});
        UniPoly e = cube * cube * cube * UniPoly({std::vector<Rat>{Rat(1), Rat(0), Rat(1)}});
        SparsePoly p;
        for (int i = 0; i <= e.degree(); ++i)
            p.add_term({static_cast<long long>(i), 0}, e[static_cast<size_t>(i)]);
        NewtonPolygon np = newton_polygon(p);
        EdgePolynomial ep = edge_polynomial(p, np.edges[0]);
        auto interval = odd_order_real_roots(ep.poly).intervals.at(0);
        auto [tm, tp] = find_sign_bracket(ep, interval);
        CHECK(sign_of(tm) == sign_of(tp));
        CHECK(sign_of(ep.poly.eval(tm)) == -1);
        CHECK(sign_of(ep.poly.eval(tp)) == 1);
        CHECK(interval.lo <= std::min(tm, tp));
        CHECK(std::max(tm, tp) <= interval.hi);
    }
    SUBCASE("invalid interval reports a bracket failure") {
        SparsePoly p = parse_polynomial("x*y - 1");
        EdgePolynomial e = outer_slice(p);
        CHECK_THROWS_AS(find_sign_bracket(e, {Rat(2), Rat(3)}), BracketFailure);
        CHECK_THROWS_AS(find_sign_bracket(e, {Rat(-1), Rat(2)}), BracketFailure);
    }
}

TEST_CASE("path construction") {
    SUBCASE("hyperbola: x(t) = t*n, y(t) = 1/n") {
        SparsePoly p = parse_polynomial("x*y - 1");
        Verdict v = decide(p);
        REQUIRE(v.status == Status::NoncompactCertified);
        const auto& rep = v.evidence.outer_edges[v.evidence.primary_violation->report_index];
        auto bracket = find_sign_bracket(rep.slice, v.evidence.primary_violation->interval);
        WitnessPath path = build_path(rep.slice.edge, bracket);
        CHECK(path.normal == Normal{1, -1});
        CHECK(path.t_pow_x == 1);
        CHECK(path.t_pow_y == 0);
        CHECK(path.support_value == 0);
        CHECK(path.t_pow_x * path.edge.step_k + path.t_pow_y * path.edge.step_l == 1);
    }
    SUBCASE("parabola: Bezout identity and sign change along the path") {
        SparsePoly p = parse_polynomial("y - x^2");
        Verdict v = decide(p);
        REQUIRE(v.status == Status::NoncompactCertified);
        const auto& rep = v.evidence.outer_edges[v.evidence.primary_violation->report_index];
        auto bracket = find_sign_bracket(rep.slice, v.evidence.primary_violation->interval);
        WitnessPath path = build_path(rep.slice.edge, bracket);
        CHECK(path.normal == Normal{1, 2});
        CHECK(path.t_pow_x * 2 + path.t_pow_y * (-1) == 1);
        CHECK(path.normal.a * path.edge.step_k + path.normal.b * path.edge.step_l == 0);
        CHECK(path.support_value == 2);
        // composed sign flips across the bracket for a large scale
        Rat va = path_value(p, path, path.t_minus, 64);
        Rat vb = path_value(p, path, path.t_plus, 64);
        CHECK(sign_of(va) * sign_of(vb) == -1);
    }
}

TEST_CASE("hyperbola witnesses are exact") {
    SparsePoly p = parse_polynomial("x*y - 1");
    Verdict v = decide(p);
    WitnessReport rep = witnesses_for_verdict(p, v, {10, 100, 1000}, default_witness_width());
    CHECK(rep.kind == WitnessReport::EdgePath);
    REQUIRE(rep.points.size() == 3);
    // The composed function is t - 1 at every scale; bisection lands on the
    // root exactly and the points sit on the curve with zero residual.
    const unsigned long scales[] = {10, 100, 1000};
    for (size_t i = 0; i < 3; ++i) {
        const WitnessPoint& w = rep.points[i];
        CHECK(w.scale == scales[i]);
        CHECK(w.x == Rat(scales[i]));
        CHECK(w.y == Rat(1, scales[i]));
        CHECK(w.residual == 0);
    }
    CHECK(max_norm(rep.points[0]) < max_norm(rep.points[1]));
    CHECK(max_norm(rep.points[1]) < max_norm(rep.points[2]));
    CHECK(max_norm(rep.points[2]) >= 1000);
}

TEST_CASE("parabola witnesses grow like n^2") {
    SparsePoly p = parse_polynomial("y - x^2");
    Verdict v = decide(p);
    WitnessReport rep = witnesses_for_verdict(p, v, {10, 100}, default_witness_width());
    REQUIRE(rep.points.size() == 2);
    for (const WitnessPoint& w : rep.points) {
        // the point is on or extremely near the curve
        Rat bound = Rat(1, 1000000);
        CHECK(w.residual <= Rat(w.scale) * Rat(w.scale) * bound);
    }
    CHECK(max_norm(rep.points[0]) >= 99);   // about n^2 = 100
    CHECK(max_norm(rep.points[1]) >= 9999);
}

TEST_CASE("axis witnesses for divisible inputs") {
    SparsePoly p = parse_polynomial("x*(y^2 + 1)");
    Verdict v = decide(p);
    REQUIRE(v.status == Status::NoncompactCertified);
    WitnessReport rep = witnesses_for_verdict(p, v, {2, 4, 16}, default_witness_width());
    CHECK(rep.kind == WitnessReport::AxisX);
    REQUIRE(rep.points.size() == 3);
    for (const WitnessPoint& w : rep.points) {
        CHECK(w.x == 0);
        CHECK(w.y == Rat(w.scale));
        CHECK(w.residual == 0);
    }

    SparsePoly q = parse_polynomial("y*(x^4 + 2)");
    WitnessReport repy = witnesses_for_verdict(q, decide(q), {2, 4}, default_witness_width());
    CHECK(repy.kind == WitnessReport::AxisY);
    CHECK(repy.points[1].x == 4);
    CHECK(repy.points[1].y == 0);
}

TEST_CASE("emitted intervals always flip sign and residuals obey the derivative bound") {
    SparsePoly p = parse_polynomial("y - x^2");
    Verdict v = decide(p);
    const auto& er = v.evidence.outer_edges[v.evidence.primary_violation->report_index];
    auto bracket = find_sign_bracket(er.slice, v.evidence.primary_violation->interval);
    WitnessPath path = build_path(er.slice.edge, bracket);

    for (const Rat& width : {Rat(1, 16), Rat(1, 1024), Rat(1, 1 << 30)}) {
        auto points = generate_witnesses(p, path, {8, 32}, width);
        for (const WitnessPoint& w : points) {
            Rat va = path_value(p, path, w.t_lo, w.scale);
            Rat vb = path_value(p, path, w.t_hi, w.scale);
            CHECK(sign_of(va) * sign_of(vb) == -1);
            CHECK(w.t_hi - w.t_lo <= width);

            // |g_n| at the midpoint is at most (width/2) * max |g_n'| over the
            // bracket; bound the derivative by the term sums.
            Rat tmax = abs(w.t_lo) > abs(w.t_hi) ? abs(w.t_lo) : abs(w.t_hi);
            Rat tmin = abs(w.t_lo) < abs(w.t_hi) ? abs(w.t_lo) : abs(w.t_hi);
            Rat deriv_bound(0);
            for (const auto& [ex, c] : p.terms()) {
                long long T = path.t_pow_x * ex.k + path.t_pow_y * ex.l;
                long long E = path.normal.a * ex.k + path.normal.b * ex.l;
                if (T == 0) continue;
                Rat tpow = T - 1 >= 0 ? rat_pow(tmax, T - 1) : rat_pow(tmin, T - 1);
                deriv_bound += abs(c) * Rat(static_cast<long>(std::abs(T))) * tpow *
                               rat_pow(Rat(w.scale), E);
            }
            CHECK(w.residual <= (w.t_hi - w.t_lo) / 2 * deriv_bound);
        }
    }

    // Residuals shrink (weakly) as the width shrinks.
    auto wide = generate_witnesses(p, path, {8}, Rat(1, 16));
    auto tight = generate_witnesses(p, path, {8}, Rat(1, 1 << 20));
    CHECK(tight[0].residual <= wide[0].residual);
}

TEST_CASE("norms increase along scales for random noncompact inputs") {
    testsupport::RandomGen gen(1616);
    int exercised = 0;
    for (int i = 0; i < 400 && exercised < 25; ++i) {
        SparsePoly p = gen.sparse();
        Verdict v = decide(p);
        if (v.status != Status::NoncompactCertified) continue;
        if (v.evidence.primary_violation->kind != Violation::OddOrderEdgeRoot) continue;
        ++exercised;
        WitnessReport rep;
        try {
            rep = witnesses_for_verdict(p, v, {4, 16, 256}, Rat(1, 1 << 20));
        } catch (const NoSignChangeAtAllScales&) {
            continue;  // scales too small for this input; allowed by contract
        }
        REQUIRE(!rep.points.empty());
        for (size_t j = 0; j + 1 < rep.points.size(); ++j)
            CHECK(max_norm(rep.points[j]) < max_norm(rep.points[j + 1]));
        for (const WitnessPoint& w : rep.points) {
            Rat va = path_value(p, rep.path, w.t_lo, w.scale);
            Rat vb = path_value(p, rep.path, w.t_hi, w.scale);
            CHECK(sign_of(va) * sign_of(vb) == -1);
        }
    }
    CHECK(exercised >= 25);
}

TEST_CASE("witness errors") {
    SparsePoly p = parse_polynomial("x*y - 1");
    Verdict v = decide(p);
    CHECK_THROWS_AS(witnesses_for_verdict(parse_polynomial("x^2 + y^2 - 1"),
                                          decide(parse_polynomial("x^2 + y^2 - 1")), {2},
                                          default_witness_width()),
                    std::invalid_argument);
    const auto& er = v.evidence.outer_edges[0];
    auto bracket = find_sign_bracket(er.slice, v.evidence.primary_violation->interval);
    WitnessPath path = build_path(er.slice.edge, bracket);
    CHECK_THROWS_AS(generate_witnesses(p, path, {}, default_witness_width()),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate_witnesses(p, path, {4, 2}, default_witness_width()),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate_witnesses(p, path, {2, 4}, Rat(0)), std::invalid_argument);
}
