#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvebound/unipoly.hpp"
#include "support/descartes_oracle.hpp"
#include "support/random_poly.hpp"

using namespace curvebound;
using testsupport::descartes_real_root_count;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("derivative basics") {
    CHECK(derivative(upoly({-1, 0, 1})) == upoly({0, 2}));  // t^2 - 1 -> 2t
    CHECK(derivative(upoly({5})).is_zero());
    // t^8 - 4t^6 + 6t^4 - 4t^2 + 1 -> 8t^7 - 24t^5 + 24t^3 - 8t
    CHECK(derivative(upoly({1, 0, -4, 0, 6, 0, -4, 0, 1})) ==
          upoly({0, -8, 0, 24, 0, -24, 0, 8}));
}

TEST_CASE("derivative agrees with the synthetic-quotient value") {
    // u'(x0) equals q(x0) where u(t) - u(x0) = (t - x0) q(t); the quotient
    // route never looks at the term-by-term rule.
    testsupport::RandomGen gen(101);
    for (int i = 0; i < 100; ++i) {
        UniPoly u = gen.uni(8, 15);
        if (u.degree() < 1) continue;
        Rat x0 = gen.rational(10, 6);
        UniPoly shifted = u - UniPoly::constant(u.eval(x0));
        UniPoly q = div_exact(shifted, UniPoly({std::vector<Rat>{-x0, Rat(1)}}));
        CHECK(derivative(u).eval(x0) == q.eval(x0));
    }
}

TEST_CASE("gcd examples") {
    UniPoly g1 = uni_gcd(upoly({-1, 0, 1}), upoly({-1, 1}));
    CHECK(g1 == upoly({-1, 1}));  // gcd(t^2-1, t-1) = t-1

    CHECK(uni_gcd(upoly({1, 0, 1}), upoly({-1, 0, 1})).degree() == 0);  // coprime

    // gcd((t-1)^2 (t+1), (t-1)(t+2)) = t-1; checked by exact division of
    // both arguments.
    UniPoly a = upoly({-1, 1}) * upoly({-1, 1}) * upoly({1, 1});
    UniPoly b = upoly({-1, 1}) * upoly({2, 1});
    UniPoly g = uni_gcd(a, b);
    CHECK(g == upoly({-1, 1}));
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
}

TEST_CASE("yun decomposition examples") {
    SUBCASE("(t-1)^2 (t+1) given expanded") {
        auto dec = yun_squarefree(upoly({1, -1, -1, 1}));
        REQUIRE(dec.factors.size() == 2);
        CHECK(dec.factors[0].first == 1);
        CHECK(dec.factors[0].second == upoly({1, 1}));
        CHECK(dec.factors[1].first == 2);
        CHECK(dec.factors[1].second == upoly({-1, 1}));
        CHECK(dec.constant == 1);
    }
    SUBCASE("t^2 + 1 is already square-free") {
        auto dec = yun_squarefree(upoly({1, 0, 1}));
        REQUIRE(dec.factors.size() == 1);
        CHECK(dec.factors[0].first == 1);
        CHECK(dec.factors[0].second == upoly({1, 0, 1}));
    }
    SUBCASE("(1-t^2)^4 expanded") {
        auto dec = yun_squarefree(upoly({1, 0, -4, 0, 6, 0, -4, 0, 1}));
        REQUIRE(dec.factors.size() == 1);
        CHECK(dec.factors[0].first == 4);
        CHECK(dec.factors[0].second == upoly({-1, 0, 1}));
        CHECK(dec.constant == 1);
    }
}

TEST_CASE("yun reconstruction property") {
    testsupport::RandomGen gen(202);
    for (int i = 0; i < 60; ++i) {
        // Build inputs with interesting multiplicities from small factors.
        UniPoly u = UniPoly::constant(gen.rational(12, 4));
        if (u[0] == 0) u = UniPoly::constant(Rat(3));
        int nf = static_cast<int>(gen.integer(1, 3));
        for (int f = 0; f < nf; ++f) {
            UniPoly factor = gen.uni(2, 6);
            while (factor.degree() < 1) factor = gen.uni(2, 6);
            int mult = static_cast<int>(gen.integer(1, 3));
            for (int m = 0; m < mult; ++m) u = u * factor;
        }
        auto dec = yun_squarefree(u);
        UniPoly prod = UniPoly::constant(dec.constant);
        for (const auto& [mult, factor] : dec.factors) {
            CHECK(factor.leading() == 1);
            for (int m = 0; m < mult; ++m) prod = prod * factor;
        }
        CHECK(prod == u);
        // Factors are pairwise coprime and square-free.
        for (size_t a = 0; a < dec.factors.size(); ++a) {
            CHECK(uni_gcd(dec.factors[a].second, derivative(dec.factors[a].second)).degree() == 0);
            for (size_t b = a + 1; b < dec.factors.size(); ++b)
                CHECK(uni_gcd(dec.factors[a].second, dec.factors[b].second).degree() == 0);
        }
    }
}

TEST_CASE("sturm count examples") {
    CHECK(sturm_count_all(upoly({-2, 0, 1})) == 2);  // t^2 - 2
    CHECK(sturm_count_all(upoly({1, 0, 1})) == 0);   // t^2 + 1
    CHECK(sturm_count_all(upoly({1, 0, -4, 0, 6, 0, -4, 0, 1})) == 2);  // (1-t^2)^4
    CHECK(descartes_real_root_count(upoly({1, 0, -4, 0, 6, 0, -4, 0, 1})) == 2);
}

TEST_CASE("sturm interval counting and endpoint errors") {
    UniPoly u = upoly({-2, 0, 1});  // roots at +-sqrt(2)
    CHECK(sturm_count(u, ExtBound::at(Rat(0)), ExtBound::at(Rat(2))) == 1);
    CHECK(sturm_count(u, ExtBound::at(Rat(-2)), ExtBound::at(Rat(2))) == 2);
    CHECK(sturm_count(u, ExtBound::at(Rat(2)), ExtBound::pos_inf()) == 0);
    CHECK_THROWS_AS(sturm_count(upoly({-1, 1}), ExtBound::at(Rat(1)), ExtBound::at(Rat(2))),
                    EndpointIsRoot);
    CHECK_THROWS_AS(sturm_count(u, ExtBound::at(Rat(2)), ExtBound::at(Rat(1))),
                    std::invalid_argument);
}

TEST_CASE("has_real_root") {
    CHECK_FALSE(has_real_root(upoly({1, 0, 1})));
    CHECK(has_real_root(upoly({-1, 1})));
    CHECK(has_real_root(upoly({1, 0, -4, 0, 6, 0, -4, 0, 1})));
    CHECK_FALSE(has_real_root(upoly({7})));  // degree 0
}

TEST_CASE("sturm equals the Descartes bisection oracle on random inputs") {
    testsupport::RandomGen gen(303);
    for (int i = 0; i < 500; ++i) {
        UniPoly u = gen.uni(10, 20);
        CAPTURE(u.to_string());
        CHECK(sturm_count_all(u) == descartes_real_root_count(u));
    }
}

TEST_CASE("odd order real roots") {
    SUBCASE("(1-t^2)^4: both roots have even order") {
        auto rep = odd_order_real_roots(upoly({1, 0, -4, 0, 6, 0, -4, 0, 1}));
        CHECK(rep.count == 0);
        CHECK(rep.intervals.empty());
    }
    SUBCASE("t - 1") {
        auto rep = odd_order_real_roots(upoly({-1, 1}));
        REQUIRE(rep.count == 1);
        CHECK(rep.intervals[0].lo < 1);
        CHECK(rep.intervals[0].hi > 1);
        CHECK(rep.intervals[0].lo > 0);  // interval stays away from 0
    }
    SUBCASE("(t-1)^3 (t^2+1) expanded") {
        UniPoly u = upoly({-1, 1}) * upoly({-1, 1}) * upoly({-1, 1}) * upoly({1, 0, 1});
        auto rep = odd_order_real_roots(u);
        REQUIRE(rep.count == 1);
        CHECK(rep.intervals[0].lo < 1);
        CHECK(rep.intervals[0].hi > 1);
    }
}

TEST_CASE("odd-order isolating intervals are disjoint, zero-avoiding and correct") {
    testsupport::RandomGen gen(404);
    int nontrivial = 0;
    for (int i = 0; i < 120; ++i) {
        UniPoly u = gen.uni(7, 12);
        if (u.degree() < 1) continue;
        auto rep = odd_order_real_roots(u);
        UniPoly odd = yun_squarefree(u).odd_multiplicity_part();
        if (rep.count > 0) ++nontrivial;
        // count matches a direct Sturm count of the odd part
        if (odd.degree() >= 1) CHECK(rep.count == sturm_count_all(odd));
        // ... and never exceeds the distinct-root count of u itself
        CHECK(rep.count <= sturm_count_all(u));
        for (size_t a = 0; a < rep.intervals.size(); ++a) {
            const auto& iv = rep.intervals[a];
            CHECK(iv.lo < iv.hi);
            CHECK(sturm_count(odd, ExtBound::at(iv.lo), ExtBound::at(iv.hi)) == 1);
            if (odd.eval(Rat(0)) != 0) {
                bool avoids_zero = sign_of(iv.lo) == sign_of(iv.hi) && sign_of(iv.lo) != 0;
                CHECK(avoids_zero);
            }
            if (a + 1 < rep.intervals.size()) CHECK(iv.hi <= rep.intervals[a + 1].lo);
        }
    }
    CHECK(nontrivial > 30);  // the generator must actually exercise the path
}

TEST_CASE("extended gcd examples and normalization") {
    auto e1 = extended_gcd(3, 5);
    CHECK(e1.g == 1);
    CHECK(e1.r == 2);
    CHECK(e1.s == -1);

    auto e2 = extended_gcd(1, 1);
    CHECK(e2.g == 1);
    CHECK(e2.r == 1);
    CHECK(e2.s == 0);

    auto e3 = extended_gcd(-1, 1);
    CHECK(e3.g == 1);
    CHECK(e3.r == -1);
    CHECK(e3.s == 0);

    auto e4 = extended_gcd(0, -7);
    CHECK(e4.g == 7);
    CHECK(e4.r == 0);
    CHECK(e4.s == -1);

    CHECK_THROWS_AS(extended_gcd(0, 0), std::invalid_argument);
}

TEST_CASE("extended gcd identity on random pairs") {
    testsupport::RandomGen gen(505);
    for (int i = 0; i < 1000; ++i) {
        Int p(gen.integer(-1000000, 1000000));
        Int q(gen.integer(-1000000, 1000000));
        if (p == 0 && q == 0) q = 1;
        auto e = extended_gcd(p, q);
        CHECK(e.g > 0);
        CHECK(e.r * p + e.s * q == e.g);
        Int gg;
        mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        CHECK(e.g == gg);
    }
}
