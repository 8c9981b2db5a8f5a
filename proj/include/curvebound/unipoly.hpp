#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvebound/rational.hpp"

namespace curvebound {

// Dense univariate polynomial over the rationals, coefficient of t^i at
// index i. The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& v) { return UniPoly(std::vector<Rat>{v}); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](size_t i) const { return c_[i]; }
    const Rat& leading() const { return c_.back(); }

    Rat eval(const Rat& t) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Rat& s) const;

    UniPoly monic() const;
    // Reversed coefficient list: t^deg * p(1/t).
    UniPoly reversed() const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    std::string to_string() const;  // e.g. "t^2 - 1/2*t + 3"

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

UniPoly derivative(const UniPoly& u);

// Quotient and remainder of exact division over Q; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Division that must be exact; throws std::logic_error on a nonzero remainder.
UniPoly div_exact(const UniPoly& a, const UniPoly& b);

// Monic greatest common divisor; not both arguments may be zero.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeDecomposition {
    // (multiplicity, monic square-free factor), multiplicities increasing.
    std::vector<std::pair<int, UniPoly>> factors;
    // input == constant * prod factor^multiplicity
    Rat constant;

    // Product of the factors with odd multiplicity (monic; 1 if none).
    UniPoly odd_multiplicity_part() const;
};

// Yun's square-free decomposition; requires degree >= 1.
SquarefreeDecomposition yun_squarefree(const UniPoly& u);

// Interval endpoint that may be infinite.
struct ExtBound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;  // meaningful only when finite

    static ExtBound neg_inf() { return {NegInf, Rat(0)}; }
    static ExtBound pos_inf() { return {PosInf, Rat(0)}; }
    static ExtBound at(const Rat& v) { return {Finite, v}; }
};

class EndpointIsRoot : public std::domain_error {
public:
    explicit EndpointIsRoot(const std::string& what) : std::domain_error(what) {}
};

// Sign-variation chain for root counting; build once, query many times.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& u);
    // Distinct real roots in (lo, hi]. Throws EndpointIsRoot when a finite
    // endpoint is a root of the polynomial.
    long count(const ExtBound& lo, const ExtBound& hi) const;

private:
    int variations(const ExtBound& at) const;
    std::vector<std::vector<Int>> chain_;  // integer, content-normalized
};

// Distinct real roots of u in (lo, hi], counted without multiplicity.
long sturm_count(const UniPoly& u, const ExtBound& lo, const ExtBound& hi);
long sturm_count_all(const UniPoly& u);

bool has_real_root(const UniPoly& u);

// Open interval with rational non-root endpoints containing exactly one root.
struct RootInterval {
    Rat lo, hi;
};

struct OddRootReport {
    long count = 0;
    // Pairwise disjoint isolating intervals, ascending; each contains
    // exactly one distinct real root of odd multiplicity. Every interval
    // avoids 0 unless 0 itself is the isolated root.
    std::vector<RootInterval> intervals;
};

// Roots of odd multiplicity (the ones across which u changes sign);
// requires degree >= 1.
OddRootReport odd_order_real_roots(const UniPoly& u);

// Power-of-two bound B with every real root of u strictly inside (-B, B).
Rat cauchy_root_bound_pow2(const UniPoly& u);

// Isolating intervals for all distinct real roots of a square-free
// polynomial, ascending, endpoints non-root and same-signed (so the
// interval avoids 0) unless the isolated root is 0 itself.
std::vector<RootInterval> isolate_real_roots_squarefree(const UniPoly& u);

struct BezoutResult {
    Int g;  // gcd(p, q) > 0
    Int r, s;  // r*p + s*q == g, |s| minimal, then |r| minimal
};

// Extended gcd; (p, q) != (0, 0).
BezoutResult extended_gcd(const Int& p, const Int& q);

}  // namespace curvebound
