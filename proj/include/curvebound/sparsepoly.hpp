#pragma once

#include <compare>
#include <map>
#include <string>

#include "curvebound/rational.hpp"

namespace curvebound {

// Lattice exponent pair (k, l) of a monomial x^k y^l.
struct Exponent {
    long long k = 0;
    long long l = 0;
    auto operator<=>(const Exponent&) const = default;
};

// Largest admissible total degree; anything above is refused rather than
// silently truncated.
inline constexpr long long kMaxTotalDegree = 10000;

class DegreeLimitExceeded : public std::domain_error {
public:
    explicit DegreeLimitExceeded(const std::string& what) : std::domain_error(what) {}
};

// Sparse bivariate polynomial with exact rational coefficients. Stored
// coefficients are never zero; the zero polynomial is the empty map (it is
// rejected at the parser boundary but allowed as an intermediate value).
class SparsePoly {
public:
    using TermMap = std::map<Exponent, Rat>;

    SparsePoly() = default;
    static SparsePoly constant(const Rat& v);
    static SparsePoly monomial(const Rat& coeff, long long k, long long l);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    long long total_degree() const;  // -1 for the zero polynomial

    void add_term(const Exponent& e, const Rat& coeff);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scaled(const Rat& s) const;
    SparsePoly pow(unsigned long e) const;

    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

    Rat evaluate(const Rat& x, const Rat& y) const;

    // min k over the support >= 1 (every monomial has an x factor).
    bool divisible_by_x() const;
    bool divisible_by_y() const;

    // Canonical rendering: terms by total degree descending, then x-degree
    // descending; reparsing the result reproduces the identical term map.
    std::string to_string() const;

private:
    void check_degree_limit(long long degree) const;
    TermMap terms_;
};

}  // namespace curvebound
