#include "curvebound/sparsepoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace curvebound {

SparsePoly SparsePoly::constant(const Rat& v) {
    SparsePoly p;
    p.add_term({0, 0}, v);
    return p;
}

SparsePoly SparsePoly::monomial(const Rat& coeff, long long k, long long l) {
    SparsePoly p;
    p.add_term({k, l}, coeff);
    return p;
}

long long SparsePoly::total_degree() const {
    long long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.k + e.l);
    return d;
}

void SparsePoly::check_degree_limit(long long degree) const {
    if (degree > kMaxTotalDegree)
        throw DegreeLimitExceeded("total degree " + std::to_string(degree) + " exceeds limit " +
                                  std::to_string(kMaxTotalDegree));
}

void SparsePoly::add_term(const Exponent& e, const Rat& coeff) {
    if (coeff == 0) return;
    check_degree_limit(e.k + e.l);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (is_zero() || o.is_zero()) return SparsePoly();
    check_degree_limit(total_degree() + o.total_degree());
    SparsePoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea.k + eb.k, ea.l + eb.l}, ca * cb);
    return r;
}

SparsePoly SparsePoly::scaled(const Rat& s) const {
    SparsePoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

SparsePoly SparsePoly::pow(unsigned long e) const {
    if (e == 0) return constant(Rat(1));
    if (!is_zero()) check_degree_limit(total_degree() * static_cast<long long>(e));
    SparsePoly acc = constant(Rat(1));
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

Rat SparsePoly::evaluate(const Rat& x, const Rat& y) const {
    // Power caches keyed by exponent; supports are tiny compared to degrees.
    std::map<long long, Rat> xp{{0, Rat(1)}}, yp{{0, Rat(1)}};
    auto power = [](std::map<long long, Rat>& cache, const Rat& base, long long e) -> const Rat& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        return cache.emplace(e, rat_pow(base, e)).first->second;
    };
    Rat acc(0);
    for (const auto& [e, c] : terms_) acc += c * power(xp, x, e.k) * power(yp, y, e.l);
    return acc;
}

bool SparsePoly::divisible_by_x() const {
    if (is_zero()) throw std::invalid_argument("divisible_by_x: zero polynomial");
    for (const auto& [e, c] : terms_)
        if (e.k == 0) return false;
    return true;
}

bool SparsePoly::divisible_by_y() const {
    if (is_zero()) throw std::invalid_argument("divisible_by_y: zero polynomial");
    for (const auto& [e, c] : terms_)
        if (e.l == 0) return false;
    return true;
}

std::string SparsePoly::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::pair<Exponent, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        long long da = a.first.k + a.first.l, db = b.first.k + b.first.l;
        if (da != db) return da > db;
        return a.first.k > b.first.k;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = mag == 1;
        bool has_vars = e.k > 0 || e.l > 0;
        if (!unit || !has_vars) {
            os << mag.get_num().get_str();
            if (mag.get_den() != 1) os << "/" << mag.get_den().get_str();
            if (has_vars) os << "*";
        }
        if (e.k > 0) {
            os << "x";
            if (e.k > 1) os << "^" << e.k;
            if (e.l > 0) os << "*";
        }
        if (e.l > 0) {
            os << "y";
            if (e.l > 1) os << "^" << e.l;
        }
    }
    return os.str();
}

}  // namespace curvebound
