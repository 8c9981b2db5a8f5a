#include "curvebound/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace curvebound {

Rat UniPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const { return scaled(Rat(-1)); }

UniPoly UniPoly::scaled(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return scaled(Rat(1) / leading());
}

UniPoly UniPoly::reversed() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& v = c_[static_cast<size_t>(i)];
        if (v == 0) continue;
        Rat mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool unit = mag == 1;
        if (i == 0 || !unit) {
            os << mag.get_num().get_str();
            if (mag.get_den() != 1) os << "/" << mag.get_den().get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly derivative(const UniPoly& u) {
    if (u.degree() <= 0) return UniPoly();
    std::vector<Rat> r(static_cast<size_t>(u.degree()), Rat(0));
    for (int i = 1; i <= u.degree(); ++i)
        r[static_cast<size_t>(i - 1)] = u[static_cast<size_t>(i)] * Rat(i);
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat coef = rem[static_cast<size_t>(k + b.degree())] / b.leading();
        quo[static_cast<size_t>(k)] = coef;
        if (coef == 0) continue;
        for (size_t j = 0; j < bc.size(); ++j)
            rem[static_cast<size_t>(k) + j] -= coef * bc[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly div_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("div_exact: nonzero remainder");
    return q;
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("uni_gcd: both arguments zero");
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        // Rescale to monic each round to keep coefficient sizes in check.
        y = r.monic();
    }
    return x.monic();
}

UniPoly SquarefreeDecomposition::odd_multiplicity_part() const {
    UniPoly prod = UniPoly::constant(Rat(1));
    for (const auto& [mult, factor] : factors)
        if (mult % 2 == 1) prod = prod * factor;
    return prod;
}

SquarefreeDecomposition yun_squarefree(const UniPoly& u) {
    if (u.degree() < 1) throw std::invalid_argument("yun_squarefree: degree must be >= 1");
    SquarefreeDecomposition out;

    UniPoly up = derivative(u);
    UniPoly g = uni_gcd(u, up);
    if (g.degree() == 0) {
        out.factors.emplace_back(1, u.monic());
        out.constant = u.leading();
        return out;
    }
    UniPoly w = div_exact(u, g);
    UniPoly z = div_exact(up, g) - derivative(w);
    int mult = 1;
    while (w.degree() > 0) {
        UniPoly h = uni_gcd(w, z);
        if (h.degree() > 0) out.factors.emplace_back(mult, h);
        w = div_exact(w, h);
        z = div_exact(z, h) - derivative(w);
        ++mult;
    }

    UniPoly prod = UniPoly::constant(Rat(1));
    for (const auto& [m, f] : out.factors)
        for (int i = 0; i < m; ++i) prod = prod * f;
    UniPoly c = div_exact(u, prod);
    assert(c.degree() == 0);
    out.constant = c[0];
    return out;
}

namespace {

// Clear denominators and divide by the positive integer content; the sign
// pattern is unchanged, which is all root counting needs.
std::vector<Int> primitive_int_coeffs(const std::vector<Rat>& c) {
    Int den_lcm(1);
    for (const Rat& v : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> ints;
    ints.reserve(c.size());
    Int content(0);
    for (const Rat& v : c) {
        Int w = v.get_num() * (den_lcm / v.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w.get_mpz_t());
        ints.push_back(std::move(w));
    }
    if (content > 1)
        for (Int& w : ints) w /= content;
    return ints;
}

int int_poly_sign_at(const std::vector<Int>& c, const Rat& t) {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + Rat(*it);
    return sign_of(acc);
}

bool ext_less(const ExtBound& a, const ExtBound& b) {
    if (a.kind == ExtBound::NegInf) return b.kind != ExtBound::NegInf;
    if (a.kind == ExtBound::PosInf) return false;
    if (b.kind == ExtBound::PosInf) return true;
    if (b.kind == ExtBound::NegInf) return false;
    return a.value < b.value;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& u) {
    if (u.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(primitive_int_coeffs(u.coeffs()));
    UniPoly d = derivative(u);
    if (d.is_zero()) return;
    chain_.push_back(primitive_int_coeffs(d.coeffs()));
    UniPoly prev = u, cur = d;
    while (true) {
        UniPoly rem = divmod(prev, cur).second;
        if (rem.is_zero()) break;
        UniPoly next = -rem;
        chain_.push_back(primitive_int_coeffs(next.coeffs()));
        // Rebuild from the normalized coefficients so every later remainder
        // is taken against the rescaled polynomial.
        std::vector<Rat> rc;
        rc.reserve(chain_.back().size());
        for (const Int& w : chain_.back()) rc.emplace_back(w);
        prev = std::move(cur);
        cur = UniPoly(std::move(rc));
    }
}

int SturmChain::variations(const ExtBound& at) const {
    int var = 0, prev = 0;
    for (const auto& c : chain_) {
        int s;
        switch (at.kind) {
            case ExtBound::PosInf:
                s = sign_of(c.back());
                break;
            case ExtBound::NegInf:
                s = sign_of(c.back()) * ((c.size() - 1) % 2 == 1 ? -1 : 1);
                break;
            default:
                s = int_poly_sign_at(c, at.value);
        }
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long SturmChain::count(const ExtBound& lo, const ExtBound& hi) const {
    if (!ext_less(lo, hi)) throw std::invalid_argument("sturm count: need lo < hi");
    if (lo.kind == ExtBound::Finite && int_poly_sign_at(chain_[0], lo.value) == 0)
        throw EndpointIsRoot("sturm count: lower endpoint is a root");
    if (hi.kind == ExtBound::Finite && int_poly_sign_at(chain_[0], hi.value) == 0)
        throw EndpointIsRoot("sturm count: upper endpoint is a root");
    long n = variations(lo) - variations(hi);
    assert(n >= 0);
    return n;
}

long sturm_count(const UniPoly& u, const ExtBound& lo, const ExtBound& hi) {
    return SturmChain(u).count(lo, hi);
}

long sturm_count_all(const UniPoly& u) {
    return sturm_count(u, ExtBound::neg_inf(), ExtBound::pos_inf());
}

bool has_real_root(const UniPoly& u) {
    if (u.is_zero()) throw std::invalid_argument("has_real_root: zero polynomial");
    if (u.degree() == 0) return false;
    return sturm_count_all(u) > 0;
}

Rat cauchy_root_bound_pow2(const UniPoly& u) {
    assert(!u.is_zero() && u.degree() >= 1);
    Rat maxratio(0);
    for (int i = 0; i < u.degree(); ++i) {
        Rat r = abs(u[static_cast<size_t>(i)] / u.leading());
        if (r > maxratio) maxratio = r;
    }
    Rat bound = maxratio + 1;
    Rat b(1);
    while (b < bound) b *= 2;
    return b;
}

namespace {

struct Isolator {
    const UniPoly& u;
    SturmChain chain;

    explicit Isolator(const UniPoly& poly) : u(poly), chain(poly) {}

    long count(const Rat& lo, const Rat& hi) const {
        return chain.count(ExtBound::at(lo), ExtBound::at(hi));
    }

    // Symmetric interval around an exactly-hit root m, shrunk until it
    // isolates m alone with non-root endpoints and (for m != 0) stays on
    // one side of 0.
    RootInterval carve_exact_root(const Rat& m, Rat delta) const {
        for (int guard = 0; guard < 4096; ++guard) {
            Rat lo = m - delta, hi = m + delta;
            bool zero_ok = (m == 0) || sign_of(lo) == sign_of(hi);
            if (zero_ok && u.eval(lo) != 0 && u.eval(hi) != 0 && count(lo, hi) == 1)
                return {lo, hi};
            delta /= 2;
        }
        throw std::logic_error("root isolation: could not carve exact root");
    }

    // (lo, hi) holds exactly one simple root, endpoints non-root. Shrink
    // until both endpoints sit strictly on one side of 0, or the root is 0.
    RootInterval refine(Rat lo, Rat hi) const {
        for (int guard = 0; guard < 4096; ++guard) {
            bool straddles = lo < 0 && hi > 0;
            if (straddles && u.eval(Rat(0)) == 0) return {lo, hi};  // root is 0
            if (!straddles && sign_of(lo) != 0 && sign_of(hi) != 0) return {lo, hi};
            Rat m = straddles ? Rat(0) : (lo + hi) / 2;
            Rat vm = u.eval(m);
            if (vm == 0) {
                RootInterval iv = carve_exact_root(m, (hi - lo) / 4);
                lo = iv.lo;
                hi = iv.hi;
                continue;
            }
            if (sign_of(vm) != sign_of(u.eval(lo)))
                hi = m;
            else
                lo = m;
        }
        throw std::logic_error("root isolation: refinement did not converge");
    }
};

}  // namespace

std::vector<RootInterval> isolate_real_roots_squarefree(const UniPoly& u) {
    if (u.degree() < 1) return {};
    Isolator iso(u);
    Rat bound = cauchy_root_bound_pow2(u);

    std::vector<RootInterval> out;
    struct Piece {
        Rat lo, hi;
        long roots;
    };
    std::deque<Piece> work;
    work.push_back({-bound, bound, iso.count(-bound, bound)});
    while (!work.empty()) {
        Piece p = work.front();
        work.pop_front();
        if (p.roots == 0) continue;
        if (p.roots == 1) {
            out.push_back(iso.refine(p.lo, p.hi));
            continue;
        }
        Rat m = (p.lo < 0 && p.hi > 0 && u.eval(Rat(0)) != 0) ? Rat(0) : (p.lo + p.hi) / 2;
        if (u.eval(m) == 0) {
            RootInterval iv = iso.carve_exact_root(m, (p.hi - p.lo) / 4);
            out.push_back(iv);
            long left = iv.lo > p.lo ? iso.count(p.lo, iv.lo) : 0;
            long right = iv.hi < p.hi ? iso.count(iv.hi, p.hi) : 0;
            if (left > 0) work.push_back({p.lo, iv.lo, left});
            if (right > 0) work.push_back({iv.hi, p.hi, right});
        } else {
            long left = iso.count(p.lo, m);
            if (left > 0) work.push_back({p.lo, m, left});
            if (p.roots - left > 0) work.push_back({m, p.hi, p.roots - left});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

OddRootReport odd_order_real_roots(const UniPoly& u) {
    if (u.degree() < 1) throw std::invalid_argument("odd_order_real_roots: degree must be >= 1");
    UniPoly odd = yun_squarefree(u).odd_multiplicity_part();
    OddRootReport report;
    if (odd.degree() < 1) return report;
    report.intervals = isolate_real_roots_squarefree(odd);
    report.count = static_cast<long>(report.intervals.size());
    return report;
}

BezoutResult extended_gcd(const Int& p, const Int& q) {
    if (p == 0 && q == 0) throw std::invalid_argument("extended_gcd(0, 0)");
    BezoutResult res;
    if (p == 0) {
        res.g = abs(q);
        res.r = 0;
        res.s = sign_of(q);
        return res;
    }
    if (q == 0) {
        res.g = abs(p);
        res.r = sign_of(p);
        res.s = 0;
        return res;
    }
    Int g, r0, s0;
    mpz_gcdext(g.get_mpz_t(), r0.get_mpz_t(), s0.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());

    // All solutions are (r0 + k*q/g, s0 - k*p/g). Pick |s| minimal, then
    // |r| minimal; the residual tie (s vs -s with equal |r|) cannot occur.
    Int step = abs(p / g);
    Int s_mod;
    mpz_mod(s_mod.get_mpz_t(), s0.get_mpz_t(), step.get_mpz_t());  // in [0, step)
    Int cand_a = s_mod;
    Int cand_b = s_mod - step;
    auto r_for = [&](const Int& s) -> Int { return (g - s * q) / p; };
    Int s_best;
    if (abs(cand_a) < abs(cand_b))
        s_best = cand_a;
    else if (abs(cand_b) < abs(cand_a))
        s_best = cand_b;
    else
        s_best = abs(r_for(cand_a)) <= abs(r_for(cand_b)) ? cand_a : cand_b;
    res.g = g;
    res.s = s_best;
    res.r = r_for(s_best);
    return res;
}

}  // namespace curvebound
