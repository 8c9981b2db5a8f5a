#include "curvebound/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace curvebound {

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    SparsePoly run() {
        SparsePoly p;
        try {
            p = expression();
        } catch (const DegreeLimitExceeded& e) {
            throw ParseError(ParseErrorKind::DegreeLimit, pos_, e.what());
        }
        skip_ws();
        if (pos_ != src_.size()) fail("expected '+', '-' or end of input");
        if (p.is_zero())
            throw ParseError(ParseErrorKind::ZeroPolynomial, src_.size(),
                             "all terms cancel: the zero polynomial is not accepted");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
        throw ParseError(ParseErrorKind::Syntax, pos_, "syntax error: " + expected + ", got " + got);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    SparsePoly expression() {
        int sign = accept('-') ? -1 : (accept('+'), 1);
        SparsePoly acc = term();
        if (sign < 0) acc = acc.scaled(Rat(-1));
        while (true) {
            skip_ws();
            if (accept('+')) {
                int s = accept('-') ? -1 : 1;
                SparsePoly t = term();
                acc = s < 0 ? acc - t : acc + t;
            } else if (accept('-')) {
                int s = accept('-') ? -1 : 1;
                SparsePoly t = term();
                acc = s < 0 ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    SparsePoly factor() {
        SparsePoly b = base();
        skip_ws();
        if (!accept('^')) return b;
        unsigned long e = exponent();
        return b.pow(e);
    }

    unsigned long exponent() {
        skip_ws();
        size_t at = pos_;
        if (pos_ < src_.size() && src_[pos_] == '-')
            throw ParseError(ParseErrorKind::NegativeExponent, at, "exponents must be nonnegative");
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected an unsigned integer exponent");
        std::string digits = read_digits();
        if (pos_ < src_.size() && src_[pos_] == '.')
            throw ParseError(ParseErrorKind::NonIntegerExponent, at, "exponents must be integers");
        if (digits.size() > 5)
            throw ParseError(ParseErrorKind::DegreeLimit, at, "exponent exceeds the degree limit");
        unsigned long e = std::stoul(digits);
        if (e > static_cast<unsigned long>(kMaxTotalDegree))
            throw ParseError(ParseErrorKind::DegreeLimit, at, "exponent exceeds the degree limit");
        return e;
    }

    SparsePoly base() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected a literal, 'x', 'y' or '('");
        char c = src_[pos_];
        if (c == '(') {
            if (++depth_ > 256)
                throw ParseError(ParseErrorKind::Syntax, pos_, "expression nested too deeply");
            ++pos_;
            SparsePoly inner = expression();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            --depth_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return SparsePoly::monomial(Rat(1), 1, 0);
        }
        if (c == 'y') {
            ++pos_;
            return SparsePoly::monomial(Rat(1), 0, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return SparsePoly::constant(literal());
        fail("expected a literal, 'x', 'y' or '('");
    }

    Rat literal() {
        Rat num = number();
        skip_ws();
        // A '/' directly after a number is fraction-literal notation; there
        // is no division operator in the grammar.
        if (accept('/')) {
            skip_ws();
            size_t at = pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail("expected a denominator after '/'");
            Rat den = number();
            if (den == 0)
                throw ParseError(ParseErrorKind::Syntax, at, "zero denominator in fraction literal");
            return num / den;
        }
        return num;
    }

    Rat number() {
        std::string digits = read_digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail("expected digits after the decimal point");
            std::string frac = read_digits();
            Int n(digits + frac, 10);
            Rat r(n, int_pow(Int(10), frac.size()));
            r.canonicalize();
            return r;
        }
        return Rat(Int(digits, 10));
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            out.push_back(src_[pos_++]);
        return out;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace

SparsePoly parse_polynomial(const std::string& source) {
    return Parser(source).run();
}

SparsePoly parse_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
    std::ostringstream joined;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        joined << line << ' ';
    }
    return parse_polynomial(joined.str());
}

}  // namespace curvebound
