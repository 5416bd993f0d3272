#pragma once

// Small recursive-descent parser for polynomial expressions over named
// variables, used to load human-readable relation fixtures.  Grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/')? factor)*    (juxtaposition multiplies)
//   factor := '-'* atom ('^' exponent)?
//   atom   := integer | identifier | '(' expr ')'
//   exponent := integer | '(' integer ('/' integer)? ')'
//
// Division requires a constant divisor.  Negative exponents require a
// monomial base; fractional exponents additionally require a monomial whose
// scaled exponents stay integral at the requested denominator (in practice:
// w0^(1/2) and friends).  The result is an exact rational Laurent polynomial
// in the given variable list.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace lgm {

struct ExprParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& vars, long denom = 1)
        : text_(text), vars_(vars), denom_(denom) {}

    PolyQ parse() {
        PolyQ result = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ExprParseError("trailing input at position " + std::to_string(pos_));
        return result;
    }

private:
    PolyQ parse_expr() {
        PolyQ acc = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') { ++pos_; acc = acc + parse_term(); }
            else if (peek() == '-') { ++pos_; acc = acc - parse_term(); }
            else return acc;
        }
    }

    PolyQ parse_term() {
        PolyQ acc = parse_factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') { ++pos_; acc = acc * parse_factor(); }
            else if (c == '/') {
                ++pos_;
                PolyQ d = parse_factor();
                if (d.terms.size() != 1 || d.terms.begin()->first != Expv(d.vars.size(), 0))
                    throw ExprParseError("division requires a constant divisor");
                acc = acc * Rat(Rat(1) / d.terms.begin()->second);
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c)))
                acc = acc * parse_factor();
            else return acc;
        }
    }

    PolyQ parse_factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-') { neg = !neg; ++pos_; skip_ws(); }
        PolyQ base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            Rat e = parse_exponent();
            base = apply_pow(base, e);
        }
        if (neg) base = -base;
        return base;
    }

    Rat parse_exponent() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            long n = parse_integer();
            long d = 1;
            skip_ws();
            if (peek() == '/') { ++pos_; d = parse_integer(); }
            skip_ws();
            if (peek() != ')') throw ExprParseError("expected ')' in exponent");
            ++pos_;
            if (d == 0) throw ExprParseError("zero exponent denominator");
            Rat e(n, d);
            e.canonicalize();
            return e;
        }
        return Rat(parse_integer());
    }

    PolyQ apply_pow(const PolyQ& base, const Rat& e) {
        if (e.get_den() == 1) {
            long n = e.get_num().get_si();
            if (n >= 0) {
                PolyQ p = PolyQ::constant(base.vars, base.denom, Rat(1));
                for (long i = 0; i < n; ++i) p = p * base;
                return p;
            }
            return base.pow(n);  // requires a monomial base
        }
        if (base.terms.size() != 1)
            throw ExprParseError("fractional exponent on a non-monomial");
        const auto& [ex, c] = *base.terms.begin();
        if (c != 1) throw ExprParseError("fractional exponent on a non-unit coefficient");
        Expv er(ex.size());
        for (std::size_t i = 0; i < ex.size(); ++i) {
            Rat scaled = Rat(ex[i]) * e;
            scaled.canonicalize();
            if (scaled.get_den() != 1)
                throw ExprParseError("fractional exponent not representable at this denom");
            er[i] = static_cast<int>(scaled.get_num().get_si());
        }
        return PolyQ::monomial(base.vars, base.denom, er, Rat(1));
    }

    PolyQ parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            PolyQ inner = parse_expr();
            skip_ws();
            if (peek() != ')') throw ExprParseError("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return PolyQ::constant(vars_, denom_, Rat(parse_integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            return PolyQ::variable(vars_, denom_, name);
        }
        throw ExprParseError("unexpected character at position " + std::to_string(pos_));
    }

    long parse_integer() {
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ExprParseError("expected integer");
        long v = std::stol(text_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    long denom_ = 1;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Parses `text` into an exact polynomial in the variables `vars`; `denom` is
// the exponent denominator granted to vars[0].
inline PolyQ parse_poly_expr(const std::string& text,
                             const std::vector<std::string>& vars, long denom = 1) {
    return detail::ExprParser(text, vars, denom).parse();
}

}  // namespace lgm
