#include "nccr/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace nccr {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool peek(char c) {
        ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    " in '" + s + "': " + why);
    }

    Polynomial expr() {
        Polynomial acc;
        bool neg = eat('-');
        acc = term();
        if (neg) acc = -acc;
        while (true) {
            ws();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    int integer() {
        ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        size_t st = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (st == i) fail("expected integer");
        int v = std::stoi(s.substr(st, i - st));
        return neg ? -v : v;
    }

    Polynomial factor() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        Polynomial base;
        if (s[i] == '(') {
            ++i;
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit((unsigned char)s[i])) {
            size_t st = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            std::string numer = s.substr(st, i - st);
            std::string denom;
            // a '/' directly after digits is a rational literal
            if (i < s.size() && s[i] == '/') {
                ++i;
                size_t ds = i;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
                if (ds == i) fail("expected denominator");
                denom = s.substr(ds, i - ds);
            }
            base = Polynomial(denom.empty() ? Rational(BigInt(numer), BigInt(1))
                                            : Rational(BigInt(numer), BigInt(denom)));
        } else if (std::isalpha((unsigned char)s[i]) || s[i] == '_') {
            size_t st = i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
            base = Polynomial::variable(s.substr(st, i - st));
        } else {
            fail("unexpected character");
        }
        ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            int e = integer();
            if (e < 0) {
                // only pure monomial factors may carry negative powers
                if (base.term_count() != 1 || !base.terms().begin()->second.is_one())
                    fail("negative exponent on non-monomial");
                return Polynomial(Rational(1), base.terms().begin()->first.pow(e));
            }
            Polynomial p{Rational(1)};
            for (int k = 0; k < e; ++k) p *= base;
            return p;
        }
        return base;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& s) {
    Parser p(s);
    Polynomial r = p.expr();
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return r;
}

}  // namespace nccr
