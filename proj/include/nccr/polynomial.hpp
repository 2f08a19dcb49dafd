#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nccr/monomial.hpp"
#include "nccr/rational.hpp"

namespace nccr {

// Polynomial with exact coefficients, stored as monomial -> coefficient with
// no zero coefficients.  Coefficient ring is a template parameter: Rational
// for almost everything, Cyclotomic for the skew group ring.  Negative
// exponents are tolerated by the container (transitions produce them); the
// operations that require genuine polynomials check all_nonnegative().
template <typename C>
class PolynomialT {
public:
    PolynomialT() = default;
    explicit PolynomialT(C c) {
        if (!c.is_zero()) terms_[Monomial()] = std::move(c);
    }
    PolynomialT(C c, Monomial m) {
        if (!c.is_zero()) terms_[std::move(m)] = std::move(c);
    }
    explicit PolynomialT(const Monomial& m) : PolynomialT(C(1), m) {}

    static PolynomialT variable(const std::string& v) { return PolynomialT(C(1), Monomial(v)); }

    const std::map<Monomial, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
    }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    bool all_exponents_nonnegative() const {
        for (auto& [m, c] : terms_)
            if (!m.all_nonnegative()) return false;
        return true;
    }

    void add_term(const Monomial& m, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PolynomialT operator-() const {
        PolynomialT r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    PolynomialT operator+(const PolynomialT& o) const {
        PolynomialT r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    PolynomialT operator-(const PolynomialT& o) const {
        PolynomialT r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    PolynomialT operator*(const PolynomialT& o) const {
        PolynomialT r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    PolynomialT scalar_mul(const C& c) const {
        PolynomialT r;
        if (c.is_zero()) return r;
        for (auto& [m, k] : terms_) r.add_term(m, k * c);
        return r;
    }
    PolynomialT& operator+=(const PolynomialT& o) { *this = *this + o; return *this; }
    PolynomialT& operator-=(const PolynomialT& o) { *this = *this - o; return *this; }
    PolynomialT& operator*=(const PolynomialT& o) { *this = *this * o; return *this; }

    bool operator==(const PolynomialT& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolynomialT& o) const { return !(*this == o); }

    // drop every term of total degree > cap; returns true if anything dropped
    bool truncate_above(int cap) {
        bool dropped = false;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.total_degree() > cap) {
                it = terms_.erase(it);
                dropped = true;
            } else {
                ++it;
            }
        }
        return dropped;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // canonical print order: lexicographic (map order already is)
        std::vector<const std::pair<const Monomial, C>*> ts;
        for (auto& t : terms_) ts.push_back(&t);
        std::string out;
        bool first = true;
        for (auto* t : ts) {
            std::string cs = t->second.to_string();
            // compound coefficients (cyclotomic sums) keep their own signs
            bool compound = cs.find(' ') != std::string::npos;
            if (compound) {
                out += first ? "" : " + ";
                out += t->first.is_one() ? "(" + cs + ")" : "(" + cs + ")*" + t->first.to_string();
                first = false;
                continue;
            }
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) out += "-", cs = cs.substr(1);
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            first = false;
            if (t->first.is_one())
                out += cs;
            else if (cs == "1")
                out += t->first.to_string();
            else
                out += cs + "*" + t->first.to_string();
        }
        return out;
    }

private:
    std::map<Monomial, C> terms_;
};

using Polynomial = PolynomialT<Rational>;

// Parses "a*b - c^3", "2/3*x^2*y", "-z", "(x+y)*(x-y)".  Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*  with '^' integer powers on factors
//   factor := rational | identifier | '(' expr ')'
Polynomial parse_polynomial(const std::string& s);

}  // namespace nccr
