#pragma once

#include <map>
#include <string>
#include <vector>

#include "nccr/cyclotomic.hpp"
#include "nccr/polynomial.hpp"

namespace nccr {

using CycPolynomial = PolynomialT<Cyclotomic>;

// Skew group ring C[x_1..x_n]#Z_r truncated at a fixed total degree.  The
// generator g acts on a monomial of weight w (= sum a_i p_i mod r) by
// eps_r^{-w}, the function action matching the weight-module convention.
struct SkewContext {
    int r;
    std::vector<long long> weights;
    std::vector<std::string> variables;
    int truncation_degree = 10;

    long long weight_of(const Monomial& m) const;
    // g^k acting on a polynomial
    CycPolynomial act(int k, const CycPolynomial& f) const;
};

// finite sum of f (x) g^k terms, keyed by the group exponent
class SkewElement {
public:
    SkewElement() = default;
    SkewElement(CycPolynomial f, int group_exp, const SkewContext& ctx);

    static SkewElement ring_element(const CycPolynomial& f, const SkewContext& ctx) {
        return SkewElement(f, 0, ctx);
    }
    static SkewElement group_element(int k, const SkewContext& ctx) {
        return SkewElement(CycPolynomial(Cyclotomic(1)), k, ctx);
    }
    static SkewElement one(const SkewContext& ctx) { return group_element(0, ctx); }

    const std::map<int, CycPolynomial>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    void add_part(int k, const CycPolynomial& f);

    SkewElement operator+(const SkewElement& o) const;
    SkewElement operator-(const SkewElement& o) const;
    bool operator==(const SkewElement& o) const { return parts_ == o.parts_; }

    std::string to_string() const;

private:
    std::map<int, CycPolynomial> parts_;
};

struct SkewProduct {
    SkewElement value;
    bool overflow = false;  // true when truncation discarded terms
};

// (f1 (x) g1)(f2 (x) g2) = (f1 * g1(f2)) (x) g1 g2, extended bilinearly and
// truncated above the context degree
SkewProduct skew_multiply(const SkewContext& ctx, const SkewElement& x, const SkewElement& y);

}  // namespace nccr
