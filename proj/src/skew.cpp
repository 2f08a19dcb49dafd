#include "nccr/skew.hpp"

#include <algorithm>
#include <stdexcept>

namespace nccr {

long long SkewContext::weight_of(const Monomial& m) const {
    long long s = 0;
    for (auto& [v, e] : m.exponents()) {
        auto it = std::find(variables.begin(), variables.end(), v);
        if (it == variables.end()) throw std::invalid_argument("skew: unknown variable " + v);
        s += weights[it - variables.begin()] * e;
    }
    return ((s % r) + r) % r;
}

CycPolynomial SkewContext::act(int k, const CycPolynomial& f) const {
    CycPolynomial out;
    for (auto& [m, c] : f.terms()) {
        long long w = weight_of(m);
        Cyclotomic eps = Cyclotomic::root_of_unity(r, (int)(((-k * w) % r + r) % r));
        out.add_term(m, c * eps);
    }
    return out;
}

SkewElement::SkewElement(CycPolynomial f, int group_exp, const SkewContext& ctx) {
    int k = ((group_exp % ctx.r) + ctx.r) % ctx.r;
    if (!f.is_zero()) parts_[k] = std::move(f);
}

void SkewElement::add_part(int k, const CycPolynomial& f) {
    if (f.is_zero()) return;
    auto it = parts_.find(k);
    if (it == parts_.end()) {
        parts_[k] = f;
    } else {
        it->second += f;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
    SkewElement r = *this;
    for (auto& [k, f] : o.parts_) r.add_part(k, f);
    return r;
}

SkewElement SkewElement::operator-(const SkewElement& o) const {
    SkewElement r = *this;
    for (auto& [k, f] : o.parts_) r.add_part(k, -f);
    return r;
}

std::string SkewElement::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (auto& [k, f] : parts_) {
        if (!out.empty()) out += " + ";
        out += "(" + f.to_string() + ") (x) g^" + std::to_string(k);
    }
    return out;
}

SkewProduct skew_multiply(const SkewContext& ctx, const SkewElement& x, const SkewElement& y) {
    SkewProduct res;
    for (auto& [k1, f1] : x.parts())
        for (auto& [k2, f2] : y.parts()) {
            CycPolynomial prod = f1 * ctx.act(k1, f2);
            if (prod.truncate_above(ctx.truncation_degree)) res.overflow = true;
            res.value.add_part((k1 + k2) % ctx.r, prod);
        }
    return res;
}

}  // namespace nccr
