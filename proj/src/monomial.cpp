#include "nccr/monomial.hpp"

#include <stdexcept>

namespace nccr {

Monomial::Monomial(const std::string& var, int exp) {
    if (var.empty()) throw std::invalid_argument("Monomial: empty variable name");
    if (exp != 0) exp_[var] = exp;
}

int Monomial::exponent(const std::string& var) const {
    auto it = exp_.find(var);
    return it == exp_.end() ? 0 : it->second;
}

void Monomial::set_exponent(const std::string& var, int e) {
    if (e == 0)
        exp_.erase(var);
    else
        exp_[var] = e;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : exp_) d += e;
    return d;
}

bool Monomial::all_nonnegative() const {
    for (auto& [v, e] : exp_)
        if (e < 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (auto& [v, e] : o.exp_) {
        int ne = r.exponent(v) + e;
        r.set_exponent(v, ne);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.pow(-1); }

Monomial Monomial::pow(int k) const {
    Monomial r;
    for (auto& [v, e] : exp_) {
        if (e * k != 0) r.exp_[v] = e * k;
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (auto& [v, e] : o.exp_)
        if (exponent(v) < e) return false;
    return true;
}

bool Monomial::operator<(const Monomial& o) const {
    // lexicographic: the higher power of the earlier variable sorts first, so
    // ascending order reads x^2, x*y, x, y^2, 1
    auto it = exp_.begin(), jt = o.exp_.begin();
    while (it != exp_.end() || jt != o.exp_.end()) {
        std::string v;
        if (it == exp_.end())
            v = jt->first;
        else if (jt == o.exp_.end())
            v = it->first;
        else
            v = std::min(it->first, jt->first);
        int ea = (it != exp_.end() && it->first == v) ? it->second : 0;
        int eb = (jt != o.exp_.end() && jt->first == v) ? jt->second : 0;
        if (ea != eb) return ea > eb;
        if (it != exp_.end() && it->first == v) ++it;
        if (jt != o.exp_.end() && jt->first == v) ++jt;
    }
    return false;
}

Monomial Monomial::substitute(const std::map<std::string, Monomial>& values) const {
    Monomial r;
    for (auto& [v, e] : exp_) {
        auto it = values.find(v);
        if (it == values.end())
            r = r * Monomial(v).pow(e);
        else
            r = r * it->second.pow(e);
    }
    return r;
}

std::string Monomial::to_string() const {
    if (exp_.empty()) return "1";
    std::string out;
    for (auto& [v, e] : exp_) {
        if (!out.empty()) out += "*";
        out += v;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

Monomial Monomial::parse(const std::string& s) {
    Monomial r;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (i < s.size() && s[i] == '1' && i + 1 == s.size()) return r;
    while (i < s.size()) {
        skip_ws();
        size_t start = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        if (i == start) throw std::invalid_argument("Monomial: cannot parse '" + s + "'");
        std::string var = s.substr(start, i - start);
        int e = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip_ws();
            bool neg = false;
            if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                neg = s[i] == '-';
                ++i;
            }
            size_t ds = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            if (i == ds) throw std::invalid_argument("Monomial: bad exponent in '" + s + "'");
            e = std::stoi(s.substr(ds, i - ds));
            if (neg) e = -e;
        }
        r.set_exponent(var, r.exponent(var) + e);
        skip_ws();
        if (i < s.size()) {
            if (s[i] != '*') throw std::invalid_argument("Monomial: expected '*' in '" + s + "'");
            ++i;
        }
    }
    return r;
}

}  // namespace nccr
