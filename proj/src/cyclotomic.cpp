#include "nccr/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace nccr {

namespace {

// exact division of univariate polynomials over Q; b must be monic and divide a
std::vector<Rational> exact_div(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    int db = (int)b.size() - 1;
    if (a.empty()) return {};
    int da = (int)a.size() - 1;
    if (da < db) throw std::logic_error("cyclotomic: non-exact division");
    std::vector<Rational> q(da - db + 1, Rational(0));
    for (int k = da - db; k >= 0; --k) {
        Rational c = a[k + db];
        if (c.is_zero()) continue;
        q[k] = c;
        for (int j = 0; j <= db; ++j) a[k + j] -= c * b[j];
    }
    for (auto& c : a)
        if (!c.is_zero()) throw std::logic_error("cyclotomic: division remainder");
    return q;
}

}  // namespace

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<Rational>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    // x^n - 1 divided by all Phi_d, d | n, d < n
    std::vector<Rational> num(n + 1, Rational(0));
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    return memo.emplace(n, std::move(num)).first->second;
}

void Cyclotomic::reduce() {
    const auto& phi = cyclotomic_polynomial(order_);
    int deg_phi = (int)phi.size() - 1;
    // divide the coefficient polynomial by the monic Phi_n, keep the remainder
    for (int k = (int)coeff_.size() - 1; k >= deg_phi; --k) {
        Rational c = coeff_[k];
        if (c.is_zero()) continue;
        for (int j = 0; j <= deg_phi; ++j) coeff_[k - deg_phi + j] -= c * phi[j];
    }
    coeff_.resize(order_, Rational(0));
}

void Cyclotomic::shrink_order() {
    if (order_ == 1) return;
    for (size_t k = 1; k < coeff_.size(); ++k)
        if (!coeff_[k].is_zero()) return;
    Rational v = coeff_[0];
    order_ = 1;
    coeff_.assign(1, v);
}

Cyclotomic Cyclotomic::root_of_unity(int n, int k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
    Cyclotomic z;
    z.order_ = n;
    z.coeff_.assign(n, Rational(0));
    k %= n;
    if (k < 0) k += n;
    z.coeff_[k] = Rational(1);
    z.reduce();
    z.shrink_order();
    return z;
}

Cyclotomic Cyclotomic::zero_of_order(int n) {
    Cyclotomic z;
    z.order_ = n;
    z.coeff_.assign(n, Rational(0));
    z.shrink_order();
    return z;
}

bool Cyclotomic::is_zero() const {
    for (auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t k = 1; k < coeff_.size(); ++k)
        if (!coeff_[k].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::logic_error("Cyclotomic: not a rational value");
    return coeff_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
    if (m % order_ != 0) throw std::invalid_argument("Cyclotomic::embed: not a multiple of order");
    if (m == order_) return *this;
    Cyclotomic r;
    r.order_ = m;
    r.coeff_.assign(m, Rational(0));
    int stride = m / order_;
    for (int k = 0; k < order_; ++k)
        if (!coeff_[k].is_zero()) r.coeff_[k * stride] += coeff_[k];
    r.reduce();
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    int m = std::lcm(order_, o.order_);
    Cyclotomic a = embed(m), b = o.embed(m);
    for (int k = 0; k < (int)a.coeff_.size(); ++k) a.coeff_[k] += b.coeff_[k];
    a.reduce();
    a.shrink_order();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int m = std::lcm(order_, o.order_);
    Cyclotomic a = embed(m), b = o.embed(m);
    Cyclotomic r;
    r.order_ = m;
    r.coeff_.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        if (a.coeff_[i].is_zero()) continue;
        for (int j = 0; j < m; ++j) {
            if (b.coeff_[j].is_zero()) continue;
            r.coeff_[(i + j) % m] += a.coeff_[i] * b.coeff_[j];
        }
    }
    r.reduce();
    r.shrink_order();
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic r;
    r.order_ = order_;
    r.coeff_.assign(order_, Rational(0));
    for (int k = 0; k < order_; ++k)
        if (!coeff_[k].is_zero()) r.coeff_[(order_ - k) % order_] += coeff_[k];
    r.reduce();
    r.shrink_order();
    return r;
}

Cyclotomic Cyclotomic::scalar_mul(const Rational& s) const {
    Cyclotomic r = *this;
    for (auto& c : r.coeff_) c *= s;
    r.shrink_order();
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    int m = std::lcm(order_, o.order_);
    return embed(m).coeff_ == o.embed(m).coeff_;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0, 0);
    const double two_pi = 6.283185307179586476925286766559;
    for (int k = 0; k < order_; ++k) {
        if (coeff_[k].is_zero()) continue;
        double ang = two_pi * k / order_;
        acc += coeff_[k].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k < order_; ++k) {
        if (coeff_[k].is_zero()) continue;
        std::string cs = coeff_[k].to_string();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (k == 0) {
            out += cs;
        } else {
            std::string zs = "z" + std::to_string(order_) + (k == 1 ? "" : "^" + std::to_string(k));
            out += (cs == "1") ? zs : cs + "*" + zs;
        }
    }
    return out;
}

}  // namespace nccr
