#include "nccr/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace nccr {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
    while (m) {
        mag_.push_back((uint32_t)(m & 0xffffffffULL));
        m >>= 32;
    }
}

BigInt::BigInt(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sg = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt acc;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
        acc = acc * BigInt(10) + BigInt(s[i] - '0');
    }
    *this = acc;
    if (sign_ != 0) sign_ = sg;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back((uint32_t)(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) r.push_back((uint32_t)carry);
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
        if (s < 0) {
            s += ((int64_t)1 << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back((uint32_t)s);
    }
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = (uint64_t)a[i] * b[j] + r[i + j] + carry;
            r[i + j] = (uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = (uint64_t)r[k] + carry;
            r[k] = (uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.sign_ = sign_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.sign_ = o.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

size_t BigInt::bits() const {
    if (mag_.empty()) return 0;
    size_t b = (mag_.size() - 1) * 32;
    uint32_t top = mag_.back();
    while (top) {
        ++b;
        top >>= 1;
    }
    return b;
}

bool BigInt::bit(size_t i) const {
    size_t limb = i / 32, off = i % 32;
    if (limb >= mag_.size()) return false;
    return (mag_[limb] >> off) & 1u;
}

void BigInt::set_bit(size_t i) {
    size_t limb = i / 32, off = i % 32;
    if (limb >= mag_.size()) mag_.resize(limb + 1, 0);
    mag_[limb] |= (1u << off);
    sign_ = 1;
}

void BigInt::shift_left_one_inplace() {
    uint32_t carry = 0;
    for (auto& limb : mag_) {
        uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) mag_.push_back(carry);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    q = BigInt();
    r = BigInt();
    if (a.sign_ == 0) return;
    // long division on magnitudes, one bit at a time
    BigInt babs = b.abs();
    size_t nb = a.bits();
    for (size_t i = nb; i-- > 0;) {
        r.shift_left_one_inplace();
        if (a.bit(i)) {
            if (r.mag_.empty()) r.mag_.push_back(0);
            r.mag_[0] |= 1u;
            r.sign_ = 1;
        }
        r.trim();
        if (cmp_mag(r.mag_, babs.mag_) >= 0) {
            r.mag_ = sub_mag(r.mag_, babs.mag_);
            r.trim();
            q.set_bit(i);
        }
    }
    q.trim();
    r.trim();
    // truncated division: quotient sign = product of signs, remainder follows dividend
    if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_;
    if (!r.mag_.empty()) r.sign_ = a.sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a0, const BigInt& b0) {
    // binary gcd; avoids repeated long division
    BigInt a = a0.abs(), b = b0.abs();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto shift_right_one = [](BigInt& x) {
        uint32_t carry = 0;
        for (size_t i = x.mag_.size(); i-- > 0;) {
            uint32_t next = x.mag_[i] & 1u;
            x.mag_[i] = (x.mag_[i] >> 1) | (carry << 31);
            carry = next;
        }
        x.trim();
    };
    int shared = 0;
    while (!a.is_zero() && !b.is_zero() && !a.bit(0) && !b.bit(0)) {
        shift_right_one(a);
        shift_right_one(b);
        ++shared;
    }
    while (!a.is_zero()) {
        while (!a.is_zero() && !a.bit(0)) shift_right_one(a);
        while (!b.is_zero() && !b.bit(0)) shift_right_one(b);
        if (a.is_zero() || b.is_zero()) break;
        if (cmp_mag(a.mag_, b.mag_) >= 0) {
            a.mag_ = sub_mag(a.mag_, b.mag_);
            a.trim();
        } else {
            b.mag_ = sub_mag(b.mag_, a.mag_);
            b.trim();
        }
    }
    BigInt g = a.is_zero() ? b : a;
    for (int i = 0; i < shared; ++i) g.shift_left_one_inplace();
    g.trim();
    if (!g.mag_.empty()) g.sign_ = 1;
    return g;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    BigInt cur = abs();
    BigInt base(1000000000LL);
    std::vector<uint32_t> chunks;
    while (!cur.is_zero()) {
        BigInt q, r;
        divmod(cur, base, q, r);
        chunks.push_back(r.is_zero() ? 0u : r.mag_[0]);
        cur = q;
    }
    out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string p = std::to_string(chunks[i]);
        out += std::string(9 - p.size(), '0') + p;
    }
    if (sign_ < 0) out = "-" + out;
    return out;
}

bool BigInt::fits_ll() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
}

long long BigInt::to_ll() const {
    unsigned long long m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    return sign_ >= 0 ? (long long)m : -(long long)m;
}

double BigInt::to_double() const {
    double v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + (double)mag_[i];
    return sign_ < 0 ? -v : v;
}

}  // namespace nccr
