#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nccr {

// Arbitrary-precision signed integer.  Little-endian 32-bit limbs, sign
// carried separately; zero has empty limb vector and sign 0.  Sizes in this
// project stay small (a few hundred bits), so the schoolbook algorithms and
// bit-shift long division are deliberate.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal) { return BigInt(decimal); }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncated toward zero
    BigInt operator%(const BigInt& o) const;  // sign follows dividend

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    int cmp(const BigInt& o) const;

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

    std::string to_string() const;

    // Fits in long long?  (used for fast paths and diagnostics)
    bool fits_ll() const;
    long long to_ll() const;

    double to_double() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    size_t bits() const;
    bool bit(size_t i) const;
    void set_bit(size_t i);
    void shift_left_one_inplace();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }

}  // namespace nccr
