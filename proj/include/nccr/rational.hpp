#pragma once

#include <string>

#include "nccr/bigint.hpp"

namespace nccr {

// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    // parses "p", "p/q" with optional sign
    static Rational parse(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }

    std::string to_string() const;
    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_;
    BigInt den_;  // > 0
    void normalize();
};

}  // namespace nccr
