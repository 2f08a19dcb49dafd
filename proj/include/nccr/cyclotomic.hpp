#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nccr/rational.hpp"

namespace nccr {

// Element of Q(zeta_n), stored as a coefficient vector on powers zeta^0..zeta^{n-1}
// and kept in canonical form: the coefficient polynomial reduced modulo the
// n-th cyclotomic polynomial Phi_n.  Two values equal as complex numbers have
// identical canonical forms, so equality is coefficient comparison.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeff_(1, Rational(0)) {}
    Cyclotomic(long long v) : order_(1), coeff_(1, Rational(v)) {}
    explicit Cyclotomic(Rational r) : order_(1), coeff_{std::move(r)} {}

    // zeta_n^k
    static Cyclotomic root_of_unity(int n, int k);
    static Cyclotomic zero_of_order(int n);

    int order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool is_zero() const;
    bool is_one() const { return is_rational() && rational_value().is_one(); }
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic conj() const;  // zeta -> zeta^{-1}
    Cyclotomic scalar_mul(const Rational& r) const;

    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // re-express in Q(zeta_m); m must be a multiple of order()
    Cyclotomic embed(int m) const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

    // n-th cyclotomic polynomial as dense coefficient vector (degree phi(n)),
    // computed by exact division of x^n - 1; memoized
    static const std::vector<Rational>& cyclotomic_polynomial(int n);

private:
    int order_;
    std::vector<Rational> coeff_;  // length order_, degree < phi(order_) after reduce
    void reduce();
    void shrink_order();
};

}  // namespace nccr
