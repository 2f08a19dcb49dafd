#pragma once

#include <map>
#include <string>
#include <vector>

namespace nccr {

// Laurent monomial: variable name -> integer exponent, zero exponents never
// stored.  The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::string& var, int exp = 1);
    static Monomial one() { return Monomial(); }

    const std::map<std::string, int>& exponents() const { return exp_; }
    int exponent(const std::string& var) const;
    void set_exponent(const std::string& var, int e);

    bool is_one() const { return exp_.empty(); }
    int total_degree() const;
    bool all_nonnegative() const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // Laurent: always defined
    Monomial pow(int k) const;
    Monomial inverse() const { return pow(-1); }

    // componentwise <= (both assumed nonnegative): o divides *this
    bool divisible_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    // lexicographic on variable names, higher exponent of earlier variable first
    bool operator<(const Monomial& o) const;

    // substitute each variable by a monomial (variables absent from the map
    // are kept); exponents multiply through
    Monomial substitute(const std::map<std::string, Monomial>& values) const;

    std::string to_string() const;  // "a*b^2", "x^-1*y", "1"
    static Monomial parse(const std::string& s);

private:
    std::map<std::string, int> exp_;
};

}  // namespace nccr
