#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nccr/polynomial.hpp"
#include "nccr/rep.hpp"

namespace nccr {

struct HypersurfaceRing {
    std::vector<std::string> variables;
    Polynomial f;  // nonzero nonunit
};

struct MatrixFactorization {
    HypersurfaceRing ring;
    PolyMatrix phi;
    PolyMatrix psi;
    int sign = 1;  // phi*psi = psi*phi = sign * f * I
};

struct ValidationWitness {
    std::string which;  // "phi*psi" or "psi*phi"
    size_t row, col;
    Polynomial found;
    Polynomial expected;
};

struct Validation {
    bool ok = false;
    int sign = 0;  // the sign that worked, when ok
    std::optional<ValidationWitness> witness;
};

// checks phi*psi = psi*phi = sign f I; when mf.sign is zero both signs are
// tried and the working one reported
Validation validate(const MatrixFactorization& mf);

// swapped pair (psi, phi); an involution
MatrixFactorization syzygy(const MatrixFactorization& mf);

// block construction over uv - f:
//   Phi = [ -phi  -u I ]    Psi = [ -psi  -u I ]
//         [  v I   psi ]          [  v I   phi ]
// output sign is minus the input sign
MatrixFactorization knorrer(const MatrixFactorization& mf, const std::string& u = "u",
                            const std::string& v = "v");

struct CokernelPresentation {
    HypersurfaceRing ring;
    // columns of phi, one generator list per relation column
    std::vector<std::vector<Polynomial>> columns;
};

CokernelPresentation cokernel_presentation(const MatrixFactorization& mf);

// cofactor expansion with memoization on column subsets; exact
Polynomial determinant(const PolyMatrix& m);

// transpose of the cofactor matrix, so m * adjugate(m) = det(m) * I
PolyMatrix adjugate(const PolyMatrix& m);

// exact quotient p / d when d divides p, nothing otherwise
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

// partner psi with phi * psi = psi * phi = +f I, solved through the adjugate
// when det(phi) = +-f^a; nothing when phi is not a factorization of f
std::optional<MatrixFactorization> solve_partner(const HypersurfaceRing& ring,
                                                 const PolyMatrix& phi);

std::string mf_to_json(const MatrixFactorization& mf);
MatrixFactorization mf_from_json(const std::string& text);
std::string cokernel_to_json(const CokernelPresentation& p);

}  // namespace nccr
