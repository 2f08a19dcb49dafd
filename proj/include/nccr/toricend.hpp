#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nccr/hilbert.hpp"
#include "nccr/monomial.hpp"
#include "nccr/quiver.hpp"

namespace nccr {

// Cyclic 1/r(a_1..a_n) acting diagonally on x_1..x_n, or a one-parameter
// torus with integer weights.  Weight of a monomial x^p is sum a_i p_i, taken
// mod r in the cyclic case; S_i is spanned by the weight-i monomials.
struct AbelianAction {
    enum class Kind { Cyclic, Torus };
    Kind kind;
    int r = 0;                       // cyclic order
    std::vector<long long> weights;  // cyclic: 0 <= a_i < r; torus: signed
    std::vector<std::string> variables;

    static AbelianAction cyclic(int r, std::vector<long long> weights,
                                std::vector<std::string> variables = {});
    static AbelianAction torus(std::vector<long long> weights,
                               std::vector<std::string> variables = {});

    long long weight_of(const Monomial& m) const;  // reduced mod r when cyclic
    bool gorenstein() const;  // cyclic: sum = 0 mod r; torus: sum = 0
};

struct GeneratorList {
    std::vector<Monomial> generators;  // sorted
    bool certified = false;
    int scanned_degree = 0;
    int max_generator_degree = 0;
};

// Hilbert basis of the weight-zero monomial monoid.  Throws when the degree
// bound is exhausted before the doubling certificate closes.
GeneratorList invariant_ring_generators(const AbelianAction& act, int degree_bound,
                                        bool parallel = true);

// minimal monomial generators of S_i over S_0 (cyclic actions only)
GeneratorList module_generators(const AbelianAction& act, int weight_class, int degree_bound,
                                bool parallel = true);

// Quiver of End(S_0 + ... + S_{r-1}): vertices are the weight classes, one
// arrow i -> i + a_l per variable x_l (the irreducible monomial maps; every
// higher-degree monomial map factors through single variables).
Quiver endo_quiver(const AbelianAction& act, int degree_bound);

// Quiver of End of a proper sum of weight modules: arrows i -> j are the
// generators of Hom(S_i, S_j) = S_{j-i} that do not factor through any kept
// intermediate class with both factors nonconstant.
Quiver endo_quiver_summands(const AbelianAction& act, const std::vector<int>& kept_classes,
                            int degree_bound);

// oracle used by tests: module generators of weight j-i filtered by the
// factor-through check against the full vertex set
std::vector<Monomial> irreducible_hom_generators(const AbelianAction& act, int from_class,
                                                 int to_class, int degree_bound);

}  // namespace nccr
