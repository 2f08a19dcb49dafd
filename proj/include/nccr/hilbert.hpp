#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nccr {

// Linear constraints cutting a submonoid out of N^nvars: integer rows that
// must vanish exactly, plus rows that must vanish modulo a given modulus.
// Quiver cycle monoids use Z-rows (one per vertex, flow balance), cyclic
// group invariants use a single mod-r row, torus invariants a single Z-row.
struct WeightSystem {
    int nvars = 0;
    std::vector<std::vector<long long>> z_rows;
    std::vector<std::pair<long long, std::vector<long long>>> mod_rows;

    // degree up to which scanning is provably exhaustive (0 = unknown):
    // flow monoids are generated by simple cycles (<= number of arrows),
    // cyclic weight monoids by the pure-power exponent box, single torus
    // rows by max positive + max negative weight
    int complete_degree = 0;

    bool satisfied(const std::vector<int>& e) const;
};

struct HilbertOptions {
    int degree_bound = 12;
    bool parallel = true;
};

struct HilbertResult {
    std::vector<std::vector<int>> generators;  // sorted, each a nonneg exponent vector
    int max_generator_degree = 0;
    // true when a full window (gmax, 2*gmax] was scanned without finding a new
    // generator; every monoid element of degree <= 2*gmax then factors through
    // the generators
    bool certified = false;
    int scanned_degree = 0;
};

// Degree-graded enumeration with an irreducibility filter.  The inner loop
// over the compositions of each degree is data-parallel (candidates are
// checked only against generators of strictly smaller degree) and runs under
// OpenMP when options.parallel is set.
HilbertResult hilbert_basis(const WeightSystem& ws, const HilbertOptions& options = {});

// Plain recursive enumeration, single-threaded, no unranking tricks.  Kept as
// the reference implementation for tests and the kernel benchmark.
std::vector<std::vector<int>> hilbert_basis_serial_reference(const WeightSystem& ws, int degree_bound);

std::string exponent_vector_to_string(const std::vector<int>& e, const std::vector<std::string>& names);

}  // namespace nccr
