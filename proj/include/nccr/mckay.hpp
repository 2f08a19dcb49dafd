#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nccr/cyclotomic.hpp"
#include "nccr/quiver.hpp"

namespace nccr {

// Character data for the supported families: cyclic 1/r(a_1,...,a_n) acting
// diagonally, and binary dihedral BD_{4n} = <psi_{2n}, tau> inside SL(2,C).
struct ConjugacyClass {
    std::string name;
    int size;
};

struct GroupData {
    enum class Kind { Cyclic, BinaryDihedral };
    Kind kind;
    // cyclic: order r and the diagonal weights; BD: parameter n (|G| = 4n)
    int r = 0;
    std::vector<int> weights;
    int bd_n = 0;

    long long order() const;
    std::vector<ConjugacyClass> classes;
    std::vector<std::string> irrep_names;
    std::vector<int> irrep_dims;
    // table[i][c] = chi_i on class c
    std::vector<std::vector<Cyclotomic>> table;
    std::vector<Cyclotomic> natural_character;  // chi_V per class

    static GroupData cyclic(int r, std::vector<int> weights);
    static GroupData binary_dihedral(int n);  // BD_{4n}, n >= 2

    // "1/3(1,2)" or "BD8"
    static GroupData parse(const std::string& text);
    std::string name() const;
    bool is_sl2() const;
};

// fills in classes, irreps, character table and natural character; the
// orthonormality invariant is checked and a violation throws
GroupData character_table(GroupData g);

// inner product (1/|G|) sum_c |c| chi(c) conj(psi(c))
Cyclotomic character_inner_product(const GroupData& g, const std::vector<Cyclotomic>& chi,
                                   const std::vector<Cyclotomic>& psi);

// Vertices are the irreducibles (star = trivial); arrows rho_i -> rho_j
// counted by the multiplicity of rho_j in rho_i (x) V.  For self-dual V this
// is Hom(rho_j, rho_i (x) V); it matches the endomorphism quiver of the
// weight modules under rho_i <-> S_i.
Quiver mckay_quiver(const GroupData& g);

struct SimpleGraph {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    // A1~ needs a doubled edge when rebuilt; kept only by the extended helper
};

// kill the star vertex, merge opposite arrow pairs into undirected edges
SimpleGraph mckay_to_dual_graph(const Quiver& mckay);

// add the affine vertex to the ADE graph and double every edge into an arrow
// pair; the star marks the added vertex
Quiver dual_graph_to_mckay(const SimpleGraph& g);

struct ADEType {
    char family = '?';  // 'A', 'D', 'E' or '?' for not-ADE
    int rank = 0;
    bool is_ade() const { return family != '?'; }
    std::string to_string() const;
};

ADEType classify_ade(const SimpleGraph& g);

// vertex-labeled directed multigraph equality: same vertices and labels, same
// arrow multiplicity for every ordered vertex pair (arrow names ignored)
bool same_labeled_multigraph(const Quiver& a, const Quiver& b);

std::string dual_graph_to_dot_graph(const SimpleGraph& g);

}  // namespace nccr
