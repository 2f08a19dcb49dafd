#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nccr/hilbert.hpp"
#include "nccr/monomial.hpp"
#include "nccr/quiver.hpp"
#include "nccr/stability.hpp"

namespace nccr {

// commutativized relation p = q, both sides monomials over arrow names
struct BinomialPair {
    Monomial lhs;
    Monomial rhs;
};

struct BinomialRelationSet {
    std::vector<BinomialPair> pairs;
};

// Turns path relations into monomial pairs.  Every relation must be a
// difference of exactly two paths; identically-satisfied pairs (equal
// monomials, e.g. atb = bta) are dropped and duplicates collapsed.
BinomialRelationSet commutativize(const Quiver& q, const std::vector<Relation>& rels);

// Congruence on arrow monomials generated by the binomial pairs, decided by
// bounded breadth-first rewriting.  Everything at desk scale: the orbits in
// play have a handful of elements.
class BinomialCongruence {
public:
    explicit BinomialCongruence(const BinomialRelationSet& rels, int degree_slack = 8,
                                size_t visit_cap = 50000);
    bool equivalent(const Monomial& a, const Monomial& b) const;

private:
    std::vector<BinomialPair> pairs_;
    int degree_slack_;
    size_t visit_cap_;
};

struct InvariantClass {
    std::string name;               // printable name of the representative
    std::vector<Monomial> members;  // congruent Hilbert-basis cycles, sorted
    const Monomial& representative() const { return members.front(); }
    int degree() const { return members.front().total_degree(); }
};

// identity between two products of classes, e.g. A*B = C^3
struct InvariantIdentity {
    std::map<std::string, int> lhs;
    std::map<std::string, int> rhs;
    std::string to_string() const;
};

struct InvariantReport {
    std::vector<InvariantClass> classes;
    std::vector<InvariantIdentity> identities;
    bool certified = false;
    int scanned_degree = 0;
    int max_generator_degree = 0;
};

struct InvariantOptions {
    int degree_bound = 12;
    bool parallel = true;
    std::optional<int> identity_degree_bound;  // default: 2*max generator degree + 2
};

// multiplicative identities among class representatives up to the degree
// bound, with consequences of smaller accepted identities filtered out
std::vector<InvariantIdentity> find_identities(const std::vector<InvariantClass>& classes,
                                               const BinomialCongruence& congruence,
                                               int degree_bound);

// Hilbert basis of the cycle monoid merged into congruence classes, plus the
// multiplicative identities among them up to a degree bound.  Errors with an
// incompleteness message when the degree bound is hit before the doubling
// certificate closes.
InvariantReport invariant_generators(const Quiver& q, const BinomialRelationSet& rels,
                                     const InvariantOptions& options = {});

struct Chart {
    std::vector<std::string> tree;         // arrows set to 1, sorted
    std::vector<std::string> free_coords;  // surviving arrows, sorted
    std::map<std::string, Monomial> expressions;  // every arrow -> monomial in free coords
};

struct UnresolvedChart {
    std::vector<std::string> tree;
    std::vector<std::string> stuck_relations;  // printed relation residues
};

enum class ChartMode { Star, Costar };

struct ChartEnumeration {
    ChartMode mode = ChartMode::Star;
    std::string root;
    std::vector<Chart> charts;            // sorted by tree
    std::vector<UnresolvedChart> unresolved;
};

// Charts of the quiver-GIT moduli at alpha=(1,..,1) indexed by arborescences
// rooted at `root`: oriented away from the root in Star mode (theta negative
// exactly at the root), toward it in Costar mode (theta positive exactly at
// the root).  Charts whose stable locus lies inside another chart's are
// pruned; stalled substitutions are reported, not dropped.
ChartEnumeration enumerate_charts(const Quiver& q, const BinomialRelationSet& rels,
                                  const std::string& root, ChartMode mode = ChartMode::Star);

// classifies theta into a star or costar chamber; throws for mixed signs
std::pair<std::string, ChartMode> chart_regime(const Quiver& q, const StabilityParameter& theta);

struct Transition {
    std::map<std::string, Monomial> coordinate_images;  // target free coord -> Laurent monomial
    std::vector<std::string> nonzero_domain;            // source coords that must not vanish
};

// gauge change between two charts of the same enumeration
Transition transition(const Quiver& q, const ChartEnumeration& enumeration, const Chart& from,
                      const Chart& to);

std::vector<Monomial> base_map(const Chart& chart, const std::vector<InvariantClass>& classes);

struct DualGraph {
    // each node is a glued exceptional curve; members are (chart index, axis coord)
    std::vector<std::vector<std::pair<size_t, std::string>>> nodes;
    std::vector<std::pair<size_t, size_t>> edges;
};

// Fiber analysis over the base origin for surface charts (exactly two free
// coordinates each): coordinate axes killed by every base monomial are the
// exceptional curves; transitions glue them across charts.
DualGraph exceptional_dual_graph(const Quiver& q, const ChartEnumeration& enumeration,
                                 const std::vector<InvariantClass>& classes);

std::string dual_graph_to_dot(const DualGraph& g);

}  // namespace nccr
