#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nccr/polynomial.hpp"
#include "nccr/quiver.hpp"

namespace nccr {

// Dense matrix of polynomials, row-vector convention throughout: an arrow a
// gets a alpha_{t(a)} x alpha_{h(a)} matrix, and a vector at the tail times
// the matrix lands at the head.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static PolyMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Polynomial& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Polynomial& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    bool operator==(const PolyMatrix& o) const;

    PolyMatrix scalar_mul(const Rational& c) const;

    std::string to_string() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> data_;
};

using DimensionVector = std::map<std::string, int>;

int total_dimension(const DimensionVector& d);

// Finite dimensional representation: dimension per vertex, matrix per arrow.
// Entries may be symbolic (Laurent monomials from the chart machinery), in
// which case dimensions stay at most 1.
class Representation {
public:
    Representation(const Quiver& q, DimensionVector dims,
                   std::map<std::string, PolyMatrix> matrices);

    const Quiver& quiver() const { return *quiver_; }
    const DimensionVector& dims() const { return dims_; }
    int dim(const std::string& vertex) const;
    const PolyMatrix& matrix(const std::string& arrow) const;

    bool all_dims_at_most_one() const;

private:
    const Quiver* quiver_;
    DimensionVector dims_;
    std::map<std::string, PolyMatrix> matrices_;
};

// ordered product of arrow matrices; trivial path gives the identity
PolyMatrix evaluate_path(const Representation& rep, const Path& p);

struct RelationCheck {
    bool ok;
    std::vector<size_t> violated;  // indices into the relation list
};

RelationCheck check_relations(const Representation& rep, const std::vector<Relation>& rels);

Representation direct_sum(const Representation& x, const Representation& y);

// All subsets S of the support {i : alpha_i = 1} closed under the nonzero
// arrows (t(a) in S forces h(a) in S); these are exactly the dimension
// vectors of subrepresentations in the 0/1 regime.  Ordered by size then
// lexicographically.  Rejects dimensions >= 2.
std::vector<std::set<std::string>> closed_subsets(const Representation& rep);

std::string representation_to_json(const Representation& rep);
Representation representation_from_json(const Quiver& q, const std::string& json_text);

}  // namespace nccr
