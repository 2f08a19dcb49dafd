#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nccr/rational.hpp"

namespace nccr {

struct Arrow {
    std::string name;
    std::string tail;
    std::string head;
};

// Finite quiver.  Vertices keep their given order; arrow names are unique;
// trivial paths e_i exist implicitly at every vertex.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(const std::string& v) const { return vindex_.count(v) > 0; }
    int vertex_index(const std::string& v) const;
    const Arrow& arrow(const std::string& name) const;
    bool has_arrow(const std::string& name) const { return aindex_.count(name) > 0; }
    std::vector<std::string> arrow_names() const;

    bool has_directed_cycle() const;

    // optional decorations carried through JSON (McKay outputs use both)
    std::optional<std::string> star;
    std::map<std::string, int> vertex_labels;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vindex_;
    std::map<std::string, int> aindex_;
};

// Trivial path at a vertex, or a composable sequence of arrows.
class Path {
public:
    static Path trivial(const std::string& vertex);
    static Path of_arrows(const Quiver& q, std::vector<std::string> arrows);

    bool is_trivial() const { return arrows_.empty(); }
    const std::vector<std::string>& arrows() const { return arrows_; }
    const std::string& tail() const { return tail_; }
    const std::string& head() const { return head_; }
    size_t length() const { return arrows_.size(); }

    bool operator==(const Path& o) const;
    bool operator<(const Path& o) const;  // (length, arrow sequence, vertex)

    std::string to_string() const;

private:
    std::vector<std::string> arrows_;
    std::string tail_;
    std::string head_;
};

// Finitely supported linear combination of paths.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(const Path& p, Rational c = Rational(1));

    static AlgebraElement zero() { return AlgebraElement(); }
    static AlgebraElement unit(const Quiver& q);  // sum of all trivial paths

    const std::map<Path, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Path& p, const Rational& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scalar_mul(const Rational& c) const;

    std::string to_string() const;

private:
    std::map<Path, Rational> terms_;
};

// relation: all paths in the support share one head and one tail
struct Relation {
    AlgebraElement element;
};

// p.q = concatenation when h(p) = t(q), zero otherwise; trivial paths are units
AlgebraElement compose(const Quiver& q, const Path& p1, const Path& p2);

// bilinear extension of compose
AlgebraElement multiply(const Quiver& q, const AlgebraElement& x, const AlgebraElement& y);

// all paths of length <= max_len, trivial ones included; ordered by length
// then lexicographically by arrow sequence
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

Relation make_relation(const Quiver& q, const AlgebraElement& e);

// canonical JSON schema:
// {"version":1,"vertices":[..],"arrows":[{"name","tail","head"}],
//  "relations":[[{"coeff":"p/q","path":["a","b"]},..],..],
//  "star":"0"?, "labels":{"0":1}?}
std::string quiver_to_json(const Quiver& q, const std::vector<Relation>& rels);
std::pair<Quiver, std::vector<Relation>> quiver_from_json(const std::string& json_text);

std::string quiver_to_dot(const Quiver& q);

}  // namespace nccr
