#include "nccr/rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace nccr {

PolyMatrix PolyMatrix::identity(size_t n) {
    PolyMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial(Rational(1));
    return m;
}

bool PolyMatrix::is_zero() const {
    for (auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
    PolyMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("PolyMatrix: shape mismatch in sum");
    PolyMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix PolyMatrix::scalar_mul(const Rational& c) const {
    PolyMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].scalar_mul(c);
    return r;
}

std::string PolyMatrix::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_; ++i) {
        out += i ? "; " : "";
        for (size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + at(i, j).to_string();
    }
    return out + "]";
}

int total_dimension(const DimensionVector& d) {
    int t = 0;
    for (auto& [v, a] : d) {
        if (a < 0) throw std::invalid_argument("DimensionVector: negative entry");
        t += a;
    }
    return t;
}

Representation::Representation(const Quiver& q, DimensionVector dims,
                               std::map<std::string, PolyMatrix> matrices)
    : quiver_(&q), dims_(std::move(dims)), matrices_(std::move(matrices)) {
    for (auto& v : q.vertices())
        if (!dims_.count(v)) dims_[v] = 0;
    for (auto& [v, a] : dims_) {
        q.vertex_index(v);
        if (a < 0) throw std::invalid_argument("Representation: negative dimension at " + v);
    }
    for (auto& a : q.arrows()) {
        size_t r = (size_t)dims_.at(a.tail), c = (size_t)dims_.at(a.head);
        auto it = matrices_.find(a.name);
        if (it == matrices_.end()) {
            matrices_.emplace(a.name, PolyMatrix(r, c));
        } else if (it->second.rows() != r || it->second.cols() != c) {
            throw std::invalid_argument("Representation: matrix for '" + a.name +
                                        "' has wrong shape");
        }
    }
}

int Representation::dim(const std::string& vertex) const { return dims_.at(vertex); }

const PolyMatrix& Representation::matrix(const std::string& arrow) const {
    auto it = matrices_.find(arrow);
    if (it == matrices_.end()) throw std::invalid_argument("Representation: unknown arrow " + arrow);
    return it->second;
}

bool Representation::all_dims_at_most_one() const {
    for (auto& [v, a] : dims_)
        if (a > 1) return false;
    return true;
}

PolyMatrix evaluate_path(const Representation& rep, const Path& p) {
    if (p.is_trivial()) return PolyMatrix::identity((size_t)rep.dim(p.tail()));
    PolyMatrix acc = rep.matrix(p.arrows().front());
    for (size_t i = 1; i < p.arrows().size(); ++i) acc = acc * rep.matrix(p.arrows()[i]);
    return acc;
}

RelationCheck check_relations(const Representation& rep, const std::vector<Relation>& rels) {
    RelationCheck rc{true, {}};
    for (size_t i = 0; i < rels.size(); ++i) {
        const auto& terms = rels[i].element.terms();
        if (terms.empty()) continue;
        const Path& first = terms.begin()->first;
        PolyMatrix acc((size_t)rep.dim(first.tail()), (size_t)rep.dim(first.head()));
        for (auto& [p, c] : terms) acc = acc + evaluate_path(rep, p).scalar_mul(c);
        if (!acc.is_zero()) {
            rc.ok = false;
            rc.violated.push_back(i);
        }
    }
    return rc;
}

Representation direct_sum(const Representation& x, const Representation& y) {
    if (&x.quiver() != &y.quiver())
        throw std::invalid_argument("direct_sum: representations of different quivers");
    const Quiver& q = x.quiver();
    DimensionVector dims;
    for (auto& v : q.vertices()) dims[v] = x.dim(v) + y.dim(v);
    std::map<std::string, PolyMatrix> mats;
    for (auto& a : q.arrows()) {
        const PolyMatrix& mx = x.matrix(a.name);
        const PolyMatrix& my = y.matrix(a.name);
        PolyMatrix m(mx.rows() + my.rows(), mx.cols() + my.cols());
        for (size_t i = 0; i < mx.rows(); ++i)
            for (size_t j = 0; j < mx.cols(); ++j) m.at(i, j) = mx.at(i, j);
        for (size_t i = 0; i < my.rows(); ++i)
            for (size_t j = 0; j < my.cols(); ++j) m.at(mx.rows() + i, mx.cols() + j) = my.at(i, j);
        mats.emplace(a.name, std::move(m));
    }
    return Representation(q, dims, mats);
}

std::vector<std::set<std::string>> closed_subsets(const Representation& rep) {
    if (!rep.all_dims_at_most_one())
        throw std::invalid_argument("closed_subsets: only defined for dimension vectors with entries <= 1");
    const Quiver& q = rep.quiver();
    std::vector<std::string> support;
    for (auto& v : q.vertices())
        if (rep.dim(v) == 1) support.push_back(v);
    if (support.size() > 20)
        throw std::invalid_argument("closed_subsets: support too large to enumerate");
    // nonzero arrows within the support
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto& a : q.arrows()) {
        if (rep.dim(a.tail) != 1 || rep.dim(a.head) != 1) continue;
        if (!rep.matrix(a.name).is_zero()) edges.emplace_back(a.tail, a.head);
    }
    std::vector<std::set<std::string>> out;
    size_t n = support.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::set<std::string> s;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) s.insert(support[i]);
        bool closed = true;
        for (auto& [t, h] : edges)
            if (s.count(t) && !s.count(h)) {
                closed = false;
                break;
            }
        if (closed) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return out;
}

std::string representation_to_json(const Representation& rep) {
    nlohmann::json j;
    j["version"] = 1;
    j["dims"] = rep.dims();
    nlohmann::json mats = nlohmann::json::object();
    for (auto& a : rep.quiver().arrows()) {
        const PolyMatrix& m = rep.matrix(a.name);
        nlohmann::json rows = nlohmann::json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t jx = 0; jx < m.cols(); ++jx) row.push_back(m.at(i, jx).to_string());
            rows.push_back(row);
        }
        mats[a.name] = rows;
    }
    j["matrices"] = mats;
    return j.dump(2);
}

Representation representation_from_json(const Quiver& q, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("representation json: parse failure: ") + e.what());
    }
    if (!j.contains("version") || j["version"] != 1)
        throw std::invalid_argument("representation json: missing or unsupported 'version'");
    DimensionVector dims;
    for (auto& [k, v] : j.at("dims").items()) dims[k] = v.get<int>();
    std::map<std::string, PolyMatrix> mats;
    if (j.contains("matrices")) {
        for (auto& [name, rows] : j["matrices"].items()) {
            size_t r = rows.size();
            size_t c = r ? rows[0].size() : 0;
            PolyMatrix m(r, c);
            for (size_t i = 0; i < r; ++i) {
                if (rows[i].size() != c)
                    throw std::invalid_argument("representation json: ragged matrix " + name);
                for (size_t jx = 0; jx < c; ++jx)
                    m.at(i, jx) = parse_polynomial(rows[i][jx].get<std::string>());
            }
            mats.emplace(name, std::move(m));
        }
    }
    return Representation(q, dims, mats);
}

}  // namespace nccr
