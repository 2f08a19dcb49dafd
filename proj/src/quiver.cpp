#include "nccr/quiver.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace nccr {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].empty()) throw std::invalid_argument("Quiver: empty vertex id");
        if (!vindex_.emplace(vertices_[i], (int)i).second)
            throw std::invalid_argument("Quiver: duplicate vertex '" + vertices_[i] + "'");
    }
    for (size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (a.name.empty()) throw std::invalid_argument("Quiver: empty arrow name");
        if (!aindex_.emplace(a.name, (int)i).second)
            throw std::invalid_argument("Quiver: duplicate arrow '" + a.name + "'");
        if (!vindex_.count(a.tail) || !vindex_.count(a.head))
            throw std::invalid_argument("Quiver: arrow '" + a.name + "' references unknown vertex");
    }
}

int Quiver::vertex_index(const std::string& v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw std::invalid_argument("Quiver: unknown vertex '" + v + "'");
    return it->second;
}

const Arrow& Quiver::arrow(const std::string& name) const {
    auto it = aindex_.find(name);
    if (it == aindex_.end()) throw std::invalid_argument("Quiver: unknown arrow '" + name + "'");
    return arrows_[it->second];
}

std::vector<std::string> Quiver::arrow_names() const {
    std::vector<std::string> r;
    r.reserve(arrows_.size());
    for (auto& a : arrows_) r.push_back(a.name);
    return r;
}

bool Quiver::has_directed_cycle() const {
    // colors: 0 unvisited, 1 on stack, 2 done
    std::map<std::string, int> color;
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
        color[v] = 1;
        for (auto& a : arrows_) {
            if (a.tail != v) continue;
            int c = color.count(a.head) ? color[a.head] : 0;
            if (c == 1) return true;
            if (c == 0 && dfs(a.head)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (auto& v : vertices_)
        if (!color.count(v) && dfs(v)) return true;
    return false;
}

Path Path::trivial(const std::string& vertex) {
    Path p;
    p.tail_ = vertex;
    p.head_ = vertex;
    return p;
}

Path Path::of_arrows(const Quiver& q, std::vector<std::string> arrows) {
    if (arrows.empty()) throw std::invalid_argument("Path: empty arrow list (use trivial)");
    Path p;
    for (size_t i = 0; i < arrows.size(); ++i) {
        const Arrow& a = q.arrow(arrows[i]);
        if (i == 0) {
            p.tail_ = a.tail;
        } else if (q.arrow(arrows[i - 1]).head != a.tail) {
            throw std::invalid_argument("Path: arrows '" + arrows[i - 1] + "' and '" + arrows[i] +
                                        "' are not composable");
        }
        p.head_ = a.head;
    }
    p.arrows_ = std::move(arrows);
    return p;
}

bool Path::operator==(const Path& o) const {
    return arrows_ == o.arrows_ && tail_ == o.tail_ && head_ == o.head_;
}

bool Path::operator<(const Path& o) const {
    if (arrows_.size() != o.arrows_.size()) return arrows_.size() < o.arrows_.size();
    if (arrows_ != o.arrows_) return arrows_ < o.arrows_;
    return tail_ < o.tail_;
}

std::string Path::to_string() const {
    if (is_trivial()) return "e(" + tail_ + ")";
    std::string out;
    for (auto& a : arrows_) {
        if (!out.empty()) out += ".";
        out += a;
    }
    return out;
}

AlgebraElement::AlgebraElement(const Path& p, Rational c) {
    if (!c.is_zero()) terms_.emplace(p, std::move(c));
}

AlgebraElement AlgebraElement::unit(const Quiver& q) {
    AlgebraElement u;
    for (auto& v : q.vertices()) u.add_term(Path::trivial(v), Rational(1));
    return u;
}

void AlgebraElement::add_term(const Path& p, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
}

AlgebraElement AlgebraElement::scalar_mul(const Rational& c) const {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (auto& [p, k] : terms_) r.add_term(p, k * c);
    return r;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [p, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.is_one() ? p.to_string() : c.to_string() + "*" + p.to_string();
    }
    return out;
}

AlgebraElement compose(const Quiver& q, const Path& p1, const Path& p2) {
    if (!q.has_vertex(p1.tail()) || !q.has_vertex(p2.tail()))
        throw std::invalid_argument("compose: path not in quiver");
    for (auto& a : p1.arrows()) q.arrow(a);
    for (auto& a : p2.arrows()) q.arrow(a);
    if (p1.head() != p2.tail()) return AlgebraElement::zero();
    if (p1.is_trivial()) return AlgebraElement(p2);
    if (p2.is_trivial()) return AlgebraElement(p1);
    std::vector<std::string> joined = p1.arrows();
    joined.insert(joined.end(), p2.arrows().begin(), p2.arrows().end());
    return AlgebraElement(Path::of_arrows(q, std::move(joined)));
}

AlgebraElement multiply(const Quiver& q, const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    for (auto& [p1, c1] : x.terms())
        for (auto& [p2, c2] : y.terms()) {
            AlgebraElement prod = compose(q, p1, p2);
            for (auto& [p, c] : prod.terms()) r.add_term(p, c * c1 * c2);
        }
    return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
    if (max_len < 0) throw std::invalid_argument("enumerate_paths: negative max_len");
    std::vector<Path> out;
    for (auto& v : q.vertices()) out.push_back(Path::trivial(v));
    std::sort(out.begin(), out.end());
    std::vector<std::vector<std::string>> frontier;
    frontier.push_back({});  // seeds arrows of length 1
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<std::string>> next;
        for (auto& seq : frontier) {
            for (auto& a : q.arrows()) {
                if (!seq.empty() && q.arrow(seq.back()).head != a.tail) continue;
                auto s2 = seq;
                s2.push_back(a.name);
                next.push_back(std::move(s2));
            }
        }
        std::sort(next.begin(), next.end());
        for (auto& seq : next) out.push_back(Path::of_arrows(q, seq));
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

Relation make_relation(const Quiver& q, const AlgebraElement& e) {
    if (e.is_zero()) throw std::invalid_argument("relation: zero element");
    const Path& first = e.terms().begin()->first;
    for (auto& [p, c] : e.terms()) {
        for (auto& a : p.arrows()) q.arrow(a);
        if (p.tail() != first.tail() || p.head() != first.head())
            throw std::invalid_argument(
                "relation: paths do not share head and tail (" + p.to_string() + " vs " +
                first.to_string() + ")");
    }
    return Relation{e};
}

std::string quiver_to_json(const Quiver& q, const std::vector<Relation>& rels) {
    nlohmann::json j;
    j["version"] = 1;
    j["vertices"] = q.vertices();
    j["arrows"] = nlohmann::json::array();
    for (auto& a : q.arrows())
        j["arrows"].push_back({{"name", a.name}, {"tail", a.tail}, {"head", a.head}});
    j["relations"] = nlohmann::json::array();
    for (auto& r : rels) {
        nlohmann::json jr = nlohmann::json::array();
        for (auto& [p, c] : r.element.terms()) {
            nlohmann::json term;
            term["coeff"] = c.to_string();
            if (p.is_trivial()) {
                term["vertex"] = p.tail();
                term["path"] = nlohmann::json::array();
            } else {
                term["path"] = p.arrows();
            }
            jr.push_back(term);
        }
        j["relations"].push_back(jr);
    }
    if (q.star) j["star"] = *q.star;
    if (!q.vertex_labels.empty()) j["labels"] = q.vertex_labels;
    return j.dump(2);
}

std::pair<Quiver, std::vector<Relation>> quiver_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("quiver json: parse failure: ") + e.what());
    }
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"] != 1)
        throw std::invalid_argument("quiver json: missing or unsupported 'version' (expected 1)");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("quiver json: 'vertices' must be an array");
    std::vector<std::string> vertices;
    for (auto& v : j["vertices"]) vertices.push_back(v.get<std::string>());
    std::vector<Arrow> arrows;
    if (j.contains("arrows")) {
        for (auto& a : j["arrows"]) {
            if (!a.contains("name") || !a.contains("tail") || !a.contains("head"))
                throw std::invalid_argument("quiver json: arrow needs name/tail/head");
            arrows.push_back({a["name"].get<std::string>(), a["tail"].get<std::string>(),
                              a["head"].get<std::string>()});
        }
    }
    Quiver q(vertices, arrows);
    if (j.contains("star")) q.star = j["star"].get<std::string>();
    if (j.contains("labels"))
        for (auto& [k, v] : j["labels"].items()) q.vertex_labels[k] = v.get<int>();
    std::vector<Relation> rels;
    if (j.contains("relations")) {
        for (auto& jr : j["relations"]) {
            AlgebraElement e;
            for (auto& term : jr) {
                Rational c = Rational::parse(term.at("coeff").get<std::string>());
                auto& jp = term.at("path");
                if (jp.empty()) {
                    e.add_term(Path::trivial(term.at("vertex").get<std::string>()), c);
                } else {
                    std::vector<std::string> names;
                    for (auto& s : jp) names.push_back(s.get<std::string>());
                    e.add_term(Path::of_arrows(q, names), c);
                }
            }
            rels.push_back(make_relation(q, e));
        }
    }
    return {q, rels};
}

std::string quiver_to_dot(const Quiver& q) {
    std::string out = "digraph quiver {\n";
    for (auto& v : q.vertices()) {
        out += "  \"" + v + "\"";
        std::string label = v;
        auto it = q.vertex_labels.find(v);
        if (it != q.vertex_labels.end()) label += " (" + std::to_string(it->second) + ")";
        out += " [label=\"" + label + "\"";
        if (q.star && *q.star == v) out += ", peripheries=2";
        out += "];\n";
    }
    for (auto& a : q.arrows())
        out += "  \"" + a.tail + "\" -> \"" + a.head + "\" [label=\"" + a.name + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace nccr
