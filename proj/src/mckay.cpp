#include "nccr/mckay.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace nccr {

long long GroupData::order() const { return kind == Kind::Cyclic ? r : 4LL * bd_n; }

GroupData GroupData::cyclic(int r, std::vector<int> weights) {
    if (r < 1) throw std::invalid_argument("cyclic group: order must be positive");
    for (auto& w : weights) w = ((w % r) + r) % r;
    GroupData g;
    g.kind = Kind::Cyclic;
    g.r = r;
    g.weights = std::move(weights);
    return g;
}

GroupData GroupData::binary_dihedral(int n) {
    if (n < 2) throw std::invalid_argument("binary dihedral: parameter must be >= 2");
    GroupData g;
    g.kind = Kind::BinaryDihedral;
    g.bd_n = n;
    return g;
}

GroupData GroupData::parse(const std::string& text) {
    if (text.rfind("BD", 0) == 0) {
        int order = std::stoi(text.substr(2));
        if (order % 4 != 0) throw std::invalid_argument("binary dihedral order must be 4n: " + text);
        return binary_dihedral(order / 4);
    }
    // "1/r(a1,a2,...)"
    auto slash = text.find('/');
    auto paren = text.find('(');
    auto close = text.find(')');
    if (slash == std::string::npos || paren == std::string::npos || close == std::string::npos ||
        text.substr(0, slash) != "1")
        throw std::invalid_argument("cannot parse group '" + text + "' (expected 1/r(a,b) or BD4n)");
    int r = std::stoi(text.substr(slash + 1, paren - slash - 1));
    std::vector<int> ws;
    std::string inner = text.substr(paren + 1, close - paren - 1);
    size_t pos = 0;
    while (pos < inner.size()) {
        size_t comma = inner.find(',', pos);
        if (comma == std::string::npos) comma = inner.size();
        ws.push_back(std::stoi(inner.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (ws.empty()) throw std::invalid_argument("group '" + text + "' has no weights");
    return cyclic(r, ws);
}

std::string GroupData::name() const {
    if (kind == Kind::BinaryDihedral) return "BD" + std::to_string(4 * bd_n);
    std::string out = "1/" + std::to_string(r) + "(";
    for (size_t i = 0; i < weights.size(); ++i) out += (i ? "," : "") + std::to_string(weights[i]);
    return out + ")";
}

bool GroupData::is_sl2() const {
    if (kind == Kind::BinaryDihedral) return true;
    if (weights.size() != 2) return false;
    return (weights[0] + weights[1]) % r == 0;
}

Cyclotomic character_inner_product(const GroupData& g, const std::vector<Cyclotomic>& chi,
                                   const std::vector<Cyclotomic>& psi) {
    Cyclotomic acc;
    for (size_t c = 0; c < g.classes.size(); ++c)
        acc += (chi[c] * psi[c].conj()).scalar_mul(Rational(g.classes[c].size));
    return acc.scalar_mul(Rational(1, g.order()));
}

GroupData character_table(GroupData g) {
    g.classes.clear();
    g.irrep_names.clear();
    g.irrep_dims.clear();
    g.table.clear();
    g.natural_character.clear();
    if (g.kind == GroupData::Kind::Cyclic) {
        int r = g.r;
        for (int k = 0; k < r; ++k) g.classes.push_back({"g^" + std::to_string(k), 1});
        for (int j = 0; j < r; ++j) {
            g.irrep_names.push_back(std::to_string(j));
            g.irrep_dims.push_back(1);
            std::vector<Cyclotomic> row;
            for (int k = 0; k < r; ++k) row.push_back(Cyclotomic::root_of_unity(r, j * k));
            g.table.push_back(std::move(row));
        }
        for (int k = 0; k < r; ++k) {
            Cyclotomic v;
            for (int w : g.weights) v += Cyclotomic::root_of_unity(r, w * k);
            g.natural_character.push_back(v);
        }
    } else {
        // BD_{4n} = <q, tau : q^{2n} = 1, tau^2 = q^n, tau q tau^{-1} = q^{-1}>
        int n = g.bd_n;
        g.classes.push_back({"1", 1});
        g.classes.push_back({"q^" + std::to_string(n), 1});
        for (int j = 1; j < n; ++j) g.classes.push_back({"q^" + std::to_string(j) + "~", 2});
        g.classes.push_back({"tau.even", n});
        g.classes.push_back({"tau.odd", n});
        int nclasses = n + 3;
        auto value_at = [&](std::function<Cyclotomic(int)> on_q, const Cyclotomic& on_tau_even,
                            const Cyclotomic& on_tau_odd) {
            std::vector<Cyclotomic> row((size_t)nclasses);
            row[0] = on_q(0);
            row[1] = on_q(n);
            for (int j = 1; j < n; ++j) row[1 + j] = on_q(j);
            row[n + 1] = on_tau_even;
            row[n + 2] = on_tau_odd;
            return row;
        };
        Cyclotomic one(1), minus_one(-1);
        // tau acts with t where t^2 = (-1)^n
        Cyclotomic t = n % 2 == 0 ? one : Cyclotomic::root_of_unity(4, 1);
        auto sign_pow = [&](int j) { return j % 2 == 0 ? one : minus_one; };
        g.irrep_names = {"rho0", "rho1", "rho2", "rho3"};
        g.irrep_dims = {1, 1, 1, 1};
        g.table.push_back(value_at([&](int) { return one; }, one, one));
        g.table.push_back(value_at([&](int) { return one; }, minus_one, minus_one));
        g.table.push_back(value_at(sign_pow, t, -t));
        g.table.push_back(value_at(sign_pow, -t, t));
        for (int h = 1; h < n; ++h) {
            g.irrep_names.push_back("sigma" + std::to_string(h));
            g.irrep_dims.push_back(2);
            g.table.push_back(value_at(
                [&](int j) {
                    return Cyclotomic::root_of_unity(2 * n, h * j) +
                           Cyclotomic::root_of_unity(2 * n, -h * j);
                },
                Cyclotomic(0), Cyclotomic(0)));
        }
        // natural 2-dim representation: q = diag(eps_{2n}, eps_{2n}^{-1}), tau antidiagonal
        g.natural_character = value_at(
            [&](int j) {
                return Cyclotomic::root_of_unity(2 * n, j) + Cyclotomic::root_of_unity(2 * n, -j);
            },
            Cyclotomic(0), Cyclotomic(0));
    }
    // orthonormality check
    for (size_t i = 0; i < g.table.size(); ++i)
        for (size_t j = 0; j < g.table.size(); ++j) {
            Cyclotomic ip = character_inner_product(g, g.table[i], g.table[j]);
            Cyclotomic expect(i == j ? 1 : 0);
            if (ip != expect)
                throw std::logic_error("character table failed orthonormality at (" +
                                       g.irrep_names[i] + "," + g.irrep_names[j] + ")");
        }
    // dimension sanity: sum of squares = |G|, chi_V(e) = matrix size
    long long sq = 0;
    for (int d : g.irrep_dims) sq += (long long)d * d;
    if (sq != g.order()) throw std::logic_error("character table: sum of dim^2 != |G|");
    return g;
}

Quiver mckay_quiver(const GroupData& g0) {
    GroupData g = g0.table.empty() ? character_table(g0) : g0;
    size_t k = g.irrep_names.size();
    std::vector<Arrow> arrows;
    for (size_t i = 0; i < k; ++i) {
        // chi_i * chi_V pointwise
        std::vector<Cyclotomic> prod;
        for (size_t c = 0; c < g.classes.size(); ++c)
            prod.push_back(g.table[i][c] * g.natural_character[c]);
        for (size_t j = 0; j < k; ++j) {
            Cyclotomic m = character_inner_product(g, prod, g.table[j]);
            if (!m.is_rational() || !m.rational_value().is_integer() ||
                m.rational_value().sign() < 0)
                throw std::logic_error("mckay_quiver: non-integer arrow multiplicity (corrupted table)");
            long long mult = m.rational_value().num().to_ll();
            for (long long t = 0; t < mult; ++t)
                arrows.push_back({"a_" + g.irrep_names[i] + "_" + g.irrep_names[j] +
                                      (mult > 1 ? "_" + std::to_string(t) : ""),
                                  g.irrep_names[i], g.irrep_names[j]});
        }
    }
    Quiver q(g.irrep_names, arrows);
    q.star = g.irrep_names[0];
    for (size_t i = 0; i < k; ++i) q.vertex_labels[g.irrep_names[i]] = g.irrep_dims[i];
    return q;
}

SimpleGraph mckay_to_dual_graph(const Quiver& mckay) {
    if (!mckay.star) throw std::invalid_argument("mckay_to_dual_graph: quiver has no star vertex");
    const std::string& star = *mckay.star;
    std::map<std::pair<std::string, std::string>, int> counts;
    for (auto& a : mckay.arrows()) {
        if (a.tail == a.head) {
            if (a.tail != star)
                throw std::invalid_argument("mckay_to_dual_graph: loop at non-star vertex " + a.tail);
            continue;
        }
        counts[{a.tail, a.head}]++;
    }
    SimpleGraph g;
    for (auto& v : mckay.vertices())
        if (v != star) g.nodes.push_back(v);
    std::set<std::pair<std::string, std::string>> done;
    for (auto& [key, c] : counts) {
        auto [u, v] = key;
        int back = counts.count({v, u}) ? counts[{v, u}] : 0;
        if (c != back)
            throw std::invalid_argument("mckay_to_dual_graph: unpaired arrows between " + u +
                                        " and " + v);
        if (u == star || v == star) continue;
        if (done.count({v, u}) || done.count({u, v})) continue;
        if (c > 1)
            throw std::invalid_argument("mckay_to_dual_graph: multiple edges between " + u +
                                        " and " + v + " do not form a simple dual graph");
        done.insert({u, v});
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

std::map<std::string, std::vector<std::string>> adjacency(const SimpleGraph& g) {
    std::map<std::string, std::vector<std::string>> adj;
    for (auto& v : g.nodes) adj[v];
    for (auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

}  // namespace

ADEType classify_ade(const SimpleGraph& g) {
    ADEType t;
    size_t n = g.nodes.size();
    if (n == 0) return t;
    auto adj = adjacency(g);
    // connected?
    std::set<std::string> seen;
    std::vector<std::string> stack{g.nodes[0]};
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (auto& w : adj[v]) stack.push_back(w);
    }
    if (seen.size() != n) return t;
    if (g.edges.size() != n - 1) return t;  // a cycle somewhere
    int deg3 = 0;
    std::string fork;
    for (auto& [v, nb] : adj) {
        if (nb.size() > 3) return t;
        if (nb.size() == 3) {
            ++deg3;
            fork = v;
        }
    }
    if (deg3 == 0) {
        t.family = 'A';
        t.rank = (int)n;
        return t;
    }
    if (deg3 != 1) return t;
    // branch lengths from the fork
    std::vector<int> lens;
    for (auto& start : adj[fork]) {
        int len = 1;
        std::string prev = fork, cur = start;
        while (adj[cur].size() == 2) {
            for (auto& w : adj[cur])
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
            ++len;
        }
        if (adj[cur].size() == 3) return t;  // second fork reached
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens[0] == 1 && lens[1] == 1) {
        t.family = 'D';
        t.rank = lens[2] + 3;
        return t;
    }
    if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) {
        t.family = 'E';
        t.rank = lens[2] + 4;
        return t;
    }
    return t;
}

std::string ADEType::to_string() const {
    if (!is_ade()) return "not-ADE";
    return std::string(1, family) + std::to_string(rank);
}

Quiver dual_graph_to_mckay(const SimpleGraph& g) {
    ADEType t = classify_ade(g);
    if (!t.is_ade())
        throw std::invalid_argument("dual_graph_to_mckay: input graph is not an ADE Dynkin diagram");
    auto adj = adjacency(g);
    const std::string star = "star";
    std::vector<std::string> vertices{star};
    for (auto& v : g.nodes) vertices.push_back(v);
    // edge list of the extended diagram; repeats allowed (A1~ doubles)
    std::vector<std::pair<std::string, std::string>> edges(g.edges.begin(), g.edges.end());
    std::map<std::string, int> labels;
    for (auto& v : g.nodes) labels[v] = 1;
    labels[star] = 1;
    if (t.family == 'A') {
        std::vector<std::string> ends;
        for (auto& v : g.nodes)
            if (adj[v].size() <= 1) ends.push_back(v);
        if (t.rank == 1) {
            edges.emplace_back(star, g.nodes[0]);
            edges.emplace_back(star, g.nodes[0]);
        } else {
            edges.emplace_back(star, ends[0]);
            edges.emplace_back(star, ends[1]);
        }
    } else if (t.family == 'D') {
        // attach the affine vertex next to the far end of the long branch
        std::string fork;
        for (auto& [v, nb] : adj)
            if (nb.size() == 3) fork = v;
        std::string target = fork;
        if (t.rank > 4) {
            // walk the unique branch of length > 1 to its second-to-last vertex
            for (auto& start : adj[fork]) {
                std::vector<std::string> walk{fork, start};
                while (adj[walk.back()].size() == 2) {
                    for (auto& w : adj[walk.back()])
                        if (w != walk[walk.size() - 2]) {
                            walk.push_back(w);
                            break;
                        }
                }
                if (walk.size() > 2) target = walk[walk.size() - 2];
            }
        }
        edges.emplace_back(star, target);
        for (auto& [v, nb] : adj)
            if (nb.size() >= 2) labels[v] = 2;
        if (t.rank == 4) labels[fork] = 2;
    } else {
        // E family: extend the arm whose length matches the affine rule
        std::string fork;
        for (auto& [v, nb] : adj)
            if (nb.size() == 3) fork = v;
        int want = t.rank == 6 ? 1 : t.rank == 7 ? 3 : 4;  // arm length to extend
        std::string attach;
        std::vector<std::vector<std::string>> arms;
        for (auto& start : adj[fork]) {
            std::vector<std::string> walk{fork, start};
            while (adj[walk.back()].size() == 2) {
                for (auto& w : adj[walk.back()])
                    if (w != walk[walk.size() - 2]) {
                        walk.push_back(w);
                        break;
                    }
            }
            arms.push_back(std::vector<std::string>(walk.begin() + 1, walk.end()));
        }
        std::sort(arms.begin(), arms.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (auto& arm : arms)
            if ((int)arm.size() == want) attach = arm.back();
        edges.emplace_back(star, attach);
        // affine marks
        if (t.rank == 6) {
            labels[fork] = 3;
            for (auto& arm : arms) {
                labels[arm[0]] = 2;
                if (arm.size() > 1) labels[arm[1]] = 1;
            }
        } else if (t.rank == 7) {
            labels[fork] = 4;
            for (auto& arm : arms) {
                for (size_t i = 0; i < arm.size(); ++i) labels[arm[i]] = (int)(3 - i);
                if (arm.size() == 1) labels[arm[0]] = 2;
            }
        } else {
            labels[fork] = 6;
            for (auto& arm : arms) {
                if (arm.size() == 1) labels[arm[0]] = 3;
                if (arm.size() == 2) {
                    labels[arm[0]] = 4;
                    labels[arm[1]] = 2;
                }
                if (arm.size() == 4)
                    for (size_t i = 0; i < 4; ++i) labels[arm[i]] = (int)(5 - i);
            }
        }
    }
    std::vector<Arrow> arrows;
    int counter = 0;
    for (auto& [u, v] : edges) {
        arrows.push_back({"d" + std::to_string(counter) + "_fwd", u, v});
        arrows.push_back({"d" + std::to_string(counter) + "_bwd", v, u});
        ++counter;
    }
    Quiver q(vertices, arrows);
    q.star = star;
    q.vertex_labels = labels;
    return q;
}

bool same_labeled_multigraph(const Quiver& a, const Quiver& b) {
    std::set<std::string> va(a.vertices().begin(), a.vertices().end());
    std::set<std::string> vb(b.vertices().begin(), b.vertices().end());
    if (va != vb) return false;
    if (a.vertex_labels != b.vertex_labels) return false;
    if (a.star.has_value() != b.star.has_value()) return false;
    if (a.star && *a.star != *b.star) return false;
    std::map<std::pair<std::string, std::string>, int> ca, cb;
    for (auto& ar : a.arrows()) ca[{ar.tail, ar.head}]++;
    for (auto& ar : b.arrows()) cb[{ar.tail, ar.head}]++;
    return ca == cb;
}

std::string dual_graph_to_dot_graph(const SimpleGraph& g) {
    std::string out = "graph dual {\n";
    for (auto& v : g.nodes) out += "  \"" + v + "\";\n";
    for (auto& [u, v] : g.edges) out += "  \"" + u + "\" -- \"" + v + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace nccr
