#include "nccr/moduli.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace nccr {

namespace {

Monomial path_monomial(const Path& p) {
    Monomial m;
    for (auto& a : p.arrows()) m = m * Monomial(a);
    return m;
}

std::string pair_to_string(const BinomialPair& p) {
    return p.lhs.to_string() + " = " + p.rhs.to_string();
}

}  // namespace

BinomialRelationSet commutativize(const Quiver& q, const std::vector<Relation>& rels) {
    BinomialRelationSet out;
    std::set<std::pair<Monomial, Monomial>> seen;
    for (auto& r : rels) {
        const auto& terms = r.element.terms();
        if (terms.size() != 2)
            throw std::invalid_argument("commutativize: relation '" + r.element.to_string() +
                                        "' is not a difference of two paths");
        auto it = terms.begin();
        auto [p1, c1] = *it;
        ++it;
        auto [p2, c2] = *it;
        if (!(c1 + c2).is_zero())
            throw std::invalid_argument("commutativize: relation '" + r.element.to_string() +
                                        "' is not a difference of two paths");
        for (auto& a : p1.arrows()) q.arrow(a);
        for (auto& a : p2.arrows()) q.arrow(a);
        Monomial m1 = path_monomial(p1), m2 = path_monomial(p2);
        if (m1 == m2) continue;  // identically satisfied once commuted
        if (m2 < m1) std::swap(m1, m2);
        if (seen.emplace(m1, m2).second) out.pairs.push_back({m1, m2});
    }
    return out;
}

BinomialCongruence::BinomialCongruence(const BinomialRelationSet& rels, int degree_slack,
                                       size_t visit_cap)
    : pairs_(rels.pairs), degree_slack_(degree_slack), visit_cap_(visit_cap) {}

bool BinomialCongruence::equivalent(const Monomial& a, const Monomial& b) const {
    if (a == b) return true;
    int cap = std::max(a.total_degree(), b.total_degree()) + degree_slack_;
    std::set<Monomial> visited{a};
    std::deque<Monomial> queue{a};
    while (!queue.empty() && visited.size() < visit_cap_) {
        Monomial cur = queue.front();
        queue.pop_front();
        for (auto& pr : pairs_) {
            for (int dir = 0; dir < 2; ++dir) {
                const Monomial& from = dir ? pr.rhs : pr.lhs;
                const Monomial& to = dir ? pr.lhs : pr.rhs;
                if (!cur.divisible_by(from)) continue;
                Monomial next = cur / from * to;
                if (next == b) return true;
                if (next.total_degree() > cap) continue;
                if (visited.insert(next).second) queue.push_back(next);
            }
        }
    }
    return false;
}

std::string InvariantIdentity::to_string() const {
    auto side = [](const std::map<std::string, int>& s) {
        std::string out;
        for (auto& [name, e] : s) {
            if (!out.empty()) out += "*";
            // class names are already printable monomial strings; parenthesize
            // compound ones so powers read unambiguously
            bool compound = name.find('*') != std::string::npos || name.find('^') != std::string::npos;
            out += compound && e != 1 ? "(" + name + ")" : name;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    };
    return side(lhs) + " = " + side(rhs);
}

namespace {

// enumerate all exponent assignments over the classes with weighted total
// degree <= bound
void enumerate_products(const std::vector<InvariantClass>& classes, int bound,
                        std::vector<std::map<std::string, int>>& out) {
    std::vector<int> e(classes.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (pos == classes.size()) {
            std::map<std::string, int> m;
            for (size_t i = 0; i < classes.size(); ++i)
                if (e[i]) m[classes[i].name] = e[i];
            if (!m.empty()) out.push_back(std::move(m));
            return;
        }
        int deg = classes[pos].degree();
        for (int v = 0; v * deg <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v * deg);
            e[pos] = 0;
            if (deg == 0) break;
        }
    };
    rec(0, bound);
}

Monomial expand_product(const std::vector<InvariantClass>& classes,
                        const std::map<std::string, int>& exps) {
    Monomial m;
    for (auto& c : classes) {
        auto it = exps.find(c.name);
        if (it != exps.end()) m = m * c.representative().pow(it->second);
    }
    return m;
}

// rewriting on class-exponent vectors by the accepted identities; decides
// whether a candidate identity is already a consequence
bool consequence_of(const std::map<std::string, int>& u, const std::map<std::string, int>& v,
                    const std::vector<InvariantIdentity>& accepted) {
    auto divisible = [](const std::map<std::string, int>& big, const std::map<std::string, int>& small) {
        for (auto& [k, e] : small) {
            auto it = big.find(k);
            if (it == big.end() || it->second < e) return false;
        }
        return true;
    };
    auto apply = [](std::map<std::string, int> m, const std::map<std::string, int>& from,
                    const std::map<std::string, int>& to) {
        for (auto& [k, e] : from) {
            m[k] -= e;
            if (m[k] == 0) m.erase(k);
        }
        for (auto& [k, e] : to) m[k] += e;
        return m;
    };
    std::set<std::map<std::string, int>> visited{u};
    std::deque<std::map<std::string, int>> queue{u};
    size_t cap = 20000;
    while (!queue.empty() && visited.size() < cap) {
        auto cur = queue.front();
        queue.pop_front();
        if (cur == v) return true;
        for (auto& id : accepted) {
            for (int dir = 0; dir < 2; ++dir) {
                const auto& from = dir ? id.rhs : id.lhs;
                const auto& to = dir ? id.lhs : id.rhs;
                if (!divisible(cur, from)) continue;
                auto next = apply(cur, from, to);
                if (visited.insert(next).second) queue.push_back(next);
            }
        }
    }
    return false;
}

}  // namespace

InvariantReport invariant_generators(const Quiver& q, const BinomialRelationSet& rels,
                                     const InvariantOptions& options) {
    InvariantReport report;
    const auto names = q.arrow_names();
    // cycle monoid: flow balance at every vertex (out-degree = in-degree,
    // counted with multiplicity; loops cancel on both sides)
    WeightSystem ws;
    ws.nvars = (int)names.size();
    for (auto& v : q.vertices()) {
        std::vector<long long> row(names.size(), 0);
        for (size_t i = 0; i < names.size(); ++i) {
            const Arrow& a = q.arrow(names[i]);
            if (a.tail == v) row[i] += 1;
            if (a.head == v) row[i] -= 1;
        }
        ws.z_rows.push_back(std::move(row));
    }
    if (!q.has_directed_cycle()) {
        // no oriented cycle, so the monoid is trivial and the basis empty
        report.certified = true;
        return report;
    }
    // every circulation decomposes into simple directed cycles, so scanning
    // up to the arrow count is exhaustive
    ws.complete_degree = (int)names.size();
    HilbertOptions hopt;
    hopt.degree_bound = options.degree_bound;
    hopt.parallel = options.parallel;
    HilbertResult hb = hilbert_basis(ws, hopt);
    if (!hb.certified)
        throw std::runtime_error(
            "invariant_generators: Hilbert basis not certified complete within degree bound " +
            std::to_string(options.degree_bound) +
            " (max generator degree " + std::to_string(hb.max_generator_degree) + ")");
    report.certified = true;
    report.scanned_degree = hb.scanned_degree;
    report.max_generator_degree = hb.max_generator_degree;

    std::vector<Monomial> gens;
    for (auto& e : hb.generators) {
        Monomial m;
        for (size_t i = 0; i < names.size(); ++i)
            if (e[i]) m.set_exponent(names[i], e[i]);
        gens.push_back(std::move(m));
    }
    // merge congruent generators into classes (union-find over pairwise checks)
    BinomialCongruence cong(rels);
    std::vector<int> parent(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) parent[i] = (int)i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            if (find((int)i) == find((int)j)) continue;
            if (cong.equivalent(gens[i], gens[j])) parent[find((int)j)] = find((int)i);
        }
    std::map<int, std::vector<Monomial>> grouped;
    for (size_t i = 0; i < gens.size(); ++i) grouped[find((int)i)].push_back(gens[i]);
    for (auto& [root, members] : grouped) {
        std::sort(members.begin(), members.end());
        InvariantClass c;
        c.members = members;
        c.name = members.front().to_string();
        report.classes.push_back(std::move(c));
    }
    std::sort(report.classes.begin(), report.classes.end(), [](const auto& a, const auto& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.representative() < b.representative();
    });

    int id_bound = options.identity_degree_bound.value_or(2 * std::max(1, report.max_generator_degree) + 2);
    report.identities = find_identities(report.classes, cong, id_bound);
    return report;
}

std::vector<InvariantIdentity> find_identities(const std::vector<InvariantClass>& classes,
                                               const BinomialCongruence& congruence,
                                               int degree_bound) {
    std::vector<std::map<std::string, int>> products;
    enumerate_products(classes, degree_bound, products);
    std::vector<std::pair<std::map<std::string, int>, Monomial>> expanded;
    for (auto& p : products) expanded.emplace_back(p, expand_product(classes, p));
    std::sort(expanded.begin(), expanded.end(), [](const auto& a, const auto& b) {
        int da = a.second.total_degree(), db = b.second.total_degree();
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::vector<InvariantIdentity> accepted;
    for (size_t i = 0; i < expanded.size(); ++i)
        for (size_t j = i + 1; j < expanded.size(); ++j) {
            if (expanded[i].first == expanded[j].first) continue;
            if (!congruence.equivalent(expanded[i].second, expanded[j].second)) continue;
            if (consequence_of(expanded[j].first, expanded[i].first, accepted)) continue;
            InvariantIdentity id;
            id.lhs = expanded[j].first;
            id.rhs = expanded[i].first;
            accepted.push_back(std::move(id));
        }
    return accepted;
}

namespace {

// spanning trees rooted at `root`; arrows oriented away from the root when
// away=true, toward it otherwise
std::vector<std::vector<std::string>> arborescences(const Quiver& q, const std::string& root,
                                                    bool away) {
    std::vector<std::vector<std::string>> result;
    std::vector<std::string> todo;
    for (auto& v : q.vertices())
        if (v != root) todo.push_back(v);
    size_t n = todo.size();
    // per non-root vertex, candidate connecting arrows
    std::vector<std::vector<std::string>> candidates(n);
    for (size_t i = 0; i < n; ++i)
        for (auto& a : q.arrows()) {
            const std::string& into = away ? a.head : a.tail;
            if (into == todo[i] && a.tail != a.head) candidates[i].push_back(a.name);
        }
    std::vector<std::string> pick(n);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == n) {
            // acyclicity: walking from each vertex along its pick must reach root
            for (size_t s = 0; s < n; ++s) {
                std::set<std::string> seen;
                std::string cur = todo[s];
                while (cur != root) {
                    if (!seen.insert(cur).second) return;  // cycle
                    size_t k = std::find(todo.begin(), todo.end(), cur) - todo.begin();
                    const Arrow& a = q.arrow(pick[k]);
                    cur = away ? a.tail : a.head;
                }
            }
            std::vector<std::string> tree(pick.begin(), pick.end());
            std::sort(tree.begin(), tree.end());
            result.push_back(std::move(tree));
            return;
        }
        for (auto& c : candidates[i]) {
            pick[i] = c;
            rec(i + 1);
        }
    };
    if (n == 0)
        result.push_back({});
    else
        rec(0);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

// substitute current expressions into an arrow monomial
Monomial substitute_expressions(const Monomial& m, const std::map<std::string, Monomial>& expr) {
    return m.substitute(expr);
}

struct SolveOutcome {
    bool resolved = false;
    std::map<std::string, Monomial> expressions;
    std::vector<std::string> free_coords;
    std::vector<std::string> stuck;
};

SolveOutcome solve_tree(const Quiver& q, const BinomialRelationSet& rels,
                        const std::vector<std::string>& tree) {
    SolveOutcome out;
    std::set<std::string> tree_set(tree.begin(), tree.end());
    std::map<std::string, Monomial> expr;
    std::set<std::string> active;  // symbols still standing for themselves
    for (auto& a : q.arrow_names()) {
        if (tree_set.count(a)) {
            expr[a] = Monomial::one();
        } else {
            expr[a] = Monomial(a);
            active.insert(a);
        }
    }
    auto residue = [&](const BinomialPair& p) {
        return substitute_expressions(p.lhs, expr) / substitute_expressions(p.rhs, expr);
    };
    while (true) {
        bool progressed = false;
        for (auto& p : rels.pairs) {
            Monomial r = residue(p);
            if (r.is_one()) continue;
            // find an eliminable symbol: exponent +-1, all other exponents of
            // the opposite sign (so the solved value is a genuine monomial)
            std::string chosen;
            int chosen_sign = 0;
            for (auto& [sym, e] : r.exponents()) {
                if (e != 1 && e != -1) continue;
                if (!active.count(sym)) continue;  // tree symbols never appear here
                bool clean = true;
                for (auto& [t, f] : r.exponents())
                    if (t != sym && f * e > 0) clean = false;
                if (!clean) continue;
                if (chosen.empty() || chosen < sym) {
                    chosen = sym;
                    chosen_sign = e;
                }
            }
            if (chosen.empty()) continue;
            // r = chosen^{sign} * rest = 1  =>  chosen = rest^{-sign}
            Monomial rest = r / Monomial(chosen, chosen_sign);
            Monomial value = rest.pow(-chosen_sign);
            std::map<std::string, Monomial> sub{{chosen, value}};
            for (auto& [a, m] : expr) m = m.substitute(sub);
            active.erase(chosen);
            progressed = true;
        }
        if (!progressed) break;
    }
    for (auto& p : rels.pairs) {
        Monomial r = residue(p);
        if (!r.is_one()) out.stuck.push_back(pair_to_string({substitute_expressions(p.lhs, expr),
                                                             substitute_expressions(p.rhs, expr)}));
    }
    if (!out.stuck.empty()) return out;
    for (auto& [a, m] : expr)
        if (!m.all_nonnegative()) {
            out.stuck.push_back(a + " = " + m.to_string());
            return out;
        }
    out.resolved = true;
    out.expressions = std::move(expr);
    out.free_coords.assign(active.begin(), active.end());
    std::sort(out.free_coords.begin(), out.free_coords.end());
    return out;
}

// rank over Q of the lattice spanned by the relation vectors
int relation_rank(const Quiver& q, const BinomialRelationSet& rels) {
    auto names = q.arrow_names();
    std::vector<std::vector<Rational>> rows;
    for (auto& p : rels.pairs) {
        std::vector<Rational> row(names.size(), Rational(0));
        for (size_t i = 0; i < names.size(); ++i)
            row[i] = Rational(p.lhs.exponent(names[i]) - p.rhs.exponent(names[i]));
        rows.push_back(std::move(row));
    }
    int rank = 0;
    size_t col = 0;
    while (col < names.size() && rank < (int)rows.size()) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == (size_t)rank || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (size_t c2 = col; c2 < names.size(); ++c2)
                rows[r][c2] = rows[r][c2] - f * rows[rank][c2];
        }
        ++rank;
        ++col;
    }
    return rank;
}

}  // namespace

std::pair<std::string, ChartMode> chart_regime(const Quiver& q, const StabilityParameter& theta) {
    std::vector<std::string> neg, pos;
    long long sum = 0;
    for (auto& v : q.vertices()) {
        auto it = theta.find(v);
        if (it == theta.end()) throw std::invalid_argument("chart_regime: theta missing vertex " + v);
        if (it->second < 0) neg.push_back(v);
        if (it->second > 0) pos.push_back(v);
        sum += it->second;
    }
    if (sum != 0) throw std::invalid_argument("chart_regime: theta(alpha) must be 0");
    if (neg.size() == 1 && pos.size() + 1 == q.vertices().size()) return {neg[0], ChartMode::Star};
    if (pos.size() == 1 && neg.size() + 1 == q.vertices().size()) return {pos[0], ChartMode::Costar};
    throw std::invalid_argument(
        "chart_regime: theta lies in neither a star nor a co-star chamber; chart enumeration "
        "for general chambers is not supported");
}

ChartEnumeration enumerate_charts(const Quiver& q, const BinomialRelationSet& rels,
                                  const std::string& root, ChartMode mode) {
    q.vertex_index(root);
    ChartEnumeration result;
    result.mode = mode;
    result.root = root;
    int rank = relation_rank(q, rels);
    int expected_free = (int)q.arrows().size() - rank - ((int)q.vertices().size() - 1);
    for (auto& tree : arborescences(q, root, mode == ChartMode::Star)) {
        SolveOutcome s = solve_tree(q, rels, tree);
        if (!s.resolved) {
            result.unresolved.push_back({tree, s.stuck});
            continue;
        }
        if ((int)s.free_coords.size() != expected_free) {
            result.unresolved.push_back(
                {tree, {"free coordinate count " + std::to_string(s.free_coords.size()) +
                        " does not match arrows - relations - tree = " + std::to_string(expected_free)}});
            continue;
        }
        Chart c;
        c.tree = tree;
        c.free_coords = s.free_coords;
        c.expressions = s.expressions;
        result.charts.push_back(std::move(c));
    }
    // dedupe identical expression sets, then prune charts whose stable locus
    // sits inside another's (every tree arrow of the big chart is constant 1
    // on the small one)
    std::sort(result.charts.begin(), result.charts.end(),
              [](const Chart& a, const Chart& b) { return a.tree < b.tree; });
    std::vector<Chart> kept;
    for (auto& c : result.charts) {
        bool dup = false;
        for (auto& k : kept)
            if (k.expressions == c.expressions) dup = true;
        if (!dup) kept.push_back(c);
    }
    std::vector<Chart> pruned;
    for (size_t i = 0; i < kept.size(); ++i) {
        bool contained = false;
        for (size_t j = 0; j < kept.size() && !contained; ++j) {
            if (i == j) continue;
            bool inside = true;
            for (auto& t : kept[j].tree)
                if (!kept[i].expressions.at(t).is_one()) inside = false;
            // strictly smaller: same containment the other way must fail
            if (inside) {
                bool reverse = true;
                for (auto& t : kept[i].tree)
                    if (!kept[j].expressions.at(t).is_one()) reverse = false;
                if (!reverse) contained = true;
            }
        }
        if (!contained) pruned.push_back(kept[i]);
    }
    result.charts = std::move(pruned);
    return result;
}

Transition transition(const Quiver& q, const ChartEnumeration& enumeration, const Chart& from,
                      const Chart& to) {
    // gauge factors per vertex, solved along the target tree
    std::map<std::string, Monomial> gauge;
    gauge[enumeration.root] = Monomial::one();
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& t : to.tree) {
            const Arrow& a = q.arrow(t);
            const Monomial& val = from.expressions.at(t);
            bool know_tail = gauge.count(a.tail), know_head = gauge.count(a.head);
            if (know_tail && !know_head) {
                // lambda_t^{-1} * val * lambda_h = 1
                gauge[a.head] = gauge[a.tail] / val;
                grew = true;
            } else if (know_head && !know_tail) {
                gauge[a.tail] = gauge[a.head] * val;
                grew = true;
            }
        }
    }
    if (gauge.size() != q.vertices().size())
        throw std::invalid_argument("transition: charts do not come from the same enumeration");
    Transition tr;
    std::set<std::string> domain;
    for (auto& t : to.tree)
        for (auto& [v, e] : from.expressions.at(t).exponents()) domain.insert(v);
    tr.nonzero_domain.assign(domain.begin(), domain.end());
    for (auto& f : to.free_coords) {
        const Arrow& a = q.arrow(f);
        tr.coordinate_images[f] = from.expressions.at(f) * gauge.at(a.head) / gauge.at(a.tail);
    }
    return tr;
}

std::vector<Monomial> base_map(const Chart& chart, const std::vector<InvariantClass>& classes) {
    std::vector<Monomial> out;
    for (auto& c : classes) out.push_back(c.representative().substitute(chart.expressions));
    return out;
}

DualGraph exceptional_dual_graph(const Quiver& q, const ChartEnumeration& enumeration,
                                 const std::vector<InvariantClass>& classes) {
    const auto& charts = enumeration.charts;
    for (auto& c : charts)
        if (c.free_coords.size() != 2)
            throw std::invalid_argument("exceptional_dual_graph: charts must have exactly 2 free coordinates");
    // exceptional axes: {x=0} survives over the base origin iff every base
    // monomial contains x
    std::vector<std::vector<std::string>> axes(charts.size());
    std::vector<std::vector<Monomial>> bases;
    for (size_t i = 0; i < charts.size(); ++i) {
        bases.push_back(base_map(charts[i], classes));
        for (auto& x : charts[i].free_coords) {
            bool all_contain = true;
            for (auto& b : bases.back())
                if (b.exponent(x) <= 0) all_contain = false;
            if (all_contain) axes[i].push_back(x);
        }
    }
    // union-find over (chart, axis)
    std::vector<std::pair<size_t, std::string>> items;
    for (size_t i = 0; i < charts.size(); ++i)
        for (auto& x : axes[i]) items.emplace_back(i, x);
    auto item_index = [&](size_t chart, const std::string& x) -> int {
        for (size_t k = 0; k < items.size(); ++k)
            if (items[k].first == chart && items[k].second == x) return (int)k;
        return -1;
    };
    std::vector<int> parent(items.size());
    for (size_t k = 0; k < items.size(); ++k) parent[k] = (int)k;
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (size_t i = 0; i < charts.size(); ++i) {
        for (size_t j = 0; j < charts.size(); ++j) {
            if (i == j) continue;
            Transition tr = transition(q, enumeration, charts[i], charts[j]);
            for (auto& x : axes[i]) {
                const std::string& other =
                    charts[i].free_coords[0] == x ? charts[i].free_coords[1] : charts[i].free_coords[0];
                // transition defined at the generic point of {x=0} iff the
                // domain avoids x
                bool defined = true;
                for (auto& d : tr.nonzero_domain)
                    if (d == x) defined = false;
                (void)other;
                if (!defined) continue;
                // image coordinate vanishes iff its monomial contains x
                std::vector<std::string> zero_coords;
                for (auto& [g, img] : tr.coordinate_images)
                    if (img.exponent(x) > 0) zero_coords.push_back(g);
                if (zero_coords.size() != 1) continue;  // lands in the torus or at a corner
                int a = item_index(i, x);
                int b = item_index(j, zero_coords[0]);
                if (a >= 0 && b >= 0) unite(a, b);
            }
        }
    }
    std::map<int, std::vector<std::pair<size_t, std::string>>> grouped;
    for (size_t k = 0; k < items.size(); ++k) grouped[find((int)k)].push_back(items[k]);
    DualGraph g;
    std::map<int, size_t> node_of_root;
    std::vector<std::pair<std::pair<size_t, std::string>, int>> ordered;
    for (auto& [root, members] : grouped) {
        auto sorted = members;
        std::sort(sorted.begin(), sorted.end());
        ordered.push_back({sorted.front(), root});
    }
    std::sort(ordered.begin(), ordered.end());
    for (auto& [minmember, root] : ordered) {
        node_of_root[root] = g.nodes.size();
        auto members = grouped[root];
        std::sort(members.begin(), members.end());
        g.nodes.push_back(std::move(members));
    }
    std::set<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < charts.size(); ++i) {
        if (axes[i].size() != 2) continue;
        size_t n1 = node_of_root[find(item_index(i, axes[i][0]))];
        size_t n2 = node_of_root[find(item_index(i, axes[i][1]))];
        if (n1 == n2) continue;
        edges.emplace(std::min(n1, n2), std::max(n1, n2));
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

std::string dual_graph_to_dot(const DualGraph& g) {
    std::string out = "graph dual {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        std::string label = "E" + std::to_string(i + 1);
        out += "  E" + std::to_string(i + 1) + " [label=\"" + label + "\"];\n";
    }
    for (auto& [a, b] : g.edges)
        out += "  E" + std::to_string(a + 1) + " -- E" + std::to_string(b + 1) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace nccr
