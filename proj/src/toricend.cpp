#include "nccr/toricend.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nccr {

AbelianAction AbelianAction::cyclic(int r, std::vector<long long> weights,
                                    std::vector<std::string> variables) {
    if (r < 1) throw std::invalid_argument("cyclic action: order must be positive");
    AbelianAction a;
    a.kind = Kind::Cyclic;
    a.r = r;
    for (auto& w : weights) w = ((w % r) + r) % r;
    a.weights = std::move(weights);
    a.variables = std::move(variables);
    if (a.variables.empty()) {
        static const char* defaults[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
        for (size_t i = 0; i < a.weights.size(); ++i)
            a.variables.push_back(i < 8 ? defaults[i] : "x" + std::to_string(i));
    }
    if (a.variables.size() != a.weights.size())
        throw std::invalid_argument("cyclic action: weights and variables disagree");
    return a;
}

AbelianAction AbelianAction::torus(std::vector<long long> weights,
                                   std::vector<std::string> variables) {
    bool pos = false, neg = false;
    for (auto w : weights) {
        pos |= w > 0;
        neg |= w < 0;
    }
    if (!pos || !neg)
        throw std::invalid_argument("torus action: need at least one positive and one negative weight");
    AbelianAction a;
    a.kind = Kind::Torus;
    a.weights = std::move(weights);
    a.variables = std::move(variables);
    if (a.variables.empty())
        for (size_t i = 0; i < a.weights.size(); ++i) a.variables.push_back("x" + std::to_string(i + 1));
    if (a.variables.size() != a.weights.size())
        throw std::invalid_argument("torus action: weights and variables disagree");
    return a;
}

long long AbelianAction::weight_of(const Monomial& m) const {
    long long s = 0;
    for (auto& [v, e] : m.exponents()) {
        auto it = std::find(variables.begin(), variables.end(), v);
        if (it == variables.end()) throw std::invalid_argument("weight_of: unknown variable " + v);
        s += weights[it - variables.begin()] * e;
    }
    if (kind == Kind::Cyclic) s = ((s % r) + r) % r;
    return s;
}

bool AbelianAction::gorenstein() const {
    long long s = 0;
    for (auto w : weights) s += w;
    return kind == Kind::Cyclic ? s % r == 0 : s == 0;
}

namespace {

Monomial from_exponents(const std::vector<int>& e, const std::vector<std::string>& names) {
    Monomial m;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i]) m.set_exponent(names[i], e[i]);
    return m;
}

WeightSystem invariant_system(const AbelianAction& act) {
    WeightSystem ws;
    ws.nvars = (int)act.weights.size();
    if (act.kind == AbelianAction::Kind::Cyclic) {
        ws.mod_rows.emplace_back(act.r, std::vector<long long>(act.weights.begin(), act.weights.end()));
        // generators live in the box below the pure-power invariants x_l^{r/gcd}
        int box = 0;
        for (auto a : act.weights) box += act.r / (int)std::gcd((long long)act.r, a == 0 ? act.r : a);
        ws.complete_degree = box;
    } else {
        ws.z_rows.push_back(std::vector<long long>(act.weights.begin(), act.weights.end()));
        // Lambert bound for a single equation: the positive part of a generator
        // is at most max negative weight and vice versa
        long long mp = 0, mn = 0;
        for (auto w : act.weights) {
            mp = std::max(mp, w);
            mn = std::max(mn, -w);
        }
        ws.complete_degree = (int)(mp + mn);
    }
    return ws;
}

}  // namespace

GeneratorList invariant_ring_generators(const AbelianAction& act, int degree_bound, bool parallel) {
    HilbertOptions opt;
    opt.degree_bound = degree_bound;
    opt.parallel = parallel;
    HilbertResult hr = hilbert_basis(invariant_system(act), opt);
    if (!hr.certified)
        throw std::runtime_error("invariant_ring_generators: not certified complete at degree bound " +
                                 std::to_string(degree_bound));
    GeneratorList gl;
    gl.certified = true;
    gl.scanned_degree = hr.scanned_degree;
    gl.max_generator_degree = hr.max_generator_degree;
    for (auto& e : hr.generators) gl.generators.push_back(from_exponents(e, act.variables));
    std::sort(gl.generators.begin(), gl.generators.end());
    return gl;
}

GeneratorList module_generators(const AbelianAction& act, int weight_class, int degree_bound,
                                bool parallel) {
    if (act.kind != AbelianAction::Kind::Cyclic)
        throw std::invalid_argument("module_generators: cyclic actions only");
    int target = ((weight_class % act.r) + act.r) % act.r;
    if (target == 0) {
        GeneratorList gl;  // S_0 is generated by 1 over itself
        gl.generators.push_back(Monomial::one());
        gl.certified = true;
        return gl;
    }
    GeneratorList inv = invariant_ring_generators(act, degree_bound, parallel);
    // Any generator of S_i has exponent of x_l below the pure-power invariant
    // degree r/gcd(a_l, r), so scanning the box up to the sum of those bounds
    // is provably complete.
    size_t n = act.weights.size();
    int box_degree = 0;
    for (auto a : act.weights) box_degree += act.r / (int)std::gcd((long long)act.r, a == 0 ? act.r : a);
    int scan_to = std::min(degree_bound, box_degree);
    GeneratorList gl;
    int last_found = 0;
    for (int d = 1; d <= scan_to; ++d) {
        std::vector<int> e(n, 0);
        bool found_at_d = false;
        std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
            if (pos == n - 1) {
                e[pos] = left;
                Monomial m = from_exponents(e, act.variables);
                if (act.weight_of(m) == target) {
                    bool reducible = false;
                    for (auto& g : inv.generators)
                        if (m.divisible_by(g)) reducible = true;
                    if (!reducible) {
                        gl.generators.push_back(m);
                        found_at_d = true;
                    }
                }
                e[pos] = 0;
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[pos] = v;
                rec(pos + 1, left - v);
            }
            e[pos] = 0;
        };
        rec(0, d);
        if (found_at_d) last_found = d;
        gl.scanned_degree = d;
    }
    gl.max_generator_degree = last_found;
    gl.certified = scan_to >= box_degree;
    if (!gl.certified)
        throw std::runtime_error("module_generators: degree bound " + std::to_string(degree_bound) +
                                 " is below the completeness box " + std::to_string(box_degree));
    std::sort(gl.generators.begin(), gl.generators.end());
    return gl;
}

Quiver endo_quiver(const AbelianAction& act, int degree_bound) {
    if (act.kind != AbelianAction::Kind::Cyclic)
        throw std::invalid_argument("endo_quiver: cyclic actions only");
    (void)degree_bound;
    std::vector<std::string> vertices;
    for (int i = 0; i < act.r; ++i) vertices.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    for (int i = 0; i < act.r; ++i)
        for (size_t l = 0; l < act.weights.size(); ++l) {
            int j = (int)((i + act.weights[l]) % act.r);
            arrows.push_back({act.variables[l] + "_" + std::to_string(i), std::to_string(i),
                              std::to_string(j)});
        }
    Quiver q(vertices, arrows);
    q.star = "0";
    for (auto& v : vertices) q.vertex_labels[v] = 1;
    return q;
}

std::vector<Monomial> irreducible_hom_generators(const AbelianAction& act, int from_class,
                                                 int to_class, int degree_bound) {
    std::vector<int> all;
    for (int i = 0; i < act.r; ++i) all.push_back(i);
    int w = (((to_class - from_class) % act.r) + act.r) % act.r;
    GeneratorList gens = module_generators(act, w, degree_bound);
    std::vector<Monomial> out;
    for (auto& m : gens.generators) {
        // reducible iff m = m1*m2 with both nonconstant (any split passes
        // through some weight class, and all classes are present here)
        if (m.total_degree() >= 2) continue;
        if (m.is_one()) continue;
        out.push_back(m);
    }
    return out;
}

Quiver endo_quiver_summands(const AbelianAction& act, const std::vector<int>& kept_classes,
                            int degree_bound) {
    if (act.kind != AbelianAction::Kind::Cyclic)
        throw std::invalid_argument("endo_quiver_summands: cyclic actions only");
    std::vector<int> kept = kept_classes;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (int k : kept)
        if (k < 0 || k >= act.r) throw std::invalid_argument("endo_quiver_summands: class out of range");
    std::vector<std::string> vertices;
    for (int k : kept) vertices.push_back(std::to_string(k));
    std::vector<Arrow> arrows;
    for (int i : kept)
        for (int j : kept) {
            int w = (((j - i) % act.r) + act.r) % act.r;
            if (w == 0 && i == j) continue;  // identity maps are not arrows
            GeneratorList gens = module_generators(act, w, degree_bound);
            int counter = 0;
            for (auto& m : gens.generators) {
                if (m.is_one()) continue;
                // factor through a kept intermediate: m = m1 * m2, both
                // nonconstant, with weight(m1) landing on a kept class
                bool reducible = false;
                std::vector<Monomial> divisors{Monomial::one()};
                for (auto& [var, e] : m.exponents()) {
                    std::vector<Monomial> next;
                    for (auto& d : divisors)
                        for (int p = 0; p <= e; ++p) next.push_back(d * Monomial(var).pow(p));
                    divisors = std::move(next);
                }
                for (auto& m1 : divisors) {
                    if (m1.is_one() || m1 == m) continue;
                    int mid = (int)((i + act.weight_of(m1)) % act.r);
                    if (std::find(kept.begin(), kept.end(), mid) == kept.end()) continue;
                    // both m1 and m/m1 are honest monomial maps through S_mid
                    reducible = true;
                    break;
                }
                if (!reducible)
                    arrows.push_back({m.to_string() + "_" + std::to_string(i) + "_" +
                                          std::to_string(counter++),
                                      std::to_string(i), std::to_string(j)});
            }
        }
    Quiver q(vertices, arrows);
    return q;
}

}  // namespace nccr
