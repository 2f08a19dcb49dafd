#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "nccr/moduli.hpp"
#include "nccr/rep.hpp"

using namespace nccr;

namespace {

Relation rel(const Quiver& q, const std::vector<std::string>& lhs,
             const std::vector<std::string>& rhs) {
    AlgebraElement e;
    e.add_term(Path::of_arrows(q, lhs), Rational(1));
    e.add_term(Path::of_arrows(q, rhs), Rational(-1));
    return make_relation(q, e);
}

struct Fixture {
    Quiver quiver;
    std::vector<Relation> relations;
};

Fixture z3() {
    Quiver q({"0", "1", "2"},
             {{"c1", "0", "1"}, {"c2", "1", "2"}, {"c3", "2", "0"},
              {"a1", "1", "0"}, {"a2", "2", "1"}, {"a3", "0", "2"}});
    std::vector<Relation> rels{rel(q, {"c1", "a1"}, {"a3", "c3"}),
                               rel(q, {"c2", "a2"}, {"a1", "c1"}),
                               rel(q, {"c3", "a3"}, {"a2", "c2"})};
    return {std::move(q), std::move(rels)};
}

Fixture kronecker() {
    Quiver q({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}});
    return {std::move(q), {}};
}

Fixture blowup() {
    Quiver q({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}, {"t", "1", "0"}});
    std::vector<Relation> rels{rel(q, {"a", "t", "b"}, {"b", "t", "a"})};
    return {std::move(q), std::move(rels)};
}

// doubled 2-cycle with the A1 relations
Fixture half_one_one() {
    Quiver q({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}, {"s", "1", "0"}, {"t", "1", "0"}});
    std::vector<Relation> rels{rel(q, {"a", "t"}, {"b", "s"}), rel(q, {"t", "a"}, {"s", "b"})};
    return {std::move(q), std::move(rels)};
}

// suspended pinch point
Fixture spp() {
    Quiver q({"0", "1", "2"},
             {{"c1", "0", "1"}, {"c2", "1", "2"}, {"c3", "2", "0"},
              {"a1", "1", "0"}, {"a2", "2", "1"}, {"a3", "0", "2"}, {"z", "1", "1"}});
    std::vector<Relation> rels{
        rel(q, {"z", "c2"}, {"c2", "c3", "a3"}), rel(q, {"z", "a1"}, {"a1", "a3", "c3"}),
        rel(q, {"c1", "z"}, {"a3", "c3", "c1"}), rel(q, {"a2", "z"}, {"c3", "a3", "a2"}),
        rel(q, {"c2", "a2"}, {"a1", "c1"}),      rel(q, {"a3", "a2", "c2"}, {"c1", "a1", "a3"}),
        rel(q, {"c3", "c1", "a1"}, {"a2", "c2", "c3"})};
    return {std::move(q), std::move(rels)};
}

// two vertices, doubled arrows both ways plus loops; the Rep//GL counterexample
Fixture ex_3_15() {
    Quiver q({"0", "1"},
             {{"a", "0", "1"}, {"b", "0", "1"}, {"s", "1", "0"}, {"t", "1", "0"},
              {"v", "0", "0"}, {"w", "1", "1"}});
    std::vector<Relation> rels{rel(q, {"v", "a"}, {"a", "w"}), rel(q, {"v", "b"}, {"b", "w"}),
                               rel(q, {"w", "s"}, {"s", "v"}), rel(q, {"w", "t"}, {"t", "v"}),
                               rel(q, {"a", "t"}, {"b", "s"}), rel(q, {"t", "a"}, {"s", "b"})};
    return {std::move(q), std::move(rels)};
}

Monomial mono(const std::string& s) { return Monomial::parse(s); }

const Chart& chart_with_tree(const ChartEnumeration& en, std::vector<std::string> tree) {
    std::sort(tree.begin(), tree.end());
    for (auto& c : en.charts)
        if (c.tree == tree) return c;
    REQUIRE(false);
    return en.charts.front();
}

const InvariantClass* class_containing(const InvariantReport& rep, const std::string& member) {
    Monomial m = mono(member);
    for (auto& c : rep.classes)
        for (auto& x : c.members)
            if (x == m) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("commutativize the running 3-cycle relations") {
    auto [q, rels] = z3();
    BinomialRelationSet brs = commutativize(q, rels);
    REQUIRE(brs.pairs.size() == 3);
    // pairs generate c1 a1 = c2 a2 = c3 a3
    std::set<std::set<Monomial>> got;
    for (auto& p : brs.pairs) got.insert({p.lhs, p.rhs});
    std::set<std::set<Monomial>> want{{mono("a1*c1"), mono("a3*c3")},
                                      {mono("a1*c1"), mono("a2*c2")},
                                      {mono("a2*c2"), mono("a3*c3")}};
    CHECK(got == want);
}

TEST_CASE("commutativize drops identically satisfied relations") {
    auto [q, rels] = blowup();
    CHECK(commutativize(q, rels).pairs.empty());
    CHECK(commutativize(q, {}).pairs.empty());
}

TEST_CASE("commutativize rejects non-binomial relations") {
    auto [q, rels] = kronecker();
    AlgebraElement e;
    e.add_term(Path::of_arrows(q, {"a"}), Rational(1));
    e.add_term(Path::of_arrows(q, {"b"}), Rational(-2));
    std::vector<Relation> bad{make_relation(q, e)};
    CHECK_THROWS_AS(static_cast<void>(commutativize(q, bad)), std::invalid_argument);
    AlgebraElement tri;
    tri.add_term(Path::of_arrows(q, {"a"}), Rational(1));
    CHECK_THROWS(static_cast<void>(commutativize(q, {make_relation(q, tri)})));
}

TEST_CASE("SPP relations all commutativize as binomials") {
    auto [q, rels] = spp();
    BinomialRelationSet brs = commutativize(q, rels);
    CHECK(!brs.pairs.empty());
    for (auto& p : brs.pairs) {
        CHECK(p.lhs.all_nonnegative());
        CHECK(p.rhs.all_nonnegative());
    }
}

TEST_CASE("invariant generators of the 3-cycle: A, B, C with AB = C^3") {
    auto [q, rels] = z3();
    InvariantReport rep = invariant_generators(q, commutativize(q, rels));
    CHECK(rep.certified);
    REQUIRE(rep.classes.size() == 3);
    const InvariantClass* C = class_containing(rep, "a1*c1");
    REQUIRE(C);
    CHECK(C->members == std::vector<Monomial>{mono("a1*c1"), mono("a2*c2"), mono("a3*c3")});
    const InvariantClass* A = class_containing(rep, "c1*c2*c3");
    const InvariantClass* B = class_containing(rep, "a1*a2*a3");
    REQUIRE(A);
    REQUIRE(B);
    CHECK(A->members.size() == 1);
    CHECK(B->members.size() == 1);
    // the single identity AB = C^3
    REQUIRE(rep.identities.size() == 1);
    auto& id = rep.identities[0];
    std::map<std::string, int> ab{{A->name, 1}, {B->name, 1}};
    std::map<std::string, int> c3{{C->name, 3}};
    CHECK(((id.lhs == ab && id.rhs == c3) || (id.lhs == c3 && id.rhs == ab)));
}

TEST_CASE("invariant generators of the blowup quiver: at, bt, no relations") {
    auto [q, rels] = blowup();
    InvariantReport rep = invariant_generators(q, commutativize(q, rels));
    REQUIRE(rep.classes.size() == 2);
    CHECK(rep.classes[0].name == "a*t");
    CHECK(rep.classes[1].name == "b*t");
    CHECK(rep.identities.empty());
}

TEST_CASE("no oriented cycle means no invariants") {
    auto [q, rels] = kronecker();
    InvariantReport rep = invariant_generators(q, commutativize(q, rels));
    CHECK(rep.certified);
    CHECK(rep.classes.empty());
    CHECK(rep.identities.empty());
}

TEST_CASE("the Rep//GL counterexample reports five classes and four identities") {
    auto [q, rels] = ex_3_15();
    InvariantReport rep = invariant_generators(q, commutativize(q, rels));
    REQUIRE(rep.classes.size() == 5);
    const InvariantClass* R1 = class_containing(rep, "a*s");
    const InvariantClass* R2 = class_containing(rep, "a*t");
    const InvariantClass* R3 = class_containing(rep, "b*t");
    const InvariantClass* V = class_containing(rep, "v");
    const InvariantClass* W = class_containing(rep, "w");
    REQUIRE(R1);
    REQUIRE(R2);
    REQUIRE(R3);
    REQUIRE(V);
    REQUIRE(W);
    // at and bs are one generator; v and w stay separate
    CHECK(R2->members == std::vector<Monomial>{mono("a*t"), mono("b*s")});
    CHECK(V->members == std::vector<Monomial>{mono("v")});
    CHECK(W->members == std::vector<Monomial>{mono("w")});
    // identities: R2^2 = R1 R3 and (v - w) R_i for i = 1, 2, 3
    REQUIRE(rep.identities.size() == 4);
    auto has_identity = [&](std::map<std::string, int> lhs, std::map<std::string, int> rhs) {
        for (auto& id : rep.identities)
            if ((id.lhs == lhs && id.rhs == rhs) || (id.lhs == rhs && id.rhs == lhs)) return true;
        return false;
    };
    CHECK(has_identity({{R2->name, 2}}, {{R1->name, 1}, {R3->name, 1}}));
    CHECK(has_identity({{V->name, 1}, {R1->name, 1}}, {{W->name, 1}, {R1->name, 1}}));
    CHECK(has_identity({{V->name, 1}, {R2->name, 1}}, {{W->name, 1}, {R2->name, 1}}));
    CHECK(has_identity({{V->name, 1}, {R3->name, 1}}, {{W->name, 1}, {R3->name, 1}}));
}

TEST_CASE("three charts for the 3-cycle match the worked example") {
    auto [q, rels] = z3();
    ChartEnumeration en = enumerate_charts(q, commutativize(q, rels), "0");
    CHECK(en.unresolved.empty());
    REQUIRE(en.charts.size() == 3);
    const Chart& u1 = chart_with_tree(en, {"c1", "c2"});
    CHECK(u1.free_coords == std::vector<std::string>{"a3", "c3"});
    CHECK(u1.expressions.at("a1") == mono("a3*c3"));
    CHECK(u1.expressions.at("a2") == mono("a3*c3"));
    CHECK(u1.expressions.at("c1").is_one());
    const Chart& u2 = chart_with_tree(en, {"a3", "c1"});
    CHECK(u2.free_coords == std::vector<std::string>{"a2", "c2"});
    CHECK(u2.expressions.at("c3") == mono("a2*c2"));
    CHECK(u2.expressions.at("a1") == mono("a2*c2"));
    const Chart& u3 = chart_with_tree(en, {"a2", "a3"});
    CHECK(u3.free_coords == std::vector<std::string>{"a1", "c1"});
    CHECK(u3.expressions.at("c2") == mono("a1*c1"));
    CHECK(u3.expressions.at("c3") == mono("a1*c1"));
}

TEST_CASE("charts satisfy the binomial relations identically") {
    for (auto fix : {z3(), spp(), half_one_one()}) {
        BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
        ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
        for (auto& c : en.charts)
            for (auto& p : brs.pairs)
                CHECK(p.lhs.substitute(c.expressions) == p.rhs.substitute(c.expressions));
    }
}

TEST_CASE("two charts for the Kronecker and blowup quivers") {
    {
        auto [q, rels] = kronecker();
        ChartEnumeration en = enumerate_charts(q, commutativize(q, rels), "0");
        REQUIRE(en.charts.size() == 2);
        CHECK(chart_with_tree(en, {"a"}).free_coords == std::vector<std::string>{"b"});
        CHECK(chart_with_tree(en, {"b"}).free_coords == std::vector<std::string>{"a"});
    }
    {
        auto [q, rels] = blowup();
        ChartEnumeration en = enumerate_charts(q, commutativize(q, rels), "0");
        REQUIRE(en.charts.size() == 2);
        const Chart& u0 = chart_with_tree(en, {"a"});
        CHECK(u0.free_coords == std::vector<std::string>{"b", "t"});
        const Chart& u1 = chart_with_tree(en, {"b"});
        CHECK(u1.free_coords == std::vector<std::string>{"a", "t"});
    }
}

TEST_CASE("transitions match the printed gluings") {
    auto [q, rels] = z3();
    ChartEnumeration en = enumerate_charts(q, commutativize(q, rels), "0");
    const Chart& u1 = chart_with_tree(en, {"c1", "c2"});
    const Chart& u2 = chart_with_tree(en, {"a3", "c1"});
    const Chart& u3 = chart_with_tree(en, {"a2", "a3"});
    // (a,b) -> (c,d) = (b^{-1}, a b^2) with a=c3, b=a3, c=c2, d=a2
    Transition t12 = transition(q, en, u1, u2);
    CHECK(t12.coordinate_images.at("c2") == mono("a3^-1"));
    CHECK(t12.coordinate_images.at("a2") == mono("a3^2*c3"));
    CHECK(t12.nonzero_domain == std::vector<std::string>{"a3"});
    // (c,d) -> (e,f) = (d^{-1}, c d^2) with e=c1, f=a1
    Transition t23 = transition(q, en, u2, u3);
    CHECK(t23.coordinate_images.at("c1") == mono("a2^-1"));
    CHECK(t23.coordinate_images.at("a1") == mono("a2^2*c2"));
    CHECK(t23.nonzero_domain == std::vector<std::string>{"a2"});
    // Kronecker: b -> b^{-1}
    auto [kq, krels] = kronecker();
    ChartEnumeration ken = enumerate_charts(kq, commutativize(kq, krels), "0");
    Transition kt = transition(kq, ken, chart_with_tree(ken, {"a"}), chart_with_tree(ken, {"b"}));
    CHECK(kt.coordinate_images.at("a") == mono("b^-1"));
    // blowup: (b,t) -> (b^{-1}, b t)
    auto [bq, brels] = blowup();
    ChartEnumeration ben = enumerate_charts(bq, commutativize(bq, brels), "0");
    Transition bt = transition(bq, ben, chart_with_tree(ben, {"a"}), chart_with_tree(ben, {"b"}));
    CHECK(bt.coordinate_images.at("a") == mono("b^-1"));
    CHECK(bt.coordinate_images.at("t") == mono("b*t"));
}

TEST_CASE("transition cocycle condition on all chart triples") {
    for (auto fix : {z3(), spp(), half_one_one()}) {
        BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
        ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
        for (auto& c1 : en.charts)
            for (auto& c2 : en.charts)
                for (auto& c3 : en.charts) {
                    Transition t12 = transition(fix.quiver, en, c1, c2);
                    Transition t23 = transition(fix.quiver, en, c2, c3);
                    Transition t13 = transition(fix.quiver, en, c1, c3);
                    std::map<std::string, Monomial> sub = t12.coordinate_images;
                    for (auto& f : c3.free_coords) {
                        Monomial composed = t23.coordinate_images.at(f).substitute(sub);
                        CHECK(composed == t13.coordinate_images.at(f));
                    }
                }
    }
}

TEST_CASE("base maps of the 3-cycle charts reproduce the printed points") {
    auto [q, rels] = z3();
    BinomialRelationSet brs = commutativize(q, rels);
    ChartEnumeration en = enumerate_charts(q, brs, "0");
    InvariantReport rep = invariant_generators(q, brs);
    // class order: C (degree 2), then B = a-cycle, then A = c-cycle
    REQUIRE(rep.classes.size() == 3);
    CHECK(rep.classes[0].name == "a1*c1");
    CHECK(rep.classes[1].name == "a1*a2*a3");
    CHECK(rep.classes[2].name == "c1*c2*c3");
    auto base_of = [&](std::vector<std::string> tree) {
        return base_map(chart_with_tree(en, tree), rep.classes);
    };
    // U1 = (a, a^2 b^3, ab) in coordinates a = c3, b = a3, printed as (A, B, C)
    auto b1 = base_of({"c1", "c2"});
    CHECK(b1[2] == mono("c3"));
    CHECK(b1[1] == mono("a3^3*c3^2"));
    CHECK(b1[0] == mono("a3*c3"));
    // U2 = (c^2 d, c d^2, cd) with c = c2, d = a2
    auto b2 = base_of({"a3", "c1"});
    CHECK(b2[2] == mono("a2*c2^2"));
    CHECK(b2[1] == mono("a2^2*c2"));
    CHECK(b2[0] == mono("a2*c2"));
    // U3 = (e^3 f^2, f, ef) with e = c1, f = a1
    auto b3 = base_of({"a2", "a3"});
    CHECK(b3[2] == mono("a1^2*c1^3"));
    CHECK(b3[1] == mono("a1"));
    CHECK(b3[0] == mono("a1*c1"));
}

TEST_CASE("base maps commute with transitions") {
    for (auto fix : {z3(), half_one_one(), blowup()}) {
        BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
        ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
        InvariantReport rep = invariant_generators(fix.quiver, brs);
        for (auto& ca : en.charts)
            for (auto& cb : en.charts) {
                Transition t = transition(fix.quiver, en, ca, cb);
                auto base_a = base_map(ca, rep.classes);
                auto base_b = base_map(cb, rep.classes);
                for (size_t i = 0; i < base_a.size(); ++i)
                    CHECK(base_b[i].substitute(t.coordinate_images) == base_a[i]);
            }
    }
}

TEST_CASE("generic chart representations are stable") {
    auto fix = z3();
    BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
    ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
    StabilityParameter theta{{"0", -2}, {"1", 1}, {"2", 1}};
    for (auto& c : en.charts) {
        DimensionVector dims;
        for (auto& v : fix.quiver.vertices()) dims[v] = 1;
        std::map<std::string, Rational> coord_vals;
        long long k = 2;
        for (auto& f : c.free_coords) coord_vals[f] = Rational(k++, 1);
        std::map<std::string, PolyMatrix> mats;
        for (auto& [arrow, expr] : c.expressions) {
            Rational val(1);
            for (auto& [var, e] : expr.exponents())
                for (int i = 0; i < e; ++i) val *= coord_vals.at(var);
            PolyMatrix m(1, 1);
            m.at(0, 0) = Polynomial(val);
            mats[arrow] = std::move(m);
        }
        Representation rep(fix.quiver, dims, mats);
        CHECK(star_criterion(rep, "0"));
        CHECK(classify(rep, theta) == StabilityClass::Stable);
    }
}

TEST_CASE("SPP star and costar charts are affine 3-spaces") {
    auto fix = spp();
    BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
    for (auto& root : fix.quiver.vertices()) {
        for (ChartMode mode : {ChartMode::Star, ChartMode::Costar}) {
            ChartEnumeration en = enumerate_charts(fix.quiver, brs, root, mode);
            CHECK(en.unresolved.empty());
            CHECK(!en.charts.empty());
            for (auto& c : en.charts) {
                CHECK(c.free_coords.size() == 3);
                for (auto& [a, m] : c.expressions) CHECK(m.all_nonnegative());
            }
        }
    }
}

TEST_CASE("chart_regime recognizes star and costar chambers") {
    auto fix = spp();
    auto [r1, m1] = chart_regime(fix.quiver, {{"0", -2}, {"1", 1}, {"2", 1}});
    CHECK(r1 == "0");
    CHECK(m1 == ChartMode::Star);
    auto [r2, m2] = chart_regime(fix.quiver, {{"0", -1}, {"1", 2}, {"2", -1}});
    CHECK(r2 == "1");
    CHECK(m2 == ChartMode::Costar);
    CHECK_THROWS(chart_regime(fix.quiver, {{"0", -1}, {"1", 1}, {"2", 0}}));
    CHECK_THROWS(chart_regime(fix.quiver, {{"0", -1}, {"1", 2}, {"2", 1}}));
}

TEST_CASE("dual graph of the 3-cycle is the two-curve chain") {
    auto fix = z3();
    BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
    ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
    InvariantReport rep = invariant_generators(fix.quiver, brs);
    DualGraph g = exceptional_dual_graph(fix.quiver, en, rep.classes);
    REQUIRE(g.nodes.size() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == std::pair<size_t, size_t>{0, 1});
}

TEST_CASE("dual graph of the blowup is a single curve") {
    auto fix = blowup();
    BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
    ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
    InvariantReport rep = invariant_generators(fix.quiver, brs);
    DualGraph g = exceptional_dual_graph(fix.quiver, en, rep.classes);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("dual graph of the A1 quiver is a single curve") {
    auto fix = half_one_one();
    BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
    ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
    InvariantReport rep = invariant_generators(fix.quiver, brs);
    DualGraph g = exceptional_dual_graph(fix.quiver, en, rep.classes);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("unresolvable trees are reported, not dropped") {
    // doubled 3-cycle with commuting parallel arrows: the 1/3(1,1) quiver;
    // two of the four spanning trees force an invertible product and stall
    Quiver q({"0", "1", "2"},
             {{"x1", "0", "1"}, {"y1", "0", "1"}, {"x2", "1", "2"}, {"y2", "1", "2"},
              {"x3", "2", "0"}, {"y3", "2", "0"}});
    std::vector<Relation> rels{rel(q, {"x1", "y2"}, {"y1", "x2"}),
                               rel(q, {"x2", "y3"}, {"y2", "x3"}),
                               rel(q, {"x3", "y1"}, {"y3", "x1"})};
    ChartEnumeration en = enumerate_charts(q, commutativize(q, rels), "0");
    CHECK(en.charts.size() == 2);
    CHECK(en.unresolved.size() == 2);
    for (auto& c : en.charts) CHECK(c.free_coords.size() == 2);
}

TEST_CASE("charts with identical expression sets are deduplicated") {
    // two parallel arrows forced equal: both trees solve to the same chart
    Quiver q({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}});
    AlgebraElement e;
    e.add_term(Path::of_arrows(q, {"a"}), Rational(1));
    e.add_term(Path::of_arrows(q, {"b"}), Rational(-1));
    std::vector<Relation> rels{make_relation(q, e)};
    ChartEnumeration en = enumerate_charts(q, commutativize(q, rels), "0");
    CHECK(en.charts.size() == 1);
    CHECK(en.charts[0].free_coords.empty());
    CHECK(en.charts[0].expressions.at("a").is_one());
    CHECK(en.charts[0].expressions.at("b").is_one());
}

TEST_CASE("every low-degree cycle monomial factors through the generators") {
    for (auto fix : {z3(), spp()}) {
        BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
        InvariantReport rep = invariant_generators(fix.quiver, brs);
        std::vector<Monomial> basis;
        for (auto& cl : rep.classes)
            for (auto& m : cl.members) basis.push_back(m);
        // enumerate flow monomials up to twice the max generator degree and
        // peel generators greedily
        auto names = fix.quiver.arrow_names();
        int bound = 2 * rep.max_generator_degree;
        std::vector<int> e(names.size(), 0);
        std::function<void(size_t, int)> walk = [&](size_t pos, int left) {
            if (pos == names.size()) {
                Monomial m;
                for (size_t i = 0; i < names.size(); ++i)
                    if (e[i]) m.set_exponent(names[i], e[i]);
                if (m.is_one()) return;
                // flow balance at every vertex
                for (auto& v : fix.quiver.vertices()) {
                    long long flow = 0;
                    for (size_t i = 0; i < names.size(); ++i) {
                        const Arrow& a = fix.quiver.arrow(names[i]);
                        if (a.tail == v) flow += e[i];
                        if (a.head == v) flow -= e[i];
                    }
                    if (flow != 0) return;
                }
                Monomial rest = m;
                bool progress = true;
                while (!rest.is_one() && progress) {
                    progress = false;
                    for (auto& g : basis)
                        if (rest.divisible_by(g)) {
                            rest = rest / g;
                            progress = true;
                            break;
                        }
                }
                CHECK(rest.is_one());
                return;
            }
            for (int v = 0; v <= left; ++v) {
                e[pos] = v;
                walk(pos + 1, left - v);
            }
            e[pos] = 0;
        };
        walk(0, bound);
    }
}

TEST_CASE("generic chart representations are stable in every supported chamber") {
    auto fix = spp();
    BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
    std::vector<StabilityParameter> thetas = {
        {{"0", -2}, {"1", 1}, {"2", 1}},  {{"0", 1}, {"1", -2}, {"2", 1}},
        {{"0", 1}, {"1", 1}, {"2", -2}},  {{"0", 2}, {"1", -1}, {"2", -1}},
        {{"0", -1}, {"1", 2}, {"2", -1}}, {{"0", -1}, {"1", -1}, {"2", 2}}};
    for (auto& theta : thetas) {
        auto [root, mode] = chart_regime(fix.quiver, theta);
        ChartEnumeration en = enumerate_charts(fix.quiver, brs, root, mode);
        for (auto& c : en.charts) {
            DimensionVector dims;
            for (auto& v : fix.quiver.vertices()) dims[v] = 1;
            std::map<std::string, Rational> coord_vals;
            long long k = 2;
            for (auto& f : c.free_coords) coord_vals[f] = Rational(k++, 1);
            std::map<std::string, PolyMatrix> mats;
            for (auto& [arrow, expr] : c.expressions) {
                Rational val(1);
                for (auto& [var, e] : expr.exponents())
                    for (int i = 0; i < e; ++i) val *= coord_vals.at(var);
                PolyMatrix m(1, 1);
                m.at(0, 0) = Polynomial(val);
                mats[arrow] = std::move(m);
            }
            Representation rep(fix.quiver, dims, mats);
            CHECK(classify(rep, theta) == StabilityClass::Stable);
        }
    }
}

TEST_CASE("cocycle condition holds for costar enumerations too") {
    auto fix = spp();
    BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
    ChartEnumeration en = enumerate_charts(fix.quiver, brs, "1", ChartMode::Costar);
    REQUIRE(en.charts.size() >= 2);
    for (auto& c1 : en.charts)
        for (auto& c2 : en.charts)
            for (auto& c3 : en.charts) {
                Transition t12 = transition(fix.quiver, en, c1, c2);
                Transition t23 = transition(fix.quiver, en, c2, c3);
                Transition t13 = transition(fix.quiver, en, c1, c3);
                for (auto& f : c3.free_coords)
                    CHECK(t23.coordinate_images.at(f).substitute(t12.coordinate_images) ==
                          t13.coordinate_images.at(f));
            }
}

TEST_CASE("SPP invariants show the same center caveat as the two-vertex example") {
    // five classes, not the four coordinates of uv = x^2 y: z and c3 a3 agree
    // only after multiplying by another invariant
    auto fix = spp();
    InvariantReport rep = invariant_generators(fix.quiver, commutativize(fix.quiver, fix.relations));
    REQUIRE(rep.classes.size() == 5);
    const InvariantClass* Z = class_containing(rep, "z");
    const InvariantClass* Y = class_containing(rep, "a3*c3");
    const InvariantClass* C = class_containing(rep, "a1*c1");
    const InvariantClass* A = class_containing(rep, "c1*c2*c3");
    const InvariantClass* B = class_containing(rep, "a1*a2*a3");
    REQUIRE((Z && Y && C && A && B));
    CHECK(Z != Y);
    CHECK(C->members == std::vector<Monomial>{mono("a1*c1"), mono("a2*c2")});
    REQUIRE(rep.identities.size() == 4);
    auto has_identity = [&](std::map<std::string, int> lhs, std::map<std::string, int> rhs) {
        for (auto& id : rep.identities)
            if ((id.lhs == lhs && id.rhs == rhs) || (id.lhs == rhs && id.rhs == lhs)) return true;
        return false;
    };
    CHECK(has_identity({{C->name, 1}, {Y->name, 1}}, {{C->name, 1}, {Z->name, 1}}));
    CHECK(has_identity({{A->name, 1}, {Y->name, 1}}, {{A->name, 1}, {Z->name, 1}}));
    CHECK(has_identity({{B->name, 1}, {Y->name, 1}}, {{B->name, 1}, {Z->name, 1}}));
    CHECK(has_identity({{A->name, 1}, {B->name, 1}}, {{C->name, 2}, {Z->name, 1}}));
}

namespace {

// preprojective-style doubled r-cycle with the loop relations
Fixture a_series(int r) {
    std::vector<std::string> vs;
    for (int i = 0; i < r; ++i) vs.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    for (int k = 1; k <= r; ++k) {
        arrows.push_back({"c" + std::to_string(k), vs[k - 1], vs[k % r]});
        arrows.push_back({"a" + std::to_string(k), vs[k % r], vs[k - 1]});
    }
    Quiver q(vs, arrows);
    std::vector<Relation> rels;
    for (int v = 0; v < r; ++v) {
        int knext = v + 1;
        int kprev = v == 0 ? r : v;
        rels.push_back(rel(q, {"c" + std::to_string(knext), "a" + std::to_string(knext)},
                           {"a" + std::to_string(kprev), "c" + std::to_string(kprev)}));
    }
    return {std::move(q), std::move(rels)};
}

// McKay quiver of 1/r(a,b) with the commutation relations
Fixture gl_mckay(int r, int a, int b) {
    std::vector<std::string> vs;
    for (int i = 0; i < r; ++i) vs.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    for (int i = 0; i < r; ++i) {
        arrows.push_back({"x" + std::to_string(i), vs[i], vs[(i + a) % r]});
        arrows.push_back({"y" + std::to_string(i), vs[i], vs[(i + b) % r]});
    }
    Quiver q(vs, arrows);
    std::vector<Relation> rels;
    for (int i = 0; i < r; ++i)
        rels.push_back(rel(q, {"x" + std::to_string(i), "y" + std::to_string((i + a) % r)},
                           {"y" + std::to_string(i), "x" + std::to_string((i + b) % r)}));
    return {std::move(q), std::move(rels)};
}

}  // namespace

TEST_CASE("the whole A-series pipeline recovers the classical picture") {
    // r charts, invariants A, B, C with AB = C^r, and an A_{r-1} chain of
    // exceptional curves
    for (int r = 2; r <= 6; ++r) {
        Fixture fix = a_series(r);
        BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
        ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
        CHECK(en.unresolved.empty());
        CHECK((int)en.charts.size() == r);
        InvariantReport rep = invariant_generators(fix.quiver, brs);
        REQUIRE(rep.classes.size() == 3);
        const InvariantClass* C = class_containing(rep, "a1*c1");
        std::string a_cycle, b_cycle;
        {
            Monomial ma, mb;
            for (int k = 1; k <= r; ++k) {
                ma = ma * Monomial("c" + std::to_string(k));
                mb = mb * Monomial("a" + std::to_string(k));
            }
            a_cycle = ma.to_string();
            b_cycle = mb.to_string();
        }
        const InvariantClass* A = class_containing(rep, a_cycle);
        const InvariantClass* B = class_containing(rep, b_cycle);
        REQUIRE((C && A && B));
        CHECK((int)C->members.size() == r);  // the r two-cycles merge
        REQUIRE(rep.identities.size() == 1);
        // AB = C^r
        bool found = false;
        for (auto& id : rep.identities) {
            std::map<std::string, int> cr{{C->name, r}};
            std::map<std::string, int> ab{{A->name, 1}, {B->name, 1}};
            if ((id.lhs == cr && id.rhs == ab) || (id.lhs == ab && id.rhs == cr)) found = true;
        }
        CHECK(found);
        DualGraph g = exceptional_dual_graph(fix.quiver, en, rep.classes);
        CHECK((int)g.nodes.size() == r - 1);
        CHECK((int)g.edges.size() == r - 2);
        // the chain really is a path: every node meets at most two others
        std::map<size_t, int> degree;
        for (auto& [u, v] : g.edges) {
            degree[u]++;
            degree[v]++;
        }
        for (auto& [node, d] : degree) CHECK(d <= 2);
    }
}

TEST_CASE("GL cyclic pipelines land on their Hirzebruch-Jung resolutions") {
    {
        // 1/3(1,1): one exceptional curve; base is the cone over the twisted cubic
        Fixture fix = gl_mckay(3, 1, 1);
        BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
        ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
        CHECK(en.charts.size() == 2);
        InvariantReport rep = invariant_generators(fix.quiver, brs);
        CHECK(rep.classes.size() == 4);
        CHECK(rep.identities.size() == 3);  // the 2x2 minors of the twisted cubic
        DualGraph g = exceptional_dual_graph(fix.quiver, en, rep.classes);
        CHECK(g.nodes.size() == 1);
        CHECK(g.edges.empty());
    }
    {
        // 1/5(1,2): continued fraction [3,2], so two curves meeting once
        Fixture fix = gl_mckay(5, 1, 2);
        BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
        ChartEnumeration en = enumerate_charts(fix.quiver, brs, "0");
        CHECK(en.charts.size() == 3);
        CHECK(!en.unresolved.empty());  // covered trees are reported, not hidden
        InvariantReport rep = invariant_generators(fix.quiver, brs);
        CHECK(rep.classes.size() == 4);  // x^5, x^3 y, x y^2, y^5 in cycle form
        DualGraph g = exceptional_dual_graph(fix.quiver, en, rep.classes);
        CHECK(g.nodes.size() == 2);
        CHECK(g.edges.size() == 1);
    }
}

TEST_CASE("error paths surface with explicit messages") {
    // degree bound below the simple-cycle completeness bound
    auto fix = z3();
    BinomialRelationSet brs = commutativize(fix.quiver, fix.relations);
    InvariantOptions tight;
    tight.degree_bound = 2;
    CHECK_THROWS_AS(static_cast<void>(invariant_generators(fix.quiver, brs, tight)),
                    std::runtime_error);
    // dual graph refuses non-surface chart sets
    auto sppfix = spp();
    BinomialRelationSet sbrs = commutativize(sppfix.quiver, sppfix.relations);
    ChartEnumeration sen = enumerate_charts(sppfix.quiver, sbrs, "0");
    InvariantReport srep = invariant_generators(sppfix.quiver, sbrs);
    CHECK_THROWS_AS(static_cast<void>(exceptional_dual_graph(sppfix.quiver, sen, srep.classes)),
                    std::invalid_argument);
}
