#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nccr/mf.hpp"

using namespace nccr;

namespace {

PolyMatrix matrix(std::vector<std::vector<std::string>> rows) {
    PolyMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = parse_polynomial(rows[i][j]);
    return m;
}

// the worked pair over ab - c^3
MatrixFactorization z3_pair() {
    MatrixFactorization mf;
    mf.ring.variables = {"a", "b", "c"};
    mf.ring.f = parse_polynomial("a*b - c^3");
    mf.phi = matrix({{"c", "-b"}, {"-a", "c^2"}});
    mf.psi = matrix({{"c^2", "b"}, {"a", "c"}});
    mf.sign = -1;
    return mf;
}

MatrixFactorization rank_one(const std::string& f, std::vector<std::string> vars) {
    MatrixFactorization mf;
    mf.ring.variables = std::move(vars);
    mf.ring.f = parse_polynomial(f);
    mf.phi = matrix({{f}});
    mf.psi = matrix({{"1"}});
    mf.sign = 1;
    return mf;
}

}  // namespace

TEST_CASE("the worked pair validates with sign -1") {
    Validation v = validate(z3_pair());
    CHECK(v.ok);
    CHECK(v.sign == -1);
    // sign inference when unspecified
    MatrixFactorization open = z3_pair();
    open.sign = 0;
    Validation v2 = validate(open);
    CHECK(v2.ok);
    CHECK(v2.sign == -1);
}

TEST_CASE("rank one factorization validates with sign +1") {
    Validation v = validate(rank_one("x*y - z^2", {"x", "y", "z"}));
    CHECK(v.ok);
    CHECK(v.sign == 1);
}

TEST_CASE("a perturbed partner fails with the first offending entry") {
    MatrixFactorization bad = z3_pair();
    bad.psi = matrix({{"c^2", "b"}, {"a", "c^2"}});
    Validation v = validate(bad);
    CHECK(!v.ok);
    REQUIRE(v.witness);
    CHECK(v.witness->which == "phi*psi");
    CHECK(v.witness->row == 0);
    CHECK(v.witness->col == 1);
}

TEST_CASE("shape errors are rejected") {
    MatrixFactorization bad = z3_pair();
    bad.psi = matrix({{"c"}});
    CHECK_THROWS(validate(bad));
}

TEST_CASE("syzygy swaps the pair and is an involution") {
    MatrixFactorization mf = z3_pair();
    MatrixFactorization s = syzygy(mf);
    CHECK(s.phi == mf.psi);
    CHECK(s.psi == mf.phi);
    CHECK(validate(s).ok);
    MatrixFactorization ss = syzygy(s);
    CHECK(ss.phi == mf.phi);
    CHECK(ss.psi == mf.psi);
    // rank one: (f)(1) -> (1)(f)
    MatrixFactorization r = syzygy(rank_one("x^2", {"x"}));
    CHECK(r.phi.at(0, 0).is_one());
}

TEST_CASE("knorrer of (x)(x) presents the ideal (u,x) over uv - x^2") {
    MatrixFactorization mf;
    mf.ring.variables = {"x"};
    mf.ring.f = parse_polynomial("x^2");
    mf.phi = matrix({{"x"}});
    mf.psi = matrix({{"x"}});
    mf.sign = 1;
    MatrixFactorization k = knorrer(mf);
    CHECK(k.ring.f == parse_polynomial("u*v - x^2"));
    CHECK(k.sign == -1);
    Validation v = validate(k);
    CHECK(v.ok);
    CHECK(v.sign == -1);
    REQUIRE(k.phi.rows() == 2);
    CHECK(k.phi.at(0, 0) == parse_polynomial("-x"));
    CHECK(k.phi.at(0, 1) == parse_polynomial("-u"));
    CHECK(k.phi.at(1, 0) == parse_polynomial("v"));
    CHECK(k.phi.at(1, 1) == parse_polynomial("x"));
    // cokernel presentation columns generate (u, x) up to sign
    CokernelPresentation p = cokernel_presentation(k);
    REQUIRE(p.columns.size() == 2);
}

TEST_CASE("knorrer on split factorizations of f = f1 f2") {
    MatrixFactorization mf;
    mf.ring.variables = {"x", "y"};
    mf.ring.f = parse_polynomial("x^3 + x*y^7");  // x (x^2 + y^7)
    mf.phi = matrix({{"x"}});
    mf.psi = matrix({{"x^2 + y^7"}});
    mf.sign = 1;
    MatrixFactorization k = knorrer(mf);
    CHECK(k.ring.f == parse_polynomial("u*v - x^3 - x*y^7"));
    Validation v = validate(k);
    CHECK(v.ok);
    CHECK(v.sign == -1);
}

TEST_CASE("knorrer flips the sign on the worked pair") {
    MatrixFactorization k = knorrer(z3_pair());
    CHECK(k.ring.f == parse_polynomial("u*v - a*b + c^3"));
    Validation v = validate(k);
    CHECK(v.ok);
    CHECK(v.sign == 1);
}

TEST_CASE("double knorrer lands over u'v' - (uv - f)") {
    MatrixFactorization base = rank_one("x^3", {"x"});
    MatrixFactorization once = knorrer(base);
    CHECK(once.ring.f == parse_polynomial("u*v - x^3"));
    MatrixFactorization twice = knorrer(once, "u2", "v2");
    CHECK(twice.ring.f == parse_polynomial("u2*v2 - u*v + x^3"));
    CHECK(twice.phi.rows() == 4);
    Validation v = validate(twice);
    CHECK(v.ok);
    CHECK(v.sign == 1);
}

TEST_CASE("knorrer rejects clashing variable names") {
    MatrixFactorization mf = rank_one("u^2", {"u"});
    CHECK_THROWS(knorrer(mf));
    CHECK_NOTHROW(knorrer(mf, "s", "t"));
}

TEST_CASE("knorrer validates on randomized 1x1 and 2x2 factorizations") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> coeff(-2, 2), exp(0, 2);
    auto rnd_poly = [&] {
        Polynomial p;
        for (int t = 0; t < 2; ++t) {
            Monomial m = Monomial("x").pow(exp(rng)) * Monomial("y").pow(exp(rng));
            p.add_term(m, Rational(coeff(rng)));
        }
        return p;
    };
    int done = 0;
    for (int trial = 0; trial < 400 && done < 200; ++trial) {
        MatrixFactorization mf;
        mf.ring.variables = {"x", "y"};
        if (trial % 2 == 0) {
            Polynomial a = rnd_poly(), b = rnd_poly();
            if (a.is_zero() || b.is_zero()) continue;
            mf.phi = PolyMatrix(1, 1);
            mf.phi.at(0, 0) = a;
            mf.psi = PolyMatrix(1, 1);
            mf.psi.at(0, 0) = b;
            mf.ring.f = a * b;
        } else {
            // psi = adjugate(phi) gives phi psi = det(phi) I
            Polynomial a = rnd_poly(), b = rnd_poly(), c = rnd_poly(), d = rnd_poly();
            Polynomial det = a * d - b * c;
            if (det.is_zero()) continue;
            mf.phi = PolyMatrix(2, 2);
            mf.phi.at(0, 0) = a;
            mf.phi.at(0, 1) = b;
            mf.phi.at(1, 0) = c;
            mf.phi.at(1, 1) = d;
            mf.psi = PolyMatrix(2, 2);
            mf.psi.at(0, 0) = d;
            mf.psi.at(0, 1) = -b;
            mf.psi.at(1, 0) = -c;
            mf.psi.at(1, 1) = a;
            mf.ring.f = det;
        }
        mf.sign = 1;
        if (!validate(mf).ok) continue;
        MatrixFactorization k = knorrer(mf);
        Validation v = validate(k);
        CHECK(v.ok);
        CHECK(v.sign == -1);
        // determinant identity: det(phi) det(psi) = (sign f)^a
        Polynomial lhs = determinant(k.phi) * determinant(k.psi);
        Polynomial rhs{Rational(1)};
        Polynomial sf = k.ring.f.scalar_mul(Rational(v.sign));
        for (size_t i = 0; i < k.phi.rows(); ++i) rhs *= sf;
        CHECK(lhs == rhs);
        ++done;
    }
    CHECK(done >= 200);
}

TEST_CASE("determinant identity for the quartic presentation matrix") {
    // 4x4 presentation over x^3 + x y^3 + z^2; the determinant must be +-f^2
    PolyMatrix m = matrix({{"-z", "y^2", "0", "x"},
                           {"x*y", "z", "-x^2", "0"},
                           {"0", "-x", "-z", "y"},
                           {"x^2", "0", "x*y^2", "z"}});
    Polynomial f = parse_polynomial("x^3 + x*y^3 + z^2");
    Polynomial det = determinant(m);
    bool plus = det == f * f;
    bool minus = det == -(f * f);
    CHECK((plus || minus));
}

TEST_CASE("cokernel presentation exports the phi columns") {
    CokernelPresentation p = cokernel_presentation(z3_pair());
    REQUIRE(p.columns.size() == 2);
    CHECK(p.columns[0][0] == parse_polynomial("c"));
    CHECK(p.columns[0][1] == parse_polynomial("-a"));
    CHECK(p.columns[1][0] == parse_polynomial("-b"));
    CHECK(p.columns[1][1] == parse_polynomial("c^2"));
    // rank one (f)(1) presents the zero module: the single column is (f)
    CokernelPresentation z = cokernel_presentation(rank_one("x^2", {"x"}));
    CHECK(z.columns[0][0] == parse_polynomial("x^2"));
}

TEST_CASE("mf json round trip") {
    MatrixFactorization mf = z3_pair();
    std::string text = mf_to_json(mf);
    MatrixFactorization back = mf_from_json(text);
    CHECK(back.ring.f == mf.ring.f);
    CHECK(back.phi == mf.phi);
    CHECK(back.psi == mf.psi);
    CHECK(back.sign == mf.sign);
    CHECK(mf_to_json(back) == text);
    CHECK_THROWS(mf_from_json("{\"version\":3}"));
}

TEST_CASE("syzygy and knorrer refuse invalid input") {
    MatrixFactorization bad = z3_pair();
    bad.psi = matrix({{"c^2", "b"}, {"a", "c^2"}});
    CHECK_THROWS(syzygy(bad));
    CHECK_THROWS(knorrer(bad));
    CHECK_THROWS(cokernel_presentation(bad));
}

TEST_CASE("exact division of multivariate polynomials") {
    Polynomial f = parse_polynomial("x^3 + x*y^3 + z^2");
    Polynomial g = parse_polynomial("x^2 - y*z + 1");
    auto q = exact_divide(f * g, f);
    REQUIRE(q);
    CHECK(*q == g);
    CHECK(!exact_divide(parse_polynomial("x^2 + 1"), parse_polynomial("x + 1")));
}

TEST_CASE("the adjugate solves the partner of the quartic presentation") {
    // only one matrix of the pair is given; the elimination oracle recovers
    // the other and the pair validates exactly
    HypersurfaceRing ring;
    ring.variables = {"x", "y", "z"};
    ring.f = parse_polynomial("x^3 + x*y^3 + z^2");
    PolyMatrix quartic = matrix({{"-z", "y^2", "0", "x"},
                                 {"x*y", "z", "-x^2", "0"},
                                 {"0", "-x", "-z", "y"},
                                 {"x^2", "0", "x*y^2", "z"}});
    auto partner = solve_partner(ring, quartic);
    REQUIRE(partner);
    Validation v = validate(*partner);
    CHECK(v.ok);
    CHECK(v.sign == 1);
    // and the syzygy pair still validates
    CHECK(validate(syzygy(*partner)).ok);
}

TEST_CASE("solve_partner reproduces a partner for the 2x2 pair") {
    MatrixFactorization mf = z3_pair();
    auto partner = solve_partner(mf.ring, mf.phi);
    REQUIRE(partner);
    CHECK(validate(*partner).ok);
    // the solved partner is the printed one up to overall sign
    CHECK(partner->psi == -mf.psi);
}

TEST_CASE("solve_partner refuses matrices that factor nothing") {
    HypersurfaceRing ring;
    ring.variables = {"x", "y"};
    ring.f = parse_polynomial("x*y");
    PolyMatrix not_a_factor = matrix({{"x", "0"}, {"0", "x"}});
    CHECK(!solve_partner(ring, not_a_factor));
}
