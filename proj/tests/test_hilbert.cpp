#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nccr/hilbert.hpp"

using namespace nccr;

TEST_CASE("cyclic 1/3(1,2) invariants as a weight system") {
    WeightSystem ws;
    ws.nvars = 2;
    ws.mod_rows.emplace_back(3, std::vector<long long>{1, 2});
    HilbertResult r = hilbert_basis(ws, {9, false});
    CHECK(r.certified);
    // x^3, xy, y^3
    std::vector<std::vector<int>> want = {{0, 3}, {1, 1}, {3, 0}};
    CHECK(r.generators == want);
}

TEST_CASE("torus (1,1,-1,-1) gives the four quadric generators") {
    WeightSystem ws;
    ws.nvars = 4;
    ws.z_rows.push_back({1, 1, -1, -1});
    HilbertResult r = hilbert_basis(ws, {8, true});
    CHECK(r.certified);
    CHECK(r.generators.size() == 4);
    for (auto& g : r.generators) CHECK(g[0] + g[1] == 1);  // all are x_i y_j
}

TEST_CASE("empty variable set is trivially complete") {
    WeightSystem ws;
    ws.nvars = 0;
    HilbertResult r = hilbert_basis(ws, {5, false});
    CHECK(r.certified);
    CHECK(r.generators.empty());
}

TEST_CASE("uncertified when the bound is too small") {
    WeightSystem ws;
    ws.nvars = 2;
    ws.mod_rows.emplace_back(8, std::vector<long long>{1, 7});
    ws.complete_degree = 16;  // pure-power box for 1/8(1,7)
    HilbertResult r = hilbert_basis(ws, {9, false});
    CHECK(!r.certified);
    // with the box scanned in full, the late pure-power generators appear
    HilbertResult full = hilbert_basis(ws, {16, false});
    CHECK(full.certified);
    std::vector<std::vector<int>> want = {{0, 8}, {1, 1}, {8, 0}};
    CHECK(full.generators == want);
}

TEST_CASE("doubling heuristic is a lower bound without a provable box") {
    WeightSystem ws;
    ws.nvars = 2;
    ws.mod_rows.emplace_back(3, std::vector<long long>{1, 2});
    HilbertResult r = hilbert_basis(ws, {9, false});
    CHECK(r.certified);
    CHECK(r.scanned_degree >= 2 * r.max_generator_degree);
}

TEST_CASE("parallel and serial reference agree on random instances") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> nv(2, 5), w(-4, 4), md(2, 6);
    int ran = 0;
    for (int trial = 0; trial < 60 || ran < 40; ++trial) {
        WeightSystem ws;
        ws.nvars = nv(rng);
        if (trial % 2 == 0) {
            std::vector<long long> row;
            bool pos = false, neg = false;
            for (int i = 0; i < ws.nvars; ++i) {
                int x = w(rng);
                pos |= x > 0;
                neg |= x < 0;
                row.push_back(x);
            }
            if (!pos || !neg) continue;
            ws.z_rows.push_back(row);
        } else {
            int m = md(rng);
            std::vector<long long> row;
            for (int i = 0; i < ws.nvars; ++i) row.push_back(((w(rng) % m) + m) % m);
            ws.mod_rows.emplace_back(m, row);
        }
        HilbertOptions opt;
        opt.degree_bound = 8;
        opt.parallel = true;
        HilbertResult par = hilbert_basis(ws, opt);
        auto ref = hilbert_basis_serial_reference(ws, par.scanned_degree);
        CHECK(par.generators == ref);
        ++ran;
        if (trial > 500) break;
    }
    CHECK(ran >= 40);
}

TEST_CASE("generator irreducibility on the doubled triangle cycle monoid") {
    WeightSystem ws;
    ws.nvars = 6;  // c1 c2 c3 a1 a2 a3 on a 3-cycle both ways
    ws.z_rows.push_back({1, 0, -1, -1, 0, 1});
    ws.z_rows.push_back({-1, 1, 0, 1, -1, 0});
    ws.z_rows.push_back({0, -1, 1, 0, 1, -1});
    HilbertResult r = hilbert_basis(ws, {12, true});
    CHECK(r.certified);
    CHECK(r.generators.size() == 5);  // three 2-cycles and two 3-cycles
    for (size_t i = 0; i < r.generators.size(); ++i)
        for (size_t j = 0; j < r.generators.size(); ++j) {
            if (i == j) continue;
            bool div = true;
            for (int k = 0; k < ws.nvars; ++k)
                if (r.generators[i][k] < r.generators[j][k]) div = false;
            CHECK(!div);
        }
}
