// Times the OpenMP kernels against their serial reference implementations:
// Hilbert-basis enumeration of a quiver cycle monoid and of a torus weight
// monoid, and the chamber sign-vector search.  Run manually; not a ctest.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nccr/hilbert.hpp"
#include "nccr/quiver.hpp"
#include "nccr/stability.hpp"

using namespace nccr;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, agree ? "results agree" : "MISMATCH");
}

}  // namespace

int main() {
    {
        // cycle monoid of a doubled 6-cycle (12 arrows), scanned to the
        // simple-cycle bound; 1.3M candidates at the top degree
        std::vector<std::string> vs;
        for (int i = 0; i < 6; ++i) vs.push_back(std::to_string(i));
        std::vector<Arrow> arrows;
        for (int i = 0; i < 6; ++i) {
            arrows.push_back({"c" + std::to_string(i), vs[i], vs[(i + 1) % 6]});
            arrows.push_back({"a" + std::to_string(i), vs[(i + 1) % 6], vs[i]});
        }
        Quiver q(vs, arrows);
        WeightSystem ws;
        ws.nvars = (int)arrows.size();
        for (auto& v : vs) {
            std::vector<long long> row(arrows.size(), 0);
            for (size_t k = 0; k < arrows.size(); ++k) {
                if (arrows[k].tail == v) row[k] += 1;
                if (arrows[k].head == v) row[k] -= 1;
            }
            ws.z_rows.push_back(row);
        }
        ws.complete_degree = (int)arrows.size();
        HilbertResult par;
        double tp = time_ms([&] { par = hilbert_basis(ws, {12, true}); });
        std::vector<std::vector<int>> ref;
        double ts = time_ms([&] { ref = hilbert_basis_serial_reference(ws, par.scanned_degree); });
        report("hilbert: doubled 6-cycle monoid", ts, tp, ref == par.generators);
    }
    {
        // single torus row with a wide Lambert bound
        WeightSystem ws;
        ws.nvars = 7;
        ws.z_rows.push_back({9, 5, 1, -2, -9, -1, 4});
        ws.complete_degree = 18;
        HilbertResult par;
        double tp = time_ms([&] { par = hilbert_basis(ws, {18, true}); });
        std::vector<std::vector<int>> ref;
        double ts = time_ms([&] { ref = hilbert_basis_serial_reference(ws, par.scanned_degree); });
        report("hilbert: 7-variable torus monoid", ts, tp, ref == par.generators);
    }
    {
        // chamber decomposition at five vertices
        std::vector<std::string> vs;
        for (int i = 0; i < 5; ++i) vs.push_back(std::to_string(i));
        Quiver q(vs, {});
        ChamberOptions opt;
        opt.box_bound = 6;
        opt.stable_rounds = 5;  // force the full box for a fair comparison
        opt.parallel = true;
        std::vector<Chamber> par, ser;
        double tp = time_ms([&] { par = chambers(q, opt); });
        double ts = time_ms([&] { ser = chambers_serial_reference(q, opt.box_bound); });
        bool agree = par.size() == ser.size();
        for (size_t i = 0; agree && i < par.size(); ++i)
            agree = par[i].representative == ser[i].representative;
        std::string label = "chambers: 5 vertices (" + std::to_string(par.size()) + " found)";
        report(label.c_str(), ts, tp, agree);
    }
    return 0;
}
