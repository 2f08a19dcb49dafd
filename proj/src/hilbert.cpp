#include "nccr/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nccr {

bool WeightSystem::satisfied(const std::vector<int>& e) const {
    for (const auto& row : z_rows) {
        long long s = 0;
        for (int i = 0; i < nvars; ++i) s += row[i] * e[i];
        if (s != 0) return false;
    }
    for (const auto& [mod, row] : mod_rows) {
        long long s = 0;
        for (int i = 0; i < nvars; ++i) s += row[i] * e[i];
        if (((s % mod) + mod) % mod != 0) return false;
    }
    return true;
}

namespace {

uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (unsigned)(n - k + i) / (unsigned)i;
    return (uint64_t)r;
}

uint64_t compositions_count(int degree, int parts) { return binom(degree + parts - 1, parts - 1); }

bool divisible(const std::vector<int>& e, const std::vector<int>& g) {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < g[i]) return false;
    return true;
}

bool divisible_by_any(const std::vector<int>& e, const std::vector<std::vector<int>>& gens) {
    for (const auto& g : gens)
        if (divisible(e, g)) return true;
    return false;
}

// enumerate compositions of `remaining` over positions pos..nvars-1 of e,
// collecting irreducible weight-zero candidates
void scan_rec(int pos, int remaining, std::vector<int>& e, const WeightSystem& ws,
              const std::vector<std::vector<int>>& gens, std::vector<std::vector<int>>& found) {
    if (pos == ws.nvars - 1) {
        e[pos] = remaining;
        if (ws.satisfied(e) && !divisible_by_any(e, gens)) found.push_back(e);
        e[pos] = 0;
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        e[pos] = v;
        scan_rec(pos + 1, remaining - v, e, ws, gens, found);
    }
    e[pos] = 0;
}

}  // namespace

HilbertResult hilbert_basis(const WeightSystem& ws, const HilbertOptions& options) {
    HilbertResult res;
    if (ws.nvars == 0) {
        res.certified = true;
        return res;
    }
    int bound = options.degree_bound;
    if (ws.complete_degree > 0) bound = std::min(bound, ws.complete_degree);
    for (int d = 1; d <= bound; ++d) {
        // without a provable bound, stop once a full doubling window past the
        // last generator is clean
        if (ws.complete_degree == 0 && res.max_generator_degree > 0 &&
            d > 2 * res.max_generator_degree)
            break;
        uint64_t count = compositions_count(d, ws.nvars);
        if (count > (uint64_t)4e9)
            throw std::runtime_error("hilbert_basis: candidate space too large at degree " +
                                     std::to_string(d));
        std::vector<std::vector<int>> found;
#ifdef _OPENMP
        if (options.parallel && count > 8192 && ws.nvars >= 3) {
            // split on the first two exponents; each task recurses over the rest
            std::vector<std::pair<int, int>> tasks;
            for (int v0 = 0; v0 <= d; ++v0)
                for (int v1 = 0; v0 + v1 <= d; ++v1) tasks.emplace_back(v0, v1);
            #pragma omp parallel
            {
                std::vector<std::vector<int>> local;
                std::vector<int> e(ws.nvars, 0);
                #pragma omp for schedule(dynamic, 1)
                for (long long t = 0; t < (long long)tasks.size(); ++t) {
                    e[0] = tasks[t].first;
                    e[1] = tasks[t].second;
                    scan_rec(2, d - e[0] - e[1], e, ws, res.generators, local);
                    e[0] = e[1] = 0;
                }
                #pragma omp critical
                found.insert(found.end(), local.begin(), local.end());
            }
            std::sort(found.begin(), found.end());
        } else
#endif
        {
            std::vector<int> e(ws.nvars, 0);
            scan_rec(0, d, e, ws, res.generators, found);
        }
        if (!found.empty()) {
            res.max_generator_degree = d;
            res.generators.insert(res.generators.end(), found.begin(), found.end());
        }
        res.scanned_degree = d;
    }
    if (ws.complete_degree > 0)
        res.certified = res.scanned_degree >= ws.complete_degree;
    else
        res.certified = res.max_generator_degree > 0 &&
                        res.scanned_degree >= 2 * res.max_generator_degree;
    std::sort(res.generators.begin(), res.generators.end());
    return res;
}

// the reference walks compositions with a colex odometer rather than the
// recursion the production kernel uses
std::vector<std::vector<int>> hilbert_basis_serial_reference(const WeightSystem& ws, int degree_bound) {
    std::vector<std::vector<int>> gens;
    if (ws.nvars == 0) return gens;
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<std::vector<int>> found;
        std::vector<int> e(ws.nvars, 0);
        e[0] = d;
        while (true) {
            if (ws.satisfied(e) && !divisible_by_any(e, gens)) found.push_back(e);
            if (e[ws.nvars - 1] == d) break;
            size_t i = 0;
            while (e[i] == 0) ++i;
            int v = e[i];
            e[i] = 0;
            e[i + 1] += 1;
            e[0] = v - 1;
        }
        std::sort(found.begin(), found.end());
        gens.insert(gens.end(), found.begin(), found.end());
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

std::string exponent_vector_to_string(const std::vector<int>& e, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace nccr
