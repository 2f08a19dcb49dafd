#include "nccr/stability.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nccr {

std::string to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::Stable: return "stable";
        case StabilityClass::StrictlySemistable: return "strictly_semistable";
        case StabilityClass::Unstable: return "unstable";
    }
    return "?";
}

long long theta_value(const StabilityParameter& theta, const DimensionVector& beta) {
    long long s = 0;
    for (auto& [v, d] : beta) {
        auto it = theta.find(v);
        if (it == theta.end()) throw std::invalid_argument("theta_value: vertex '" + v + "' missing from theta");
        s += (long long)it->second * d;
    }
    return s;
}

StabilityClass classify(const Representation& rep, const StabilityParameter& theta) {
    if (!rep.all_dims_at_most_one())
        throw std::invalid_argument("classify: dimension vector must have entries <= 1");
    if (theta_value(theta, rep.dims()) != 0)
        throw std::invalid_argument("classify: theta(alpha) must be 0");
    auto subsets = closed_subsets(rep);
    size_t support = 0;
    for (auto& [v, d] : rep.dims()) support += (size_t)d;
    bool any_zero = false;
    for (auto& s : subsets) {
        if (s.empty() || s.size() == support) continue;  // improper
        long long t = 0;
        for (auto& v : s) t += theta.at(v);
        if (t < 0) return StabilityClass::Unstable;
        if (t == 0) any_zero = true;
    }
    return any_zero ? StabilityClass::StrictlySemistable : StabilityClass::Stable;
}

bool star_criterion(const Representation& rep, const std::string& star) {
    const Quiver& q = rep.quiver();
    q.vertex_index(star);
    for (auto& v : q.vertices())
        if (rep.dim(v) != 1)
            throw std::invalid_argument("star_criterion: dimension vector must be (1,...,1)");
    std::set<std::string> reach{star};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& a : q.arrows()) {
            if (!reach.count(a.tail) || reach.count(a.head)) continue;
            if (rep.matrix(a.name).is_zero()) continue;
            reach.insert(a.head);
            grew = true;
        }
    }
    return reach.size() == q.vertices().size();
}

bool is_generic(const StabilityParameter& theta, const DimensionVector& alpha) {
    std::vector<std::string> verts;
    for (auto& [v, d] : alpha) {
        if (d != 1) throw std::invalid_argument("is_generic: alpha must be all ones");
        verts.push_back(v);
    }
    if (theta_value(theta, alpha) != 0)
        throw std::invalid_argument("is_generic: theta(alpha) must be 0");
    size_t n = verts.size();
    if (n > 20) throw std::invalid_argument("is_generic: too many vertices to enumerate");
    for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << n); ++mask) {
        long long t = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (uint64_t(1) << i)) t += theta.at(verts[i]);
        if (t == 0) return false;
    }
    return true;
}

namespace {

struct ChamberAccum {
    // sign vector (bit set = positive) -> best representative coordinates
    std::map<uint64_t, std::vector<int>> best;

    static bool better(const std::vector<int>& a, const std::vector<int>& b) {
        long long na = 0, nb = 0;
        for (int x : a) na += (long long)x * x;
        for (int x : b) nb += (long long)x * x;
        if (na != nb) return na < nb;
        return a < b;
    }

    void offer(uint64_t sv, const std::vector<int>& pt) {
        auto it = best.find(sv);
        if (it == best.end())
            best.emplace(sv, pt);
        else if (better(pt, it->second))
            it->second = pt;
    }

    void merge(const ChamberAccum& o) {
        for (auto& [sv, pt] : o.best) offer(sv, pt);
    }
};

// sign vector of theta over all proper nonempty subsets; nullopt-like flag
// via `ok` when some wall value is zero
bool sign_vector(const std::vector<int>& theta, uint64_t& sv) {
    size_t n = theta.size();
    sv = 0;
    for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << n); ++mask) {
        long long t = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (uint64_t(1) << i)) t += theta[i];
        if (t == 0) return false;
        if (t > 0) sv |= (uint64_t(1) << (mask - 1));
    }
    return true;
}

// decode flat index into a point of the shell max|theta_i| = b with sum 0;
// returns false when the point is not on the shell or the last coordinate
// falls outside the box
bool decode_point(uint64_t idx, int b, size_t n, std::vector<int>& out) {
    int width = 2 * b + 1;
    out.assign(n, 0);
    long long sum = 0;
    bool on_shell = false;
    for (size_t i = 0; i + 1 < n; ++i) {
        int c = (int)(idx % (uint64_t)width) - b;
        idx /= (uint64_t)width;
        out[i] = c;
        sum += c;
        if (std::abs(c) == b) on_shell = true;
    }
    long long last = -sum;
    if (std::abs(last) > b) return false;
    if (std::abs(last) == b) on_shell = true;
    out[n - 1] = (int)last;
    return on_shell || b == 0;
}

std::vector<Chamber> chambers_from_accum(const Quiver& q, const ChamberAccum& acc) {
    const auto& verts = q.vertices();
    size_t n = verts.size();
    std::vector<Chamber> out;
    for (auto& [sv, pt] : acc.best) {
        Chamber ch;
        for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << n); ++mask) {
            SignCondition sc;
            for (size_t i = 0; i < n; ++i)
                if (mask & (uint64_t(1) << i)) sc.subset.push_back(verts[i]);
            sc.sign = (sv >> (mask - 1)) & 1 ? 1 : -1;
            ch.conditions.push_back(std::move(sc));
        }
        for (size_t i = 0; i < n; ++i) ch.representative[verts[i]] = pt[i];
        out.push_back(std::move(ch));
    }
    // map iteration is already sorted by sign vector; keep that order
    return out;
}

}  // namespace

std::vector<Chamber> chambers(const Quiver& q, const ChamberOptions& options) {
    const auto& verts = q.vertices();
    size_t n = verts.size();
    if (n == 0) throw std::invalid_argument("chambers: empty quiver");
    if (n > 6) throw std::invalid_argument("chambers: supported up to 6 vertices");
    if (n == 1) {
        Chamber ch;
        ch.representative[verts[0]] = 0;
        return {ch};
    }
    ChamberAccum acc;
    int idle = 0;
    for (int b = 1; b <= options.box_bound && idle < options.stable_rounds; ++b) {
        size_t before = acc.best.size();
        uint64_t span = 1;
        for (size_t i = 0; i + 1 < n; ++i) span *= (uint64_t)(2 * b + 1);
#ifdef _OPENMP
        if (options.parallel && span > 4096) {
            #pragma omp parallel
            {
                ChamberAccum local;
                std::vector<int> pt;
                uint64_t sv;
                #pragma omp for schedule(static)
                for (long long idx = 0; idx < (long long)span; ++idx) {
                    if (!decode_point((uint64_t)idx, b, n, pt)) continue;
                    if (!sign_vector(pt, sv)) continue;
                    local.offer(sv, pt);
                }
                #pragma omp critical
                acc.merge(local);
            }
        } else
#endif
        {
            std::vector<int> pt;
            uint64_t sv;
            for (uint64_t idx = 0; idx < span; ++idx) {
                if (!decode_point(idx, b, n, pt)) continue;
                if (!sign_vector(pt, sv)) continue;
                acc.offer(sv, pt);
            }
        }
        // idle shells only count once something has been found; small boxes
        // can consist entirely of wall points
        idle = (!acc.best.empty() && acc.best.size() == before) ? idle + 1 : 0;
    }
    return chambers_from_accum(q, acc);
}

std::vector<Chamber> chambers_serial_reference(const Quiver& q, int box_bound) {
    const auto& verts = q.vertices();
    size_t n = verts.size();
    if (n == 1) {
        Chamber ch;
        ch.representative[verts[0]] = 0;
        return {ch};
    }
    ChamberAccum acc;
    std::vector<int> pt(n, -box_bound);
    while (true) {
        long long sum = 0;
        for (int c : pt) sum += c;
        if (sum == 0) {
            uint64_t sv;
            if (sign_vector(pt, sv)) acc.offer(sv, pt);
        }
        size_t i = 0;
        while (i < n && pt[i] == box_bound) pt[i++] = -box_bound;
        if (i == n) break;
        ++pt[i];
    }
    return chambers_from_accum(q, acc);
}

}  // namespace nccr
