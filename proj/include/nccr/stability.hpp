#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nccr/rep.hpp"

namespace nccr {

using StabilityParameter = std::map<std::string, int>;

enum class StabilityClass { Stable, StrictlySemistable, Unstable };

std::string to_string(StabilityClass c);

// sum of theta_i * beta_i over the common vertex set
long long theta_value(const StabilityParameter& theta, const DimensionVector& beta);

// requires all dims <= 1 and theta(alpha) = 0
StabilityClass classify(const Representation& rep, const StabilityParameter& theta);

// alpha = (1,..,1): every vertex reachable from star through nonzero arrows
bool star_criterion(const Representation& rep, const std::string& star);

// sufficient subset criterion: theta(S) != 0 for every proper nonempty S
bool is_generic(const StabilityParameter& theta, const DimensionVector& alpha);

struct SignCondition {
    std::vector<std::string> subset;
    int sign;  // +1 or -1
};

struct Chamber {
    std::vector<SignCondition> conditions;  // one per proper nonempty subset
    StabilityParameter representative;      // integer interior point, smallest norm
};

struct ChamberOptions {
    int box_bound = 6;     // half-width of the integer search box
    bool parallel = true;
    int stable_rounds = 2; // stop after this many box increments add nothing
};

// connected components of {theta : sum theta = 0} minus the walls theta(S)=0,
// alpha = (1,...,1), enumerated by bucketing integer points by sign vector.
// Deterministic order (lexicographic in the sign vector over subsets).
std::vector<Chamber> chambers(const Quiver& q, const ChamberOptions& options = {});

// single-threaded reference used by tests and the kernel benchmark
std::vector<Chamber> chambers_serial_reference(const Quiver& q, int box_bound);

}  // namespace nccr
