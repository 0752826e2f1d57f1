// Random instance generation and the property battery shared by the CLI
// suite command and the acceptance tests.
#pragma once

#include "hq/daha.hpp"

#include <cstdint>

namespace hq {

struct Instance {
    XType type;
    int n = 0;
    KParams k;
    FieldElement q;
    std::string label() const;
};

// Valid parameter sets, cycling through the five types. Free k's come from
// small odd primes, their inverses and signs; some live in Q(sqrt 2) or
// Q(sqrt 3).
std::vector<Instance> sample_instances(std::uint64_t seed, int max_n, std::size_t count);

// Admissible Huang data over Q with d <= max_d.
std::vector<HuangData> sample_huang(std::uint64_t seed, const FieldElement& q, int max_d, std::size_t count);

// H_q relations, X spectrum equal to the ladder with 1-dim eigenspaces,
// derived-element identities and the defining equation.
Report construction_checks(const HqModule& m);

struct InstanceOutcome {
    std::string label;
    bool feasible = false;
    std::string infeasible_clause;
    std::string error;
    Report report;
};

struct SuiteResult {
    std::vector<InstanceOutcome> instances;
    std::size_t checks = 0, failures = 0, feasible = 0;
};

// Full battery: construction, feasibility, u-basis shapes, restricted Leonard
// pairs, sigma twist and the link round trip on the extracted Huang data.
SuiteResult run_suite(std::uint64_t seed, int max_n, std::size_t count);

}  // namespace hq
