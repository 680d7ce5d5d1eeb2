#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "braidrep/laurent.hpp"

namespace braidrep {

/// Randomised search for braids that the Lawrence-Krammer matrices send to
/// the identity at a fixed rational point.
struct ProbeConfig {
    int n = 4;
    /// Number of words that must pass the nontriviality filter.
    int trials = 1000;
    int max_len = 12;
    std::uint64_t seed = 42;
    RationalPoint point = default_point();

    static RationalPoint default_point();
    /// Throws std::invalid_argument on a degenerate configuration.
    void validate() const;
};

struct ProbeReport {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    long sampled = 0;
    long excluded = 0;  // identity permutation and zero exponent sum
    long kept = 0;
    long numeric_hits = 0;
    long true_collisions = 0;
    std::vector<std::string> collisions;  // words confirmed symbolically

    nlohmann::json to_json() const;
};

ProbeReport run_probe(const ProbeConfig& cfg);

}  // namespace braidrep
