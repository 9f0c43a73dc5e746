#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "brickwall/rule.hpp"

namespace brickwall {

inline constexpr int default_trials = 100;
inline constexpr int default_sample_depth = 4;

// Monte-Carlo sample of the maximal vertical joint length.
struct vmax_stats {
    std::optional<rational> p;
    int n = 0;
    int trials = 0;
    std::vector<std::int64_t> samples; // in trial order
    std::int64_t min = 0;
    std::int64_t max = 0;
    double mean = 0;
    std::map<std::int64_t, int> histogram;
    std::uint64_t base_seed = 0;
};

// Seed of trial k: one SplitMix64 output from state base_seed ^ k.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial);

// Binds p to a parametric rule, then samples. Throws for p outside [0, 1].
vmax_stats sample_vmax(const substitution_rule& rule, std::string_view seed_type, int n, const rational& p,
                       int trials, std::uint64_t base_seed, unsigned threads = 0);

// Samples a rule as given (already bound, or not parametric).
vmax_stats sample_vmax(const substitution_rule& rule, std::string_view seed_type, int n, int trials,
                       std::uint64_t base_seed, unsigned threads = 0);

}
