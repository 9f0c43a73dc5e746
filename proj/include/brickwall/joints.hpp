#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brickwall/engine.hpp"

namespace brickwall {

// Maximal vertical mortar segment {x} x [y0, y1].
struct joint {
    std::int64_t x = 0;
    std::int64_t y0 = 0;
    std::int64_t y1 = 0;

    std::int64_t length() const { return y1 - y0; }
    bool operator==(const joint&) const = default;
};

// all_edges: every vertical brick edge counts, including the outline of the
// pattern. interior: only edge points with bricks on both sides.
enum class joint_mode { all_edges, interior };

struct joint_report {
    std::vector<joint> joints; // sorted by (x, y0)
    std::int64_t v_max = 0;
    std::string rule_name;
    int level = 0;
    std::string seed_type;
    std::optional<std::uint64_t> rng_seed;
    std::size_t brick_count = 0;
};

joint_report vertical_joints(const pattern& p, joint_mode mode = joint_mode::all_edges);

std::int64_t v_max_at(const substitution_rule& rule, std::string_view seed_type, int n,
                      std::optional<std::uint64_t> rng_seed = std::nullopt);

// Crossing of one image option: an interior joint of the single-step image
// that runs out of the image region at both ends (nothing on either side just
// below its lower end and just above its upper end).
bool option_has_crossing(const substitution_rule& rule, std::size_t type, std::size_t option);

// Per option of the type, in declaration order.
std::vector<bool> crossings_by_option(const substitution_rule& rule, std::string_view type_id);

// True if any option of the type has a crossing.
bool has_crossing(const substitution_rule& rule, std::string_view type_id);

// 2 * (max brick height) * (lambda2 - 1).
std::int64_t prop2_bound(const substitution_rule& rule);

struct prop2_verdict {
    // Unset for block rules, where only the measured joints are checked.
    std::optional<bool> hypothesis_holds;
    std::map<std::string, bool> crossing; // type id -> has crossing
    std::int64_t bound = 0;
    std::int64_t measured_max = 0;
    // measured_max <= bound, required only when the hypothesis holds.
    bool bound_respected = true;
};

// Measures v_max for n = 1..n_max; with seed_type unset every type is used as
// a seed.
prop2_verdict check_prop2(const substitution_rule& rule, int n_max,
                          std::optional<std::string> seed_type = std::nullopt);

// Count of each type over the brick count, in type order.
std::vector<rational> empirical_frequencies(const pattern& p);

}
