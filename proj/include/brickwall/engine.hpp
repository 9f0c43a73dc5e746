#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brickwall/rule.hpp"

namespace brickwall {

inline constexpr int default_max_depth = 12;

// SplitMix64 (Steele, Lea, Flood). One 64-bit draw per random choice.
class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed)
        : state_(seed)
    {
    }

    std::uint64_t operator()()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

// Occupies [x, x + width) x [y, y + height).
struct brick {
    std::size_t type = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const brick&) const = default;
};

// A finite overlap-free set of bricks. Bricks are kept sorted by (y, x).
struct pattern {
    std::string rule_name;
    std::vector<brick_type> types;
    std::vector<brick> bricks;
    int level = 0;
    std::string seed_type;
    std::optional<std::uint64_t> rng_seed;

    const brick_type& type_of(const brick& b) const { return types[b.type]; }
    std::int64_t area() const;
    std::size_t size() const { return bricks.size(); }
};

// Patterns compare by metadata and by their bricks resolved to
// (id, x, y, width, height); type order and colors do not matter.
bool operator==(const pattern& a, const pattern& b);

// Letters of a block substitution, rows bottom to top.
struct letter_grid {
    std::vector<std::vector<std::uint32_t>> rows;
    int level = 0;

    std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }
    bool operator==(const letter_grid&) const = default;
};

class generation_error : public error {
public:
    using error::error;
};

// Pattern holding one seed brick at the origin.
pattern seed_pattern(const substitution_rule& rule, std::string_view seed_type);

// Replaces every brick by an image anchored at (l1 * x, l2 * y). Bricks are
// visited in (y, x, type) order; a type with more than one option consumes
// exactly one draw from `rng`. Throws generation_error if the result overlaps.
pattern substitute_once(const substitution_rule& rule, const pattern& in, splitmix64* rng);

// n applications of substitute_once to the seed brick, drawing from a single
// SplitMix64 stream seeded with rng_seed. Random rules require a seed;
// deterministic rules ignore it.
pattern iterate(const substitution_rule& rule, std::string_view seed_type, int n,
                std::optional<std::uint64_t> rng_seed = std::nullopt, int max_depth = default_max_depth);

letter_grid iterate_block(const substitution_rule& rule, std::string_view seed_letter, int n,
                          int max_depth = default_max_depth);

// Cell (R, c) becomes a height-1 brick at y = R, x = skew * R + widths of the
// letters to its left.
pattern render_grid(const substitution_rule& rule, const letter_grid& grid);

// Dispatches on the engine: iterate for geometric rules, iterate_block followed
// by render_grid for block rules.
pattern generate(const substitution_rule& rule, std::string_view seed_type, int n,
                 std::optional<std::uint64_t> rng_seed = std::nullopt, int max_depth = default_max_depth);

// Two-dimensional Prouhet-Thue-Morse letter: parity of the binary digit sums
// of column and row.
int ptm_oracle(std::uint64_t column, std::uint64_t row);

// First pair of overlapping bricks, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_overlap(const pattern& p);

// Canonical order: (y, x, type).
void sort_bricks(pattern& p);

// Text format: header `# rule=<name> n=<n> seed=<seed|-> seed_brick=<id>`,
// then one `type_id x y width height` line per brick sorted by (y, x).
std::string to_text(const pattern& p);
pattern parse_pattern_text(std::string_view text);

}
