#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brickwall/rational.hpp"

namespace brickwall {

// A proto-tile: an axis-aligned width x height rectangle on the integer lattice.
struct brick_type {
    std::string id;
    std::int64_t width = 1;
    std::int64_t height = 1;
    std::string color;

    std::int64_t area() const { return width * height; }

    bool operator==(const brick_type&) const = default;
};

// One brick of an image, offset from the image anchor.
struct placement {
    std::size_t type = 0;
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    bool operator==(const placement&) const = default;
};

// How an option's probability was written. Parametric forms are resolved
// against the rule's bound parameter.
enum class prob_form { literal, param, one_minus_param };

struct probability {
    prob_form form = prob_form::literal;
    rational value{1};

    bool operator==(const probability&) const = default;
};

struct image_option {
    probability prob;
    std::vector<placement> placements;

    bool operator==(const image_option&) const = default;
};

// lambda2 rows of lambda1 letters, rows ordered bottom to top.
struct block_image {
    std::vector<std::vector<std::size_t>> rows;

    bool operator==(const block_image&) const = default;
};

enum class engine_kind { geometric, block };

struct substitution_rule {
    std::string name;
    engine_kind engine = engine_kind::geometric;
    std::int64_t lambda1 = 1;
    std::int64_t lambda2 = 1;
    std::int64_t skew = 0;
    std::vector<brick_type> types;
    std::vector<std::vector<image_option>> images; // geometric, indexed by type
    std::vector<block_image> blocks;               // block, indexed by type
    bool parametric = false;
    std::optional<rational> parameter;

    std::int64_t expansion() const { return lambda1 * lambda2; }
    bool deterministic() const;
    std::optional<std::size_t> find_type(std::string_view id) const;
    // Throws brickwall::error for an unknown id.
    std::size_t type_index(std::string_view id) const;

    bool operator==(const substitution_rule&) const = default;
};

// Syntax error in rule DSL source, with a 1-based position.
class parse_error : public error {
public:
    parse_error(const std::string& message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Raised when a rule is structurally complete but violates the substitution
// invariants (area identity, overlap, probability sums).
class rule_error : public error {
public:
    explicit rule_error(std::vector<std::string> diagnostics);

    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

// Parses DSL source into a rule without checking the substitution invariants.
// Syntax errors, unknown type references, duplicate ids, non-positive
// dimensions and parameter binding problems still throw.
substitution_rule parse_rule_unchecked(std::string_view text, std::optional<rational> p = std::nullopt);

// parse_rule_unchecked followed by validate_rule; throws rule_error if any
// diagnostic is produced.
substitution_rule parse_rule(std::string_view text, std::optional<rational> p = std::nullopt);

// Serializes a rule back to DSL source. Parametric probabilities are written
// as `p` / `1-p`.
std::string to_dsl(const substitution_rule& rule);

// Checks probabilities, the area identity and non-overlap of every image.
// Empty result means the rule is well formed.
std::vector<std::string> validate_rule(const substitution_rule& rule);

// Re-resolves parametric probabilities with a new value of p. Throws for
// p outside [0, 1] or a rule with no parametric option.
substitution_rule bind_parameter(substitution_rule rule, const rational& p);

// Built-in rules transcribed from the brick wall figures.
const std::vector<std::string>& builtin_names();
bool is_builtin(std::string_view name);
std::string_view builtin_source(std::string_view name);
substitution_rule builtin(std::string_view name, std::optional<rational> p = std::nullopt);

// Fallback colors by type order.
const std::vector<std::string>& default_palette();

}
