#pragma once

#include <string>
#include <vector>

#include "brickwall/rule.hpp"

namespace brickwall {

using rational_matrix = std::vector<std::vector<rational>>;

// Entry (t, u) is the (expected) number of bricks of type u in the image of a
// brick of type t. Rows and columns follow the rule's declaration order.
struct substitution_matrix {
    std::vector<std::string> order;
    rational_matrix entries;
    // Area of each type measured in cells of the substitution: brick area for
    // geometric rules, one grid cell per letter for block rules. Empty for a
    // matrix built by hand.
    std::vector<rational> cell_area;
    rational expansion = 0;

    std::size_t size() const { return entries.size(); }
};

class spectral_error : public error {
public:
    using error::error;
};

substitution_matrix matrix(const substitution_rule& rule);

// Matrix without rule metadata, e.g. for tests.
substitution_matrix make_matrix(rational_matrix entries);

// M * cell_area == expansion * cell_area, exactly. Throws if the matrix
// carries no area vector.
bool area_eigen_identity(const substitution_matrix& m);

struct power_iteration_options {
    double tolerance = 1e-9;
    int max_iterations = 100000;
};

// Dominant eigenvalue by power iteration from the all-ones vector. Throws
// spectral_error when the max-norm change of the normalized iterate does not
// fall below the tolerance within the cap, or when the rule-derived area
// identity fails.
double pf_eigenvalue(const substitution_matrix& m, power_iteration_options opts = {});

// Normalized left Perron-Frobenius eigenvector (power iteration on the
// transpose), entries summing to 1.
std::vector<double> brick_frequencies(const substitution_matrix& m, power_iteration_options opts = {});

rational_matrix multiply(const rational_matrix& a, const rational_matrix& b);
rational_matrix identity_matrix(std::size_t n);

// Exact m^n by repeated squaring.
rational_matrix matrix_power(const rational_matrix& m, unsigned n);

// True when every option of every type has the same type counts, so the
// number of bricks at each level does not depend on the coin flips.
bool count_invariant(const substitution_rule& rule);

// Number of bricks in the n-th image of the seed: row `seed` of M^n summed.
big_count count_bricks(const substitution_rule& rule, std::string_view seed_type, unsigned n);

// Number of distinct outcomes of all random choices made while generating the
// n-th image: product over levels m < n and types t of k_t^(N_m(t)), where
// k_t counts options of t with positive probability.
big_count count_realizations(const substitution_rule& rule, std::string_view seed_type, unsigned n);

}
