#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace brickwall {

// Exact arithmetic for probabilities, matrix entries and counts.
using rational = mpq_class;
using big_count = mpz_class;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts "num/den" or a bare integer. Throws brickwall::error on junk or a
// zero denominator.
rational parse_rational(std::string_view text);

// Always "num/den", e.g. "2/1", "-1/3".
std::string fraction_string(const rational& q);

// Canonical GMP form: "2", "1/3".
std::string short_string(const rational& q);

std::string to_string(const big_count& n);

}
