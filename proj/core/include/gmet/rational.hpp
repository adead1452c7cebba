#pragma once

#include <gmpxx.h>

#include <string>

namespace gmet {

// Exact arithmetic everywhere outside the eigensolver.
using Rat = mpq_class;

// Parses a nonnegative or negative decimal literal ("0", "1", "2.25", "-3.5")
// into an exact rational. Throws std::invalid_argument on malformed input.
Rat rat_from_decimal(const std::string& text);

// Canonical "p" or "p/q" form.
std::string fraction_string(const Rat& r);

// Exact finite decimal expansion. Throws if the denominator has a prime
// factor other than 2 or 5.
std::string decimal_string(const Rat& r);

double to_double(const Rat& r);

}  // namespace gmet
