#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hrp {

/// Arbitrary-precision integer and exact rational scalar types.
/// Every Rat is kept canonical: positive denominator, lowest terms.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "num" or "num/den" (optional leading sign, decimal digits only).
/// Throws std::invalid_argument on malformed text, std::domain_error on a zero
/// denominator.
Rat parse_rat(std::string_view text);

/// Canonical text form: "num/den", with "/den" omitted when den == 1.
std::string rat_str(const Rat& q);

bool is_integer(const Rat& q);

struct IsqrtResult {
  Int root;    // floor(sqrt(n))
  bool exact;  // root * root == n
};

/// Floor square root with exactness flag. Throws std::domain_error for n < 0.
IsqrtResult integer_sqrt(const Int& n);

/// The non-negative rational square root, when one exists. A canonical
/// rational is a square iff numerator and denominator are both integer
/// squares. Absent for negatives and non-squares.
std::optional<Rat> rational_sqrt(const Rat& q);

/// max(|num|, den) in lowest terms; the bound used by exhaustive scans.
Int height(const Rat& q);

}  // namespace hrp
