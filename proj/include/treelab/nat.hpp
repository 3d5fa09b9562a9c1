#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace treelab {

/// Arbitrary-precision natural number.  Sequence entries and sequence codes
/// are Nat values; all library code keeps them non-negative.
using Nat = mpz_class;

/// Cantor pairing (x+y)(x+y+1)/2 + y.  Bijection between Nat x Nat and Nat.
Nat cantor_pair(const Nat& x, const Nat& y);

/// Inverse of cantor_pair.
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

bool fits_u64(const Nat& n);

/// Narrows to uint64_t; throws input_error when negative or too large.
std::uint64_t to_u64(const Nat& n);

/// Narrows to size_t via to_u64.
std::size_t to_size(const Nat& n);

std::string nat_to_string(const Nat& n);

/// Parses a non-negative decimal integer; throws input_error on junk.
Nat nat_from_string(const std::string& s);

} // namespace treelab
