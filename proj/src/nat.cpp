#include "treelab/nat.hpp"

#include <limits>

#include "treelab/errors.hpp"

namespace treelab {

Nat cantor_pair(const Nat& x, const Nat& y) {
  Nat s = x + y;
  Nat r = s * (s + 1);
  r /= 2;
  return r + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  if (z < 0) throw input_error("cantor_unpair: negative argument");
  // w = floor((sqrt(8z+1) - 1) / 2) is the diagonal index.
  Nat disc = 8 * z + 1;
  Nat root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Nat w = (root - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat y = z - t;
  Nat x = w - y;
  return {x, y};
}

bool fits_u64(const Nat& n) {
  if (n < 0) return false;
  return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Nat& n) {
  if (!fits_u64(n)) throw input_error("natural out of uint64 range: " + nat_to_string(n));
  std::uint64_t hi = mpz_getlimbn(n.get_mpz_t(), 1);
  std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
  if (sizeof(mp_limb_t) >= 8) return lo;
  return (hi << 32) | lo;
}

std::size_t to_size(const Nat& n) {
  std::uint64_t v = to_u64(n);
  if (v > std::numeric_limits<std::size_t>::max())
    throw input_error("natural out of size_t range");
  return static_cast<std::size_t>(v);
}

std::string nat_to_string(const Nat& n) { return n.get_str(); }

Nat nat_from_string(const std::string& s) {
  if (s.empty()) throw input_error("empty numeral");
  for (char c : s)
    if (c < '0' || c > '9') throw input_error("not a natural number: " + s);
  return Nat(s);
}

} // namespace treelab
