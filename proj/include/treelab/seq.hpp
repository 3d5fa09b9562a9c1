#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "treelab/nat.hpp"

namespace treelab {

/// A finite sequence of naturals.  The universal node type for all trees.
///
/// Ordering is shortlex (length first, then entrywise), which makes ordered
/// node sets print in breadth-first order.
class Seq {
public:
  Seq() = default;
  explicit Seq(std::vector<Nat> entries) : entries_(std::move(entries)) {}
  Seq(std::initializer_list<unsigned long> xs) {
    entries_.reserve(xs.size());
    for (auto x : xs) entries_.emplace_back(x);
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Nat& operator[](std::size_t i) const { return entries_[i]; }
  const Nat& back() const { return entries_.back(); }
  const std::vector<Nat>& entries() const { return entries_; }

  /// Extension by one entry.
  Seq child(const Nat& label) const;
  /// Initial segment of the given length.
  Seq prefix(std::size_t len) const;
  /// Initial segment omitting the last entry; identity on the empty sequence.
  Seq parent() const;
  /// Concatenation.
  Seq cat(const Seq& tail) const;

  bool operator==(const Seq& o) const { return entries_ == o.entries_; }
  std::strong_ordering operator<=>(const Seq& o) const;

private:
  std::vector<Nat> entries_;
};

/// Lexicographic order with prefixes first.  Under this order the extensions
/// of a node form a contiguous run directly after it, which the splitting
/// search relies on.
bool lex_less(const Seq& a, const Seq& b);

/// Sequence code: code(<>) = 0, code(s^a) = 1 + pair(code(s), a).
using SeqCode = Nat;

SeqCode encode(const Seq& s);
Seq decode(const SeqCode& code);

/// Pointwise +1, preserving length.
Seq shift_up(const Seq& s);
/// Pointwise monus, 0 - 1 = 0.
Seq shift_down(const Seq& s);

/// Alternating entries <a(0), b(0), ..., a(n), b(n)>; lengths must agree.
Seq interleave(const Seq& a, const Seq& b);

bool is_prefix(const Seq& a, const Seq& b);

/// Text form used by the CLI: "[1,3,5]", "[]" for the empty sequence.
std::string seq_to_text(const Seq& s);
Seq seq_from_text(const std::string& text);

} // namespace treelab
