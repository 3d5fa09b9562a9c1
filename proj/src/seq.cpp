#include "treelab/seq.hpp"

#include <algorithm>
#include <sstream>

#include "treelab/errors.hpp"

namespace treelab {

Seq Seq::child(const Nat& label) const {
  std::vector<Nat> out = entries_;
  out.push_back(label);
  return Seq(std::move(out));
}

Seq Seq::prefix(std::size_t len) const {
  if (len >= size()) return *this;
  return Seq(std::vector<Nat>(entries_.begin(), entries_.begin() + len));
}

Seq Seq::parent() const {
  if (empty()) return *this;
  return prefix(size() - 1);
}

Seq Seq::cat(const Seq& tail) const {
  std::vector<Nat> out = entries_;
  out.insert(out.end(), tail.entries_.begin(), tail.entries_.end());
  return Seq(std::move(out));
}

std::strong_ordering Seq::operator<=>(const Seq& o) const {
  if (size() != o.size()) return size() <=> o.size();
  for (std::size_t i = 0; i < size(); ++i) {
    int c = cmp(entries_[i], o.entries_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool lex_less(const Seq& a, const Seq& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

SeqCode encode(const Seq& s) {
  Nat code = 0;
  for (std::size_t i = 0; i < s.size(); ++i) code = 1 + cantor_pair(code, s[i]);
  return code;
}

Seq decode(const SeqCode& code) {
  if (code < 0) throw input_error("decode: negative code");
  std::vector<Nat> reversed;
  Nat cur = code;
  while (cur != 0) {
    auto [head, last] = cantor_unpair(cur - 1);
    reversed.push_back(last);
    cur = head;
  }
  std::reverse(reversed.begin(), reversed.end());
  return Seq(std::move(reversed));
}

Seq shift_up(const Seq& s) {
  std::vector<Nat> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[i] + 1);
  return Seq(std::move(out));
}

Seq shift_down(const Seq& s) {
  std::vector<Nat> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[i] > 0 ? Nat(s[i] - 1) : Nat(0));
  return Seq(std::move(out));
}

Seq interleave(const Seq& a, const Seq& b) {
  if (a.size() != b.size())
    throw input_error("interleave: length mismatch (" + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  std::vector<Nat> out;
  out.reserve(2 * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(a[i]);
    out.push_back(b[i]);
  }
  return Seq(std::move(out));
}

bool is_prefix(const Seq& a, const Seq& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string seq_to_text(const Seq& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << nat_to_string(s[i]);
  }
  out << ']';
  return out.str();
}

namespace {
std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}
} // namespace

Seq seq_from_text(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw input_error("sequence syntax: expected [a,b,...], got '" + text + "'");
  std::string body = trim(t.substr(1, t.size() - 2));
  if (body.empty()) return Seq();
  std::vector<Nat> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string item =
        trim(comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos));
    if (item.empty()) throw input_error("sequence syntax: empty entry in '" + text + "'");
    entries.push_back(nat_from_string(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Seq(std::move(entries));
}

} // namespace treelab
