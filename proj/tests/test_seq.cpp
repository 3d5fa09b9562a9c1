#include <doctest.h>

#include <random>

#include "treelab/errors.hpp"
#include "treelab/seq.hpp"

using namespace treelab;

namespace {

Seq random_seq(std::mt19937_64& rng, std::size_t max_len, std::uint64_t max_entry) {
  std::size_t len = rng() % (max_len + 1);
  std::vector<Nat> e;
  e.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    e.emplace_back(static_cast<unsigned long>(rng() % (max_entry + 1)));
  return Seq(std::move(e));
}

} // namespace

TEST_CASE("cantor pairing is bijective") {
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(0, 1) == 2);
  CHECK(cantor_pair(1, 0) == 1);
  for (unsigned long z = 0; z < 2000; ++z) {
    auto [x, y] = cantor_unpair(Nat(z));
    CHECK(cantor_pair(x, y) == Nat(z));
  }
  // well beyond 64 bits
  Nat big("123456789012345678901234567890123456789");
  auto [x, y] = cantor_unpair(big);
  CHECK(cantor_pair(x, y) == big);
}

TEST_CASE("sequence codes: base cases") {
  CHECK(encode(Seq{}) == 0);
  CHECK(encode(Seq{0}) == 1); // 1 + pair(0,0)
  CHECK(encode(Seq{1}) == 3); // 1 + pair(0,1)
  CHECK(decode(Nat(0)) == Seq{});
  CHECK(decode(Nat(1)) == Seq{0});
  CHECK(decode(encode(Seq{5, 2, 7})) == Seq{5, 2, 7});
}

TEST_CASE("sequence codes: mutually inverse") {
  for (unsigned long n = 0; n < 10000; ++n) CHECK(encode(decode(Nat(n))) == Nat(n));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    Seq s = random_seq(rng, 6, 8);
    CHECK(decode(encode(s)) == s);
  }
}

TEST_CASE("shift_up adds one to every entry") {
  CHECK(shift_up(Seq{1, 3, 5}) == Seq{2, 4, 6});
  CHECK(shift_up(Seq{}) == Seq{});
  CHECK(shift_up(Seq{0, 0}) == Seq{1, 1});
}

TEST_CASE("shift_down is the monus shift") {
  CHECK(shift_down(Seq{2, 4, 6}) == Seq{1, 3, 5});
  CHECK(shift_down(Seq{0}) == Seq{0});
  CHECK(shift_down(Seq{}) == Seq{});
}

TEST_CASE("shift roundtrips") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    Seq s = random_seq(rng, 6, 9);
    CHECK(shift_down(shift_up(s)) == s);
    Seq up = shift_up(s); // all entries positive
    CHECK(shift_up(shift_down(up)) == up);
  }
}

TEST_CASE("interleave alternates entries") {
  CHECK(interleave(Seq{1, 2}, Seq{0, 1}) == Seq{1, 0, 2, 1});
  CHECK(interleave(Seq{}, Seq{}) == Seq{});
  CHECK_THROWS_AS(interleave(Seq{3}, Seq{7, 7}), input_error);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    Seq a = random_seq(rng, 5, 9);
    std::vector<Nat> be;
    for (std::size_t j = 0; j < a.size(); ++j)
      be.emplace_back(static_cast<unsigned long>(rng() % 10));
    Seq b{be};
    Seq m = interleave(a, b);
    REQUIRE(m.size() == 2 * a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(m[2 * j] == a[j]);
      CHECK(m[2 * j + 1] == b[j]);
    }
  }
}

TEST_CASE("is_prefix basics") {
  CHECK(is_prefix(Seq{}, Seq{4, 4}));
  CHECK(is_prefix(Seq{1, 2}, Seq{1, 2, 9}));
  CHECK_FALSE(is_prefix(Seq{2}, Seq{1, 2}));
}

TEST_CASE("is_prefix is a partial order") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 2000; ++i) {
    Seq a = random_seq(rng, 4, 2);
    Seq b = random_seq(rng, 4, 2);
    Seq c = random_seq(rng, 4, 2);
    CHECK(is_prefix(a, a));
    if (is_prefix(a, b) && is_prefix(b, a)) CHECK(a == b);
    if (is_prefix(a, b) && is_prefix(b, c)) CHECK(is_prefix(a, c));
  }
}

TEST_CASE("sequence text form") {
  CHECK(seq_to_text(Seq{1, 3, 5}) == "[1,3,5]");
  CHECK(seq_to_text(Seq{}) == "[]");
  CHECK(seq_from_text("[1,3,5]") == Seq{1, 3, 5});
  CHECK(seq_from_text("[]") == Seq{});
  CHECK(seq_from_text(" [ 2 , 4 ] ") == Seq{2, 4});
  CHECK_THROWS_AS(seq_from_text("1,2"), input_error);
  CHECK_THROWS_AS(seq_from_text("[1,,2]"), input_error);
  CHECK_THROWS_AS(seq_from_text("[-1]"), input_error);
}

TEST_CASE("shortlex and lex orders") {
  CHECK(Seq{} < Seq{0});
  CHECK(Seq{5} < Seq{0, 0});
  CHECK(lex_less(Seq{}, Seq{0}));
  CHECK(lex_less(Seq{0, 7}, Seq{1}));
  CHECK_FALSE(lex_less(Seq{1}, Seq{0, 7}));
}
