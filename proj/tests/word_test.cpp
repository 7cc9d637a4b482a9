#include <doctest.h>

#include <random>

#include "asph/error.hpp"
#include "asph/word.hpp"
#include "support.hpp"

using namespace asph;
using asph::test::word;

namespace {
  Alphabet const ab({"a", "b"});
  Alphabet const abz({"a", "b", "z"});

  SignedLetter const A{0, 1}, Ai{0, -1}, B{1, 1}, Bi{1, -1};
}  // namespace

TEST_CASE("reduce") {
  CHECK(FreeWord(ab, {A, Ai, B}).letters() == std::vector<SignedLetter>{B});
  CHECK(FreeWord(ab, {}).empty());
  // [a, b, b^-1, a^-1, a]; naive cancellation to a fixpoint gives [a]
  test::Raw raw{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {0, 1}};
  auto      expected = test::naive_reduce(raw);
  CHECK(expected == test::Raw{{0, 1}});
  CHECK(test::raw_of(FreeWord(ab, test::letters_of(raw))) == expected);
  CHECK_THROWS_AS(FreeWord(ab, {SignedLetter{2, 1}}), AlphabetError);
}

TEST_CASE("reduce agrees with naive cancellation and is idempotent") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto raw     = test::random_raw(rng, 3, 14);
    auto letters = test::letters_of(raw);
    auto w       = reduce(abz, letters);
    REQUIRE(test::raw_of(w) == test::naive_reduce(raw));
    CHECK(reduce(abz, w.letters()) == w);
  }
}

TEST_CASE("multiply") {
  CHECK((word(ab, "a") * word(ab, "a^-1")).empty());
  CHECK(word(ab, "1") * word(ab, "b") == word(ab, "b"));
  // oracle: reduce the concatenation naively
  test::Raw cat{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  CHECK(test::raw_of(word(ab, "a b") * word(ab, "b^-1 a"))
        == test::naive_reduce(cat));
  CHECK(word(ab, "a b") * word(ab, "b^-1 a") == word(ab, "a a"));
  CHECK_THROWS_AS(word(ab, "a") * word(abz, "a"), AlphabetError);
}

TEST_CASE("invert") {
  CHECK(invert(word(ab, "a b^-1")) == word(ab, "b a^-1"));
  CHECK(invert(word(ab, "1")).empty());
  CHECK(invert(word(ab, "a a")) == word(ab, "a^-1 a^-1"));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(word(ab, "1"), word(ab, "b")) == word(ab, "b"));
  CHECK(conjugate(word(ab, "a"), word(ab, "b")) == word(ab, "a b a^-1"));
  CHECK(conjugate(word(ab, "a"), word(ab, "a")) == word(ab, "a"));
}

TEST_CASE("exponent sums and abelianization") {
  CHECK(exponent_sum(word(ab, "a b a^-1"), "a") == 0);
  CHECK(exponent_sum(word(abz, "z a"), "z") == 1);
  // scan oracle: +1 for each a, -1 for each a^-1
  test::Raw raw{{0, 1}, {0, 1}, {1, -1}, {0, 1}};
  long      count = 0;
  for (auto [l, s] : raw) {
    count += l == 0 ? s : 0;
  }
  CHECK(count == 3);
  CHECK(exponent_sum(FreeWord(ab, test::letters_of(raw)), "a") == count);
  CHECK(abelianize(word(ab, "a b a^-1")) == std::vector<long>{0, 1});
  CHECK(abelianize(word(ab, "1")) == std::vector<long>{0, 0});
  CHECK(abelianize(word(ab, "a a b^-1")) == std::vector<long>{2, -1});
  CHECK_THROWS_AS(exponent_sum(word(ab, "a"), "z"), AlphabetError);
}

TEST_CASE("group laws on random words") {
  std::mt19937_64 rng(11);
  auto            rnd = [&] {
    return FreeWord(abz, test::letters_of(test::random_raw(rng, 3, 10)));
  };
  FreeWord const one(abz);
  for (int i = 0; i < 1000; ++i) {
    auto u = rnd(), v = rnd(), w = rnd();
    REQUIRE((u * v) * w == u * (v * w));
    REQUIRE((u * invert(u)).empty());
    REQUIRE(invert(invert(u)) == u);
    REQUIRE(conjugate(one, v) == v);
    REQUIRE(conjugate(u, conjugate(w, v)) == conjugate(u * w, v));
    auto sum = abelianize(u * v);
    auto au = abelianize(u), av = abelianize(v);
    for (std::size_t k = 0; k < 3; ++k) {
      REQUIRE(sum[k] == au[k] + av[k]);
    }
  }
}

TEST_CASE("parse and print") {
  CHECK(to_string(word(ab, "a b^-1 a")) == "a b^-1 a");
  CHECK(to_string(word(ab, "1")) == "1");
  CHECK(word(ab, "a^3 b^-2") == word(ab, "a a a b^-1 b^-1"));
  CHECK_THROWS_AS(word(ab, "a c"), Error);
  CHECK_THROWS_AS(word(ab, "a^x"), Error);
}

TEST_CASE("embedding is explicit") {
  auto w = word(ab, "a b^-1");
  CHECK(embed(w, abz) == word(abz, "a b^-1"));
  CHECK_THROWS_AS(embed(word(abz, "z"), ab), AlphabetError);
  CHECK(Alphabet({"a", "b"}) == ab);
  CHECK(!(ab == abz));
}

TEST_CASE("shortlex order puts x before x^-1 before the next letter") {
  CHECK(word(ab, "a") < word(ab, "a^-1"));
  CHECK(word(ab, "a^-1") < word(ab, "b"));
  CHECK(word(ab, "b") < word(ab, "a a"));
}
