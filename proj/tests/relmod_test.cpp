#include <doctest.h>

#include <random>

#include "asph/error.hpp"
#include "asph/peiffer.hpp"
#include "asph/relmod.hpp"
#include "support.hpp"

using namespace asph;
using asph::test::word;

namespace {

  GroupPresentation const S3 = parse_group_presentation(
      "group S3\ngens a b\nrel r1 = a^2\nrel r2 = b^2\nrel r3 = a b a b a b");
  GroupPresentation const Z2 = parse_group_presentation(
      "group Z2\ngens a b\nrel c = a b a^-1 b^-1");

  YSymbol sym(GroupPresentation const& gp, char const* rel, char const* conj,
              int sign = 1) {
    return {gp.relator_index(rel), word(gp.alphabet(), conj), sign};
  }

  YSequence random_sequence(GroupPresentation const& gp, std::mt19937_64& rng,
                            std::size_t max_len) {
    YSequence d;
    for (std::size_t n = rng() % (max_len + 1); n > 0; --n) {
      d.push_back({rng() % gp.size(),
                   FreeWord(gp.alphabet(), test::letters_of(test::random_raw(rng, 2, 3))),
                   rng() % 2 == 0 ? 1 : -1});
    }
    return d;
  }

}  // namespace

TEST_CASE("oracles") {
  FreeOracle free(S3.alphabet());
  CHECK(free.equal(word(S3.alphabet(), "a a"), word(S3.alphabet(), "1"))
        == Equality::NotEqual);
  CHECK(free.canon(word(S3.alphabet(), "a b")) == word(S3.alphabet(), "a b"));

  CosetOracle cosets(S3, 100);
  CHECK(cosets.order() == 6);
  CHECK(cosets.equal(word(S3.alphabet(), "a a"), word(S3.alphabet(), "1"))
        == Equality::Equal);
  CHECK(cosets.equal(word(S3.alphabet(), "a b a"), word(S3.alphabet(), "b a b"))
        == Equality::Equal);
  CHECK(cosets.equal(word(S3.alphabet(), "a"), word(S3.alphabet(), "b"))
        == Equality::NotEqual);
  CHECK(cosets.canon(word(S3.alphabet(), "a^-1 b^3")) == word(S3.alphabet(), "a b"));
  auto inf = parse_group_presentation("group Z\ngens a\n");
  CHECK_THROWS_AS(CosetOracle(inf, 50), PreconditionError);

  AbelianOracle ab(Z2);
  CHECK(ab.equal(word(Z2.alphabet(), "a b"), word(Z2.alphabet(), "b a"))
        == Equality::Unknown);
  CHECK(ab.equal(word(Z2.alphabet(), "a"), word(Z2.alphabet(), "b"))
        == Equality::NotEqual);
  CHECK(ab.equal(word(Z2.alphabet(), "a b"), word(Z2.alphabet(), "a b"))
        == Equality::Equal);
  CHECK(!ab.canon(word(Z2.alphabet(), "a")));
  // (1, 1) = (3, 3) - (2, 0) - (0, 2), while (1, 0) is not in that lattice
  AbelianOracle abs3(S3);
  CHECK(abs3.in_relator_lattice({1, 1}));
  CHECK(!abs3.in_relator_lattice({1, 0}));

  CHECK(make_oracle("cosets", S3, 100)->name() == "cosets");
  CHECK_THROWS_AS(make_oracle("magic", S3, 100), Error);
}

TEST_CASE("gamma image") {
  FreeOracle free(S3.alphabet());
  CHECK(gamma_image(S3, {}, free).empty());

  auto u    = word(S3.alphabet(), "a b");
  auto pair = insertion_generator(sym(S3, "r3", "a b"));
  CHECK(gamma_image(S3, pair, free) == basis_element(u, 2) * 2);

  YSequence two{sym(S3, "r3", "a"), sym(S3, "r3", "b")};
  CHECK(gamma_image(S3, two, free)
        == basis_element(word(S3.alphabet(), "a"), 2)
               + basis_element(word(S3.alphabet(), "b"), 2));

  // the signed variant cancels the pair instead
  CHECK(gamma_image(S3, pair, free, true).empty());

  // canonical keys under the finite quotient
  CosetOracle cosets(S3, 100);
  YSequence   same{sym(S3, "r1", "a b a"), sym(S3, "r1", "b a b")};
  auto        e = gamma_image(S3, same, cosets);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->second == 2);
}

TEST_CASE("gamma image is additive over concatenation") {
  FreeOracle      free(S3.alphabet());
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto d = random_sequence(S3, rng, 5);
    auto e = random_sequence(S3, rng, 5);
    auto de = d;
    de.insert(de.end(), e.begin(), e.end());
    REQUIRE(gamma_image(S3, de, free)
            == gamma_image(S3, d, free) + gamma_image(S3, e, free));
  }
}

TEST_CASE("undecided keys are reported") {
  AbelianOracle ab(Z2);
  YSequence     d{sym(Z2, "c", "a b"), sym(Z2, "c", "b a")};
  try {
    gamma_image(Z2, d, ab);
    FAIL("expected a partial result");
  } catch (PartialResultError const& e) {
    REQUIRE(e.undecided().size() == 1);
    CHECK(e.undecided()[0].find("c") != std::string::npos);
  }
  // provably different keys merge nothing and need no decision
  YSequence apart{sym(Z2, "c", "a"), sym(Z2, "c", "b")};
  CHECK(gamma_image(Z2, apart, ab).terms().size() == 2);
}

TEST_CASE("module action") {
  FreeOracle free(S3.alphabet());
  auto       e = basis_element(FreeWord(S3.alphabet()), 0);
  CHECK(module_action(FreeWord(S3.alphabet()), e, free) == e);
  CHECK(module_action(word(S3.alphabet(), "a"), e, free)
        == basis_element(word(S3.alphabet(), "a^-1"), 0));

  std::mt19937_64 rng(4);
  CosetOracle     cosets(S3, 100);
  for (int i = 0; i < 200; ++i) {
    FreeWord w(S3.alphabet(), test::letters_of(test::random_raw(rng, 2, 5)));
    FreeWord v(S3.alphabet(), test::letters_of(test::random_raw(rng, 2, 5)));
    for (GroupOracle const* o : {static_cast<GroupOracle const*>(&free),
                                 static_cast<GroupOracle const*>(&cosets)}) {
      auto x = gamma_image(S3, random_sequence(S3, rng, 4), *o);
      REQUIRE(module_action(invert(w), module_action(w, x, *o), *o) == x);
      REQUIRE(module_action(v, module_action(w, x, *o), *o)
              == module_action(w * v, x, *o));
    }
  }
}

TEST_CASE("is zero") {
  FreeOracle free(S3.alphabet());
  CHECK(is_zero(RelModElement{}, free) == Answer::Yes);
  CHECK(is_zero(basis_element(FreeWord(S3.alphabet()), 0) * 2, free) == Answer::No);

  AbelianOracle ab(Z2);
  auto          e = basis_element(word(Z2.alphabet(), "a b"), 0)
           - basis_element(word(Z2.alphabet(), "b a"), 0);
  CHECK(is_zero(e, ab) == Answer::Unknown);
  CosetOracle cosets(S3, 100);
  auto        f = basis_element(word(S3.alphabet(), "a a"), 1)
           - basis_element(FreeWord(S3.alphabet()), 1);
  CHECK(is_zero(f, cosets) == Answer::Yes);
}

TEST_CASE("insertion identity and exchange invariance") {
  FreeOracle      free(S3.alphabet());
  CosetOracle     cosets(S3, 100);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    auto    d = random_sequence(S3, rng, 5);
    YSymbol a{rng() % S3.size(),
              FreeWord(S3.alphabet(), test::letters_of(test::random_raw(rng, 2, 4))),
              rng() % 2 == 0 ? 1 : -1};
    auto    g  = insertion_generator(a);
    auto    da = d;
    da.insert(da.end(), g.begin(), g.end());
    REQUIRE(gamma_image(S3, da, free) - gamma_image(S3, d, free)
            == basis_element(a.conj, a.rel) * 2);
  }
  for (int i = 0; i < 200; ++i) {
    auto d = random_sequence(S3, rng, 6);
    if (d.size() < 2) {
      continue;
    }
    Move m{rng() % 2 == 0 ? MoveKind::ExchangeL : MoveKind::ExchangeR,
           rng() % (d.size() - 1), std::nullopt};
    REQUIRE(gamma_image(S3, apply_move(S3, d, m), cosets) == gamma_image(S3, d, cosets));
  }
}
