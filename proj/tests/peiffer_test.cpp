#include <doctest.h>

#include <algorithm>
#include <random>

#include "asph/error.hpp"
#include "asph/peiffer.hpp"
#include "support.hpp"

using namespace asph;
using asph::test::word;

namespace {

  GroupPresentation const P =
      parse_group_presentation("group P\ngens a b\nrel r = a b\nrel s = a^2\n");
  GroupPresentation const S3 = parse_group_presentation(
      "group S3\ngens a b\nrel r1 = a^2\nrel r2 = b^2\nrel r3 = a b a b a b");

  YSymbol sym(GroupPresentation const& gp, char const* rel, char const* conj,
              int sign = 1) {
    return {gp.relator_index(rel), word(gp.alphabet(), conj), sign};
  }

  YSymbol random_symbol(GroupPresentation const& gp, std::mt19937_64& rng) {
    return {rng() % gp.size(),
            FreeWord(gp.alphabet(), test::letters_of(test::random_raw(rng, 2, 3))),
            rng() % 2 == 0 ? 1 : -1};
  }

  YSequence random_sequence(GroupPresentation const& gp, std::mt19937_64& rng,
                            std::size_t min_len, std::size_t max_len) {
    YSequence d;
    for (std::size_t n = min_len + rng() % (max_len - min_len + 1); n > 0; --n) {
      d.push_back(random_symbol(gp, rng));
    }
    return d;
  }

}  // namespace

TEST_CASE("boundary") {
  CHECK(boundary(P, {}).empty());
  CHECK(boundary(P, {sym(P, "r", "1")}) == word(P.alphabet(), "a b"));
  CHECK(boundary(P, {sym(P, "r", "1"), sym(P, "r", "1", -1)}).empty());
  CHECK(boundary(P, {sym(P, "r", "b", -1)}) == word(P.alphabet(), "b b^-1 a^-1 b^-1"));
  CHECK_THROWS_AS(boundary(P, {YSymbol{7, FreeWord(P.alphabet()), 1}}), Error);
}

TEST_CASE("identity sequences") {
  CHECK(is_identity(P, {}));
  CHECK(!is_identity(P, {sym(P, "r", "1")}));
  CHECK(is_identity(P, {sym(P, "r", "a"), sym(P, "r", "a", -1)}));
}

TEST_CASE("moves") {
  YSequence rr{sym(P, "r", "1"), sym(P, "r", "1")};
  auto      after = apply_move(P, rr, {MoveKind::ExchangeL, 0, std::nullopt});
  CHECK(after == YSequence{sym(P, "r", "a b"), sym(P, "r", "1")});
  CHECK(boundary(P, after) == boundary(P, rr));

  YSequence pair{sym(P, "r", "a"), sym(P, "r", "a", -1)};
  CHECK(apply_move(P, pair, {MoveKind::Delete, 0, std::nullopt}).empty());
  YSequence mismatch{sym(P, "r", "a"), sym(P, "r", "b", -1)};
  CHECK_THROWS_AS(apply_move(P, mismatch, {MoveKind::Delete, 0, std::nullopt}),
                  IllegalMoveError);
  CHECK_THROWS_AS(apply_move(P, pair, {MoveKind::ExchangeL, 1, std::nullopt}),
                  IllegalMoveError);
  CHECK_THROWS_AS(apply_move(P, pair, {MoveKind::Insert, 0, std::nullopt}),
                  IllegalMoveError);

  auto ins = apply_move(P, pair, {MoveKind::Insert, 1, sym(P, "s", "b")});
  CHECK(ins.size() == 4);
  CHECK(ins[1] == sym(P, "s", "b"));
  CHECK(ins[2] == sym(P, "s", "b", -1));
}

TEST_CASE("legal moves") {
  CHECK(legal_moves(P, {}, {}).empty());
  YSequence two{sym(P, "r", "1"), sym(P, "s", "a")};
  auto      m2 = legal_moves(P, two, {});
  REQUIRE(m2.size() == 2);
  CHECK(m2[0].kind == MoveKind::ExchangeL);
  CHECK(m2[1].kind == MoveKind::ExchangeR);
  // by hand: Delete at 0, ExchangeL at 0, ExchangeR at 0
  YSequence pair{sym(P, "r", "a"), sym(P, "r", "a", -1)};
  auto      m3 = legal_moves(P, pair, {});
  REQUIRE(m3.size() == 3);
  CHECK(m3[0].kind == MoveKind::Delete);
  // a pool symbol can go in at each of the three gaps
  CHECK(legal_moves(P, pair, {sym(P, "s", "1")}).size() == 6);
}

TEST_CASE("boundary invariance and exchange involution on random input") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto d     = random_sequence(S3, rng, 0, 6);
    auto moves = legal_moves(S3, d, {random_symbol(S3, rng)});
    auto m     = moves[rng() % moves.size()];
    REQUIRE(boundary(S3, apply_move(S3, d, m)) == boundary(S3, d));
  }
  for (int i = 0; i < 500; ++i) {
    auto        d   = random_sequence(S3, rng, 2, 6);
    std::size_t pos = rng() % (d.size() - 1);
    Move        L{MoveKind::ExchangeL, pos, std::nullopt};
    Move        R{MoveKind::ExchangeR, pos, std::nullopt};
    REQUIRE(apply_move(S3, apply_move(S3, d, L), R) == d);
    REQUIRE(apply_move(S3, apply_move(S3, d, R), L) == d);
    REQUIRE(inverse_move(S3, d, L) == R);
  }
}

TEST_CASE("scramble") {
  auto s0 = scramble(S3, 1, 0);
  CHECK(s0.sequence.empty());
  CHECK(s0.moves.empty());
  auto s1 = scramble(S3, 1, 1);
  REQUIRE(s1.sequence.size() == 2);
  CHECK(s1.sequence[1] == s1.sequence[0].inverse());
  REQUIRE(s1.moves.size() == 1);
  CHECK(s1.moves[0].kind == MoveKind::Insert);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = scramble(S3, seed, seed % 9);
    REQUIRE(is_identity(S3, s.sequence));
    REQUIRE(s.moves.size() == seed % 9);
    REQUIRE(replay(S3, {}, s.moves) == s.sequence);
  }
  CHECK(scramble(S3, 42, 5).sequence == scramble(S3, 42, 5).sequence);
}

TEST_CASE("search and verify") {
  auto empty = search_trivialization(S3, {});
  REQUIRE(!empty.exhausted());
  CHECK(empty.certificate->moves.empty());

  YSequence pair{sym(S3, "r3", "a"), sym(S3, "r3", "a", -1)};
  auto      one = search_trivialization(S3, pair);
  REQUIRE(!one.exhausted());
  REQUIRE(one.certificate->moves.size() == 1);
  CHECK(one.certificate->moves[0].kind == MoveKind::Delete);

  CHECK_THROWS_AS(search_trivialization(S3, {sym(S3, "r1", "1")}), PreconditionError);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t   k  = 1 + seed % 6;
    auto          sc = scramble(S3, seed, k);
    SearchOptions opts;
    opts.depth = 2 * k;
    auto res   = search_trivialization(S3, sc.sequence, opts);
    if (!res.exhausted()) {
      REQUIRE(verify_certificate(S3, sc.sequence, *res.certificate).ok);
    }
    // the scramble undone move by move is always a certificate
    Certificate back{PoolKind::None, 0, invert_moves(S3, {}, sc.moves)};
    REQUIRE(verify_certificate(S3, sc.sequence, back).ok);
  }
  auto again = search_trivialization(S3, scramble(S3, 9, 4).sequence);
  auto twice = search_trivialization(S3, scramble(S3, 9, 4).sequence);
  REQUIRE(!again.exhausted());
  CHECK(again.certificate->moves == twice.certificate->moves);
  CHECK(again.nodes == twice.nodes);

  CHECK(verify_certificate(S3, {}, {}).ok);
  Certificate bad{PoolKind::None, 0, {{MoveKind::Delete, 5, std::nullopt}}};
  auto        rep = verify_certificate(S3, pair, bad);
  CHECK(!rep.ok);
  CHECK(rep.failing_step == 0u);
  Certificate short_of_empty{PoolKind::None, 0, {}};
  CHECK(!verify_certificate(S3, pair, short_of_empty).ok);
}

TEST_CASE("search gives up within its budget") {
  // needs four exchanges before anything cancels
  auto          sc = scramble(S3, 3, 6);
  SearchOptions opts;
  opts.budget = 1;
  opts.depth  = 12;
  auto res    = search_trivialization(S3, sc.sequence, opts);
  if (!sc.sequence.empty() && sc.sequence.size() > 2) {
    CHECK(res.exhausted());
    CHECK(res.nodes <= 1);
  }
}

TEST_CASE("centrality of an inserted pair") {
  SearchOptions opts;
  opts.budget = 64;
  opts.depth  = 4;
  opts.pool   = PoolKind::None;
  auto      s = sym(S3, "r3", "b");
  auto      g = insertion_generator(sym(S3, "r1", "a", -1));
  YSequence left{s, g[0], g[1]};
  YSequence right{g[0], g[1], s};
  auto      there = search_path(S3, left, right, opts);
  REQUIRE(!there.exhausted());
  CHECK(replay(S3, left, there.certificate->moves) == right);
  CHECK(there.certificate->moves.size() == 2);
  // the pair is an identity, so dropping it keeps the boundary
  auto drop = search_path(S3, left, {s}, opts);
  REQUIRE(!drop.exhausted());
  CHECK(drop.certificate->moves.size() == 1);
  CHECK_THROWS_AS(search_path(S3, left, {g[0]}, opts), PreconditionError);
}

TEST_CASE("conjugate sequences") {
  YSequence d{sym(P, "r", "1")};
  CHECK(conjugate_sequence(FreeWord(P.alphabet()), d) == d);
  CHECK(conjugate_sequence(word(P.alphabet(), "a"), d) == YSequence{sym(P, "r", "a")});
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    auto     e = random_sequence(S3, rng, 0, 5);
    FreeWord v(S3.alphabet(), test::letters_of(test::random_raw(rng, 2, 4)));
    FreeWord w(S3.alphabet(), test::letters_of(test::random_raw(rng, 2, 4)));
    REQUIRE(conjugate_sequence(v, conjugate_sequence(w, e))
            == conjugate_sequence(v * w, e));
    REQUIRE(boundary(S3, conjugate_sequence(w, e)) == conjugate(w, boundary(S3, e)));
    auto id = scramble(S3, rng(), 3).sequence;
    REQUIRE(is_identity(S3, conjugate_sequence(w, id)));
  }
}

TEST_CASE("fiber pairs") {
  CHECK(fiber_pair(P, word(P.alphabet(), "a b"), {}).empty());
  YSequence d{sym(P, "r", "1"), sym(P, "r", "1", -1)};
  auto      plain = fiber_pair(P, FreeWord(P.alphabet()), d);
  CHECK(plain.size() == 4);
  CHECK(is_identity(P, plain));
  auto fp = fiber_pair(P, P.relator(0).word, d);
  REQUIRE(fp.size() == 4);
  CHECK(is_identity(P, fp));
  CHECK(fp[0] == sym(P, "r", "a b"));
  CHECK(fp[2] == sym(P, "r", "1"));
  CHECK(fp[3] == sym(P, "r", "1", -1));
  CHECK_THROWS_AS(fiber_pair(P, FreeWord(P.alphabet()), {sym(P, "r", "1")}),
                  PreconditionError);
}

TEST_CASE("theta tilde and insertion generators") {
  CHECK(theta_tilde(P, {}).empty());
  auto r = sym(P, "r", "1");
  CHECK(theta_tilde(P, {{r, -1}}) == invert(P.relator(0).word));
  CHECK(theta_tilde(P, {{sym(P, "r", "a"), 1}, {sym(P, "r", "a"), -1}}).empty());

  auto g = insertion_generator(r);
  CHECK(g == YSequence{r, r.inverse()});
  CHECK(boundary(P, g).empty());
  CHECK(apply_move(P, g, {MoveKind::Delete, 0, std::nullopt}).empty());
}

TEST_CASE("insert pools") {
  YSequence d{sym(S3, "r3", "a b"), sym(S3, "r3", "a b", -1)};
  CHECK(insert_pool(S3, d, PoolKind::None, 64).empty());
  auto present = insert_pool(S3, d, PoolKind::Present, 64);
  CHECK(!present.empty());
  // an Insert places a symbol next to its inverse, so both signs appear
  for (auto const& s : present) {
    CHECK(std::find(present.begin(), present.end(), s.inverse()) != present.end());
  }
  CHECK(insert_pool(S3, d, PoolKind::PresentExchange, 64).size() >= present.size());
  CHECK(insert_pool(S3, d, PoolKind::Present, 0).size() <= present.size());
}
