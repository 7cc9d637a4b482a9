#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "asph/coset.hpp"
#include "asph/error.hpp"
#include "asph/io.hpp"
#include "asph/monoid.hpp"
#include "asph/oracle.hpp"

using namespace asph;

namespace {

  using Table = std::vector<std::vector<long>>;

  Table cyclic(std::size_t n) {
    Table t(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = static_cast<long>((i + j) % n);
      }
    }
    return t;
  }

  // 1, a, 0 with a a = 0 and 0 absorbing
  Table const nil3{{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  // 1, e, f with e f = f e = f
  Table const semilattice3{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};

  FiniteMonoid fixture(char const* name) {
    return read_monoid_file(std::string(ASPH_FIXTURES_DIR) + "/monoids/" + name
                            + ".json");
  }

  std::vector<std::size_t> all_elements(FiniteMonoid const& S) {
    std::vector<std::size_t> v(S.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  // Exhaustive generalized-inverse count, straight from the table.
  bool every_element_has_one_inverse(Table const& t) {
    for (std::size_t u = 0; u < t.size(); ++u) {
      int count = 0;
      for (std::size_t x = 0; x < t.size(); ++x) {
        long uxu = t[t[u][x]][u];
        long xux = t[t[x][u]][x];
        count += uxu == static_cast<long>(u) && xux == static_cast<long>(x);
      }
      if (count != 1) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("validate monoid tables") {
  CHECK(validate_monoid({{0}}).size() == 1);
  CHECK(validate_monoid(cyclic(2)).identity() == 0);
  // the 8 triples of the two-element semilattice, by hand
  Table semi{{0, 1}, {1, 1}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        REQUIRE(semi[semi[a][b]][c] == semi[a][semi[b][c]]);
      }
    }
  }
  CHECK(validate_monoid(semi, 0).size() == 2);

  CHECK_THROWS_AS(validate_monoid({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(validate_monoid({{0, 2}, {1, 0}}), Error);
  // left zero semigroup on two points has no identity
  CHECK_THROWS_AS(validate_monoid({{0, 0}, {1, 1}}), Error);
  // (1 1) 2 = 2 but 1 (1 2) = 1
  CHECK_THROWS_AS(validate_monoid({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}), Error);
  CHECK_THROWS_AS(validate_monoid(semi, 1), Error);
}

TEST_CASE("tensor products") {
  auto S = validate_monoid(cyclic(4));
  auto U = trivial_submonoid(S);
  auto t = tensor_product(right_regular(S, U), left_regular(S, U), U);
  CHECK(t.class_count() == 16);
  CHECK(!same_class(t, {1, 2}, {2, 1}));

  auto W  = whole(S);
  auto tg = tensor_product(right_regular(S, W), left_regular(S, W), W);
  CHECK(tg.class_count() == 4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      CHECK(same_class(tg, {a, b}, {0, S.product(a, b)}));
      CHECK(same_class(tg, {a, b}, {a, b}));
    }
  }
  CHECK_THROWS(tg.class_of(4, 0));

  auto L  = validate_monoid(semilattice3, 0);
  Submonoid Ue(L, {0, 1});
  auto A  = right_regular(L, Ue);
  auto B  = left_regular(L, Ue);
  auto uf = tensor_product(A, B, Ue);
  auto nv = oracle::naive_tensor_closure(A, B, Ue);
  CHECK(uf == nv);
  CHECK(uf.class_count() == nv.class_count());
  CHECK(uf == tensor_product(A, B, Ue, {1, 0}));
}

TEST_CASE("tensor partition does not depend on scan order") {
  auto S = fixture("b2_one");
  for (auto const& U : all_submonoids(S)) {
    std::vector<std::size_t> order(U.size());
    std::iota(order.begin(), order.end(), 0);
    auto A   = right_regular(S, U);
    auto B   = left_regular(S, U);
    auto ref = tensor_product(A, B, U);
    do {
      REQUIRE(tensor_product(A, B, U, order) == ref);
    } while (std::next_permutation(order.begin(), order.end()));
    REQUIRE(ref == oracle::naive_tensor_closure(A, B, U));
  }
}

TEST_CASE("dominions") {
  auto S = validate_monoid(cyclic(3));
  CHECK(dominion_membership(S, trivial_submonoid(S), 0));
  for (std::size_t d = 0; d < 3; ++d) {
    CHECK(dominion_membership(S, whole(S), d));
  }
  CHECK(!dominion_membership(S, trivial_submonoid(S), 1));
  CHECK(dominion(S, whole(S)) == all_elements(S));
  CHECK(dominion(S, trivial_submonoid(S)) == std::vector<std::size_t>{0});

  // six elements; the naive closure decides membership independently
  auto B2 = fixture("b2_one");
  REQUIRE(B2.size() == 6);
  for (auto const& U : all_submonoids(B2)) {
    auto                     naive = oracle::naive_tensor_closure(
        right_regular(B2, U), left_regular(B2, U), U);
    std::vector<std::size_t> expected;
    for (std::size_t d = 0; d < B2.size(); ++d) {
      if (naive.class_of(d, B2.identity()) == naive.class_of(B2.identity(), d)) {
        expected.push_back(d);
      }
    }
    REQUIRE(dominion(B2, U) == expected);
  }
}

TEST_CASE("inverse monoids") {
  CHECK(is_inverse_monoid(validate_monoid(cyclic(5))));
  CHECK(is_inverse_monoid(fixture("s3")));
  CHECK(is_inverse_monoid(validate_monoid({{0, 1}, {1, 1}})));
  CHECK(!every_element_has_one_inverse(nil3));
  CHECK(!is_inverse_monoid(validate_monoid(nil3)));
  CHECK(every_element_has_one_inverse(semilattice3));
  CHECK(is_inverse_monoid(validate_monoid(semilattice3)));
}

TEST_CASE("submonoids") {
  auto S = validate_monoid(nil3);
  CHECK_THROWS_AS(Submonoid(S, {1}), Error);
  CHECK_THROWS_AS(Submonoid(S, {0, 1}), Error);
  CHECK(generated_submonoid(S, {1}).elements() == std::vector<std::size_t>{0, 1, 2});
  // {1}, {1,0}, {1,a,0}
  CHECK(all_submonoids(S).size() == 3);
}

TEST_CASE("universal group relators") {
  auto S  = validate_monoid(cyclic(2));
  auto gp = universal_group(S);
  CHECK(gp.alphabet().ids() == std::vector<std::string>{"s0", "s1"});
  REQUIRE(gp.find_relator("t1_1"));
  CHECK(gp.relator(*gp.find_relator("t1_1")).word
        == parse_word(gp.alphabet(), "s1 s1 s0^-1"));
  CHECK(coset_enumeration(gp, {}, 100).index() == 2);
}

TEST_CASE("universal group of the absorbing three-element monoid is trivial") {
  auto S  = validate_monoid(nil3);
  auto gp = universal_group(S);
  // a 0 = 0 gives the relator s1 s2 s2^-1, which reduces to s1 alone; 0 0 = 0
  // gives s2 alone.  Both generators besides s0 die, and 1 1 = 1 kills s0.
  auto rel = [&](char const* name) { return gp.relator(*gp.find_relator(name)).word; };
  CHECK(rel("t1_2") == parse_word(gp.alphabet(), "s1"));
  CHECK(rel("t2_2") == parse_word(gp.alphabet(), "s2"));
  CHECK(rel("t0_0") == parse_word(gp.alphabet(), "s0"));
  auto res = coset_enumeration(gp, {}, 100);
  REQUIRE(!res.exhausted());
  CHECK(res.index() == 1);
  CHECK(wdom_membership_partial(S, trivial_submonoid(S), 1, 100) == Answer::Yes);
}

TEST_CASE("universal group of 1, a, a^2 with a^3 = a has order two") {
  auto S = validate_monoid({{0, 1, 2}, {1, 2, 1}, {2, 1, 2}});
  // s2 = s1 s1 and s1 s2 = s1 give s1 s1 = 1, leaving a group of order at
  // most 2; the map s1 -> -1, s2 -> +1 into {+1, -1} respects every entry
  std::vector<int> sign{1, -1, 1};
  auto             tbl = S.table();
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      REQUIRE(sign[x] * sign[y] == sign[tbl[x][y]]);
    }
  }
  auto res = coset_enumeration(universal_group(S), {}, 100);
  REQUIRE(!res.exhausted());
  CHECK(res.index() == 2);
  CHECK(wdom_membership_partial(S, trivial_submonoid(S), 1, 100) == Answer::No);
  CHECK(wdom_membership_partial(S, trivial_submonoid(S), 2, 100) == Answer::Yes);
}

TEST_CASE("weak dominion probe") {
  auto S = validate_monoid(cyclic(4));
  Submonoid U(S, {0, 2});
  CHECK(wdom_membership_partial(S, U, 2, 100) == Answer::Yes);
  CHECK(wdom_membership_partial(S, U, 1, 100) == Answer::No);
  CHECK(wdom_membership_partial(S, U, 1, 1) == Answer::Unknown);
}

TEST_CASE("bisystems and actions") {
  auto S = validate_monoid(semilattice3, 0);
  auto B = regular_bisystem(S);
  for (std::size_t t = 0; t < 3; ++t) {
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t s = 0; s < 3; ++s) {
        REQUIRE(B.right(B.left(t, x), s) == B.left(t, B.right(x, s)));
      }
    }
  }
  auto W = whole(S);
  auto A = right_regular(S, W);
  CHECK_NOTHROW(validate_action(A, W));
  A.act[0] = 1;  // 1 acting by the identity must fix it
  CHECK_THROWS_AS(validate_action(A, W), Error);
}
