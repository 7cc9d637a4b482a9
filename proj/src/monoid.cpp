#include "asph/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "asph/coset.hpp"
#include "asph/error.hpp"

namespace asph {

  char const* to_string(Answer a) noexcept {
    switch (a) {
      case Answer::Yes:
        return "Yes";
      case Answer::No:
        return "No";
      case Answer::Unknown:
        return "Unknown";
    }
    return "Unknown";
  }

  std::vector<std::vector<std::size_t>> FiniteMonoid::table() const {
    std::vector<std::vector<std::size_t>> out(_size);
    for (std::size_t a = 0; a < _size; ++a) {
      out[a].assign(_table.begin() + a * _size,
                    _table.begin() + (a + 1) * _size);
    }
    return out;
  }

  FiniteMonoid validate_monoid(std::vector<std::vector<long>> const& table,
                               std::optional<std::size_t>            identity) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error("monoid table is empty");
    }
    FiniteMonoid S;
    S._size = n;
    S._table.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error("monoid table is not square");
      }
      for (long v : table[a]) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw Error("monoid table entry " + std::to_string(v)
                      + " out of range");
        }
        S._table.push_back(static_cast<std::size_t>(v));
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (S.product(S.product(a, b), c) != S.product(a, S.product(b, c))) {
            throw Error("monoid table is not associative at ("
                        + std::to_string(a) + "," + std::to_string(b) + ","
                        + std::to_string(c) + ")");
          }
        }
      }
    }
    auto is_identity = [&](std::size_t e) {
      for (std::size_t a = 0; a < n; ++a) {
        if (S.product(e, a) != a || S.product(a, e) != a) {
          return false;
        }
      }
      return true;
    };
    if (identity) {
      if (*identity >= n || !is_identity(*identity)) {
        throw Error("element " + std::to_string(*identity)
                    + " is not an identity");
      }
      S._identity = *identity;
      return S;
    }
    for (std::size_t e = 0; e < n; ++e) {
      if (is_identity(e)) {
        S._identity = e;
        return S;
      }
    }
    throw Error("monoid table has no identity");
  }

  Submonoid::Submonoid(FiniteMonoid parent, std::vector<std::size_t> elements)
      : _parent(std::move(parent)), _member(_parent.size(), false) {
    for (auto x : elements) {
      if (x >= _parent.size()) {
        throw Error("submonoid element " + std::to_string(x)
                    + " out of range");
      }
      _member[x] = true;
    }
    if (!_member[_parent.identity()]) {
      throw Error("submonoid does not contain the identity");
    }
    for (std::size_t x = 0; x < _member.size(); ++x) {
      if (_member[x]) {
        _elements.push_back(x);
      }
    }
    for (auto a : _elements) {
      for (auto b : _elements) {
        if (!_member[_parent.product(a, b)]) {
          throw Error("subset is not closed under multiplication");
        }
      }
    }
  }

  Submonoid whole(FiniteMonoid const& S) {
    std::vector<std::size_t> all(S.size());
    std::iota(all.begin(), all.end(), 0);
    return Submonoid(S, std::move(all));
  }

  Submonoid trivial_submonoid(FiniteMonoid const& S) {
    return Submonoid(S, {S.identity()});
  }

  Submonoid generated_submonoid(FiniteMonoid const&             S,
                                std::vector<std::size_t> const& generators) {
    std::vector<bool>        in(S.size(), false);
    std::vector<std::size_t> elts{S.identity()};
    in[S.identity()] = true;
    for (std::size_t k = 0; k < elts.size(); ++k) {
      for (auto g : generators) {
        if (g >= S.size()) {
          throw Error("generator " + std::to_string(g) + " out of range");
        }
        std::size_t y = S.product(elts[k], g);
        if (!in[y]) {
          in[y] = true;
          elts.push_back(y);
        }
      }
    }
    return Submonoid(S, std::move(elts));
  }

  std::vector<Submonoid> all_submonoids(FiniteMonoid const& S) {
    std::size_t const n = S.size();
    if (n > 16) {
      throw PreconditionError("all_submonoids is limited to 16 elements");
    }
    std::vector<Submonoid> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      if (!(mask >> S.identity() & 1)) {
        continue;
      }
      bool closed = true;
      for (std::size_t a = 0; a < n && closed; ++a) {
        if (!(mask >> a & 1)) {
          continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if ((mask >> b & 1) && !(mask >> S.product(a, b) & 1)) {
            closed = false;
            break;
          }
        }
      }
      if (closed) {
        std::vector<std::size_t> elts;
        for (std::size_t a = 0; a < n; ++a) {
          if (mask >> a & 1) {
            elts.push_back(a);
          }
        }
        out.emplace_back(S, std::move(elts));
      }
    }
    return out;
  }

  RightAction right_regular(FiniteMonoid const& S, Submonoid const& U) {
    RightAction A{S.size(), {}};
    A.act.reserve(S.size() * U.size());
    for (std::size_t a = 0; a < S.size(); ++a) {
      for (auto u : U.elements()) {
        A.act.push_back(S.product(a, u));
      }
    }
    return A;
  }

  LeftAction left_regular(FiniteMonoid const& S, Submonoid const& U) {
    LeftAction B{S.size(), {}};
    B.act.reserve(S.size() * U.size());
    for (std::size_t b = 0; b < S.size(); ++b) {
      for (auto u : U.elements()) {
        B.act.push_back(S.product(u, b));
      }
    }
    return B;
  }

  namespace {

    std::vector<std::size_t> positions(Submonoid const& U) {
      std::vector<std::size_t> pos(U.parent().size(), U.size());
      for (std::size_t i = 0; i < U.size(); ++i) {
        pos[U.elements()[i]] = i;
      }
      return pos;
    }

    void check_table_shape(std::vector<std::size_t> const& act,
                           std::size_t                     carrier,
                           std::size_t                     width) {
      if (act.size() != carrier * width) {
        throw Error("action table has the wrong size");
      }
      for (auto x : act) {
        if (x >= carrier) {
          throw Error("action table entry out of range");
        }
      }
    }

  }  // namespace

  void validate_action(RightAction const& A, Submonoid const& U) {
    std::size_t const m = U.size();
    check_table_shape(A.act, A.carrier, m);
    auto const&  S   = U.parent();
    auto const   pos = positions(U);
    std::size_t  one = pos[S.identity()];
    for (std::size_t a = 0; a < A.carrier; ++a) {
      if (A.act[a * m + one] != a) {
        throw Error("identity does not act trivially");
      }
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          std::size_t uv = pos[S.product(U.elements()[i], U.elements()[j])];
          if (A.act[A.act[a * m + i] * m + j] != A.act[a * m + uv]) {
            throw Error("right action is not compatible with U");
          }
        }
      }
    }
  }

  void validate_action(LeftAction const& B, Submonoid const& U) {
    std::size_t const m = U.size();
    check_table_shape(B.act, B.carrier, m);
    auto const&  S   = U.parent();
    auto const   pos = positions(U);
    std::size_t  one = pos[S.identity()];
    for (std::size_t b = 0; b < B.carrier; ++b) {
      if (B.act[b * m + one] != b) {
        throw Error("identity does not act trivially");
      }
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          std::size_t uv = pos[S.product(U.elements()[i], U.elements()[j])];
          // u (v b) = (u v) b
          if (B.act[B.act[b * m + j] * m + i] != B.act[b * m + uv]) {
            throw Error("left action is not compatible with U");
          }
        }
      }
    }
  }

  BiSystem::BiSystem(std::size_t              carrier,
                     FiniteMonoid             T,
                     std::vector<std::size_t> left_table,
                     FiniteMonoid             S,
                     std::vector<std::size_t> right_table)
      : _carrier(carrier),
        _T(std::move(T)),
        _left(std::move(left_table)),
        _S(std::move(S)),
        _right(std::move(right_table)) {
    if (_left.size() != _T.size() * _carrier
        || _right.size() != _carrier * _S.size()) {
      throw Error("bisystem action table has the wrong size");
    }
    for (auto x : _left) {
      if (x >= _carrier) {
        throw Error("bisystem action table entry out of range");
      }
    }
    for (auto x : _right) {
      if (x >= _carrier) {
        throw Error("bisystem action table entry out of range");
      }
    }
    for (std::size_t x = 0; x < _carrier; ++x) {
      if (left(_T.identity(), x) != x || right(x, _S.identity()) != x) {
        throw Error("identity does not act trivially on the bisystem");
      }
      for (std::size_t s = 0; s < _T.size(); ++s) {
        for (std::size_t t = 0; t < _T.size(); ++t) {
          if (left(_T.product(s, t), x) != left(s, left(t, x))) {
            throw Error("left action law fails");
          }
        }
      }
      for (std::size_t s = 0; s < _S.size(); ++s) {
        for (std::size_t t = 0; t < _S.size(); ++t) {
          if (right(x, _S.product(s, t)) != right(right(x, s), t)) {
            throw Error("right action law fails");
          }
        }
      }
      for (std::size_t s = 0; s < _T.size(); ++s) {
        for (std::size_t t = 0; t < _S.size(); ++t) {
          if (right(left(s, x), t) != left(s, right(x, t))) {
            throw Error("left and right actions do not commute");
          }
        }
      }
    }
  }

  BiSystem regular_bisystem(FiniteMonoid const& S) {
    std::vector<std::size_t> left, right;
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t x = 0; x < S.size(); ++x) {
        left.push_back(S.product(s, x));
      }
    }
    for (std::size_t x = 0; x < S.size(); ++x) {
      for (std::size_t s = 0; s < S.size(); ++s) {
        right.push_back(S.product(x, s));
      }
    }
    return BiSystem(S.size(), S, std::move(left), S, std::move(right));
  }

  TensorPartition::TensorPartition(std::size_t              a_size,
                                   std::size_t              b_size,
                                   std::vector<std::size_t> labels)
      : _a_size(a_size), _b_size(b_size), _labels(std::move(labels)) {
    if (_labels.size() != _a_size * _b_size) {
      throw Error("tensor partition has the wrong size");
    }
    _class_count = 0;
    for (std::size_t p = 0; p < _labels.size(); ++p) {
      if (_labels[p] == p) {
        ++_class_count;
      }
    }
  }

  std::size_t TensorPartition::class_of(std::size_t a, std::size_t b) const {
    if (a >= _a_size || b >= _b_size) {
      throw std::out_of_range("pair outside the tensor carrier");
    }
    return _labels[a * _b_size + b];
  }

  TensorPartition tensor_product(RightAction const&              A,
                                 LeftAction const&               B,
                                 Submonoid const&                U,
                                 std::vector<std::size_t> const& scan_order) {
    validate_action(A, U);
    validate_action(B, U);
    std::size_t const m = U.size();
    std::vector<std::size_t> order = scan_order;
    if (order.empty()) {
      order.resize(m);
      std::iota(order.begin(), order.end(), 0);
    } else {
      auto sorted = order;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i || sorted.size() != m) {
          throw Error("scan order is not a permutation of U");
        }
      }
    }

    std::size_t const        nb = B.carrier;
    std::vector<std::size_t> parent(A.carrier * nb);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t p) {
      std::size_t root = p;
      while (parent[root] != root) {
        root = parent[root];
      }
      while (parent[p] != root) {
        std::size_t next = parent[p];
        parent[p]        = root;
        p                = next;
      }
      return root;
    };
    for (auto i : order) {
      for (std::size_t a = 0; a < A.carrier; ++a) {
        for (std::size_t b = 0; b < nb; ++b) {
          std::size_t p = find(A.act[a * m + i] * nb + b);
          std::size_t q = find(a * nb + B.act[b * m + i]);
          if (p != q) {
            // the smaller index stays the root, so roots are least elements
            parent[std::max(p, q)] = std::min(p, q);
          }
        }
      }
    }
    std::vector<std::size_t> labels(parent.size());
    for (std::size_t p = 0; p < parent.size(); ++p) {
      labels[p] = find(p);
    }
    return TensorPartition(A.carrier, nb, std::move(labels));
  }

  bool same_class(TensorPartition const&              t,
                  std::pair<std::size_t, std::size_t> p,
                  std::pair<std::size_t, std::size_t> q) {
    return t.class_of(p.first, p.second) == t.class_of(q.first, q.second);
  }

  bool dominion_membership(FiniteMonoid const& S,
                           Submonoid const&    U,
                           std::size_t         d) {
    if (d >= S.size()) {
      throw Error("element " + std::to_string(d) + " out of range");
    }
    auto t = tensor_product(right_regular(S, U), left_regular(S, U), U);
    return same_class(t, {d, S.identity()}, {S.identity(), d});
  }

  std::vector<std::size_t> dominion(FiniteMonoid const& S, Submonoid const& U) {
    auto t = tensor_product(right_regular(S, U), left_regular(S, U), U);
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < S.size(); ++d) {
      if (same_class(t, {d, S.identity()}, {S.identity(), d})) {
        out.push_back(d);
      }
    }
    return out;
  }

  bool is_inverse_monoid(Submonoid const& U) {
    auto const& S = U.parent();
    for (auto u : U.elements()) {
      std::size_t count = 0;
      for (auto x : U.elements()) {
        if (S.product(S.product(u, x), u) == u
            && S.product(S.product(x, u), x) == x) {
          ++count;
        }
      }
      if (count != 1) {
        return false;
      }
    }
    return true;
  }

  bool is_inverse_monoid(FiniteMonoid const& S) {
    return is_inverse_monoid(whole(S));
  }

  GroupPresentation universal_group(FiniteMonoid const& S) {
    std::vector<std::string> ids;
    for (std::size_t x = 0; x < S.size(); ++x) {
      ids.push_back("s" + std::to_string(x));
    }
    Alphabet             alphabet(std::move(ids));
    std::vector<Relator> relators;
    for (std::size_t x = 0; x < S.size(); ++x) {
      for (std::size_t y = 0; y < S.size(); ++y) {
        std::uint32_t z = static_cast<std::uint32_t>(S.product(x, y));
        FreeWord      w(alphabet,
                   {SignedLetter{static_cast<std::uint32_t>(x), 1},
                    SignedLetter{static_cast<std::uint32_t>(y), 1},
                    SignedLetter{z, -1}});
        relators.push_back(
            {"t" + std::to_string(x) + "_" + std::to_string(y), std::move(w)});
      }
    }
    return GroupPresentation("universal", std::move(alphabet), std::move(relators));
  }

  Answer wdom_membership_partial(FiniteMonoid const& S,
                                 Submonoid const&    U,
                                 std::size_t         d,
                                 std::size_t         budget) {
    if (d >= S.size()) {
      throw Error("element " + std::to_string(d) + " out of range");
    }
    auto                  gp = universal_group(S);
    std::vector<FreeWord> subgroup;
    for (auto u : U.elements()) {
      subgroup.push_back(
          FreeWord::generator(gp.alphabet(), static_cast<std::uint32_t>(u), 1));
    }
    auto result = coset_enumeration(gp, subgroup, budget);
    if (result.exhausted()) {
      return Answer::Unknown;
    }
    auto sd = FreeWord::generator(gp.alphabet(), static_cast<std::uint32_t>(d), 1);
    return result.table->in_subgroup(sd) ? Answer::Yes : Answer::No;
  }

}  // namespace asph
