#ifndef ASPH_MONOID_HPP_
#define ASPH_MONOID_HPP_

// Finite monoids given by multiplication tables, their actions, tensor
// products over a submonoid, and dominions.

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "asph/answer.hpp"
#include "asph/presentation.hpp"

namespace asph {

  class FiniteMonoid {
   public:
    FiniteMonoid() = default;

    std::size_t size() const noexcept {
      return _size;
    }
    std::size_t identity() const noexcept {
      return _identity;
    }
    std::size_t product(std::size_t a, std::size_t b) const {
      return _table[a * _size + b];
    }
    std::vector<std::vector<std::size_t>> table() const;

   private:
    friend FiniteMonoid
    validate_monoid(std::vector<std::vector<long>> const&, std::optional<std::size_t>);

    std::size_t              _size     = 0;
    std::size_t              _identity = 0;
    std::vector<std::size_t> _table;
  };

  // Checks squareness, range, all n^3 associativity triples and the identity
  // law.  When no identity is given the least two-sided identity is used.
  FiniteMonoid validate_monoid(std::vector<std::vector<long>> const& table,
                               std::optional<std::size_t> identity = std::nullopt);

  class Submonoid {
   public:
    // Throws Error unless elements contain the identity and are closed.
    Submonoid(FiniteMonoid parent, std::vector<std::size_t> elements);

    FiniteMonoid const& parent() const noexcept {
      return _parent;
    }
    std::vector<std::size_t> const& elements() const noexcept {
      return _elements;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    bool contains(std::size_t x) const noexcept {
      return x < _member.size() && _member[x];
    }

   private:
    FiniteMonoid             _parent;
    std::vector<std::size_t> _elements;
    std::vector<bool>        _member;
  };

  Submonoid whole(FiniteMonoid const& S);
  Submonoid trivial_submonoid(FiniteMonoid const& S);
  Submonoid generated_submonoid(FiniteMonoid const&             S,
                                std::vector<std::size_t> const& generators);
  // Every submonoid (subset containing 1 and closed), in increasing order of
  // the subset bitmask.  Intended for n <= 16.
  std::vector<Submonoid> all_submonoids(FiniteMonoid const& S);

  // A right action of the elements of U on {0..carrier-1}:
  // act[a * |U| + i] = a * U.elements()[i].
  struct RightAction {
    std::size_t              carrier = 0;
    std::vector<std::size_t> act;
  };

  // A left action: act[b * |U| + i] = U.elements()[i] * b.
  struct LeftAction {
    std::size_t              carrier = 0;
    std::vector<std::size_t> act;
  };

  // S as a right U-system, and S as a left U-system, by multiplication.
  RightAction right_regular(FiniteMonoid const& S, Submonoid const& U);
  LeftAction  left_regular(FiniteMonoid const& S, Submonoid const& U);

  // Throws Error if the action laws fail.
  void validate_action(RightAction const& A, Submonoid const& U);
  void validate_action(LeftAction const& B, Submonoid const& U);

  // A set with a left T-action and a right S-action that commute.
  class BiSystem {
   public:
    // left[t * carrier + x] = t x;  right[x * |S| + s] = x s
    BiSystem(std::size_t              carrier,
             FiniteMonoid             T,
             std::vector<std::size_t> left,
             FiniteMonoid             S,
             std::vector<std::size_t> right);

    std::size_t carrier() const noexcept {
      return _carrier;
    }
    std::size_t left(std::size_t t, std::size_t x) const {
      return _left[t * _carrier + x];
    }
    std::size_t right(std::size_t x, std::size_t s) const {
      return _right[x * _S.size() + s];
    }

   private:
    std::size_t              _carrier;
    FiniteMonoid             _T;
    std::vector<std::size_t> _left;
    FiniteMonoid             _S;
    std::vector<std::size_t> _right;
  };

  BiSystem regular_bisystem(FiniteMonoid const& S);

  // A ⊗_U B as a partition of A × B.  Pairs are indexed a * |B| + b; each
  // class is labelled by its least pair index.
  class TensorPartition {
   public:
    TensorPartition(std::size_t a_size,
                    std::size_t b_size,
                    std::vector<std::size_t> labels);

    std::size_t a_size() const noexcept {
      return _a_size;
    }
    std::size_t b_size() const noexcept {
      return _b_size;
    }
    std::vector<std::size_t> const& labels() const noexcept {
      return _labels;
    }
    // Throws std::out_of_range outside A × B.
    std::size_t class_of(std::size_t a, std::size_t b) const;
    std::size_t class_count() const noexcept {
      return _class_count;
    }

    bool operator==(TensorPartition const&) const = default;

   private:
    std::size_t              _a_size;
    std::size_t              _b_size;
    std::vector<std::size_t> _labels;
    std::size_t              _class_count;
  };

  // Union-find closure of (a u, b) ~ (a, u b) over all a, b, u.  The
  // generating pairs are scanned in the given order of U's elements (the
  // default is increasing); the result does not depend on it.
  TensorPartition tensor_product(RightAction const& A,
                                 LeftAction const&  B,
                                 Submonoid const&   U,
                                 std::vector<std::size_t> const& scan_order = {});

  bool same_class(TensorPartition const&              t,
                  std::pair<std::size_t, std::size_t> p,
                  std::pair<std::size_t, std::size_t> q);

  // d ⊗_U 1 = 1 ⊗_U d in S ⊗_U S
  bool dominion_membership(FiniteMonoid const& S,
                           Submonoid const&    U,
                           std::size_t         d);
  std::vector<std::size_t> dominion(FiniteMonoid const& S, Submonoid const& U);

  // Every element has exactly one x with u x u = u and x u x = x.
  bool is_inverse_monoid(Submonoid const& U);
  bool is_inverse_monoid(FiniteMonoid const& S);

  // Generators s0..s{n-1}, one relator s_x s_y s_{xy}^-1 per table entry.
  GroupPresentation universal_group(FiniteMonoid const& S);

  // Whether mu(d) lies in the subgroup of G(S) generated by mu(U), decided by
  // coset enumeration within the budget.
  Answer wdom_membership_partial(FiniteMonoid const& S,
                                 Submonoid const&    U,
                                 std::size_t         d,
                                 std::size_t         budget);

}  // namespace asph

#endif  // ASPH_MONOID_HPP_
