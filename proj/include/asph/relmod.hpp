#ifndef ASPH_RELMOD_HPP_
#define ASPH_RELMOD_HPP_

// The relation module N/[N,N] as a free ZG-module on the relators, with
// coset keys decided by pluggable word-problem oracles for G = F/N.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asph/answer.hpp"
#include "asph/coset.hpp"
#include "asph/error.hpp"
#include "asph/peiffer.hpp"
#include "asph/presentation.hpp"

namespace asph {

  enum class Equality { Equal, NotEqual, Unknown };

  class GroupOracle {
   public:
    virtual ~GroupOracle() = default;

    virtual std::string             name() const                  = 0;
    virtual Alphabet const&         alphabet() const noexcept     = 0;
    virtual Equality                equal(FreeWord const& u,
                                          FreeWord const& v) const = 0;
    // A preferred representative of the image of u in G, when the oracle has
    // one.
    virtual std::optional<FreeWord> canon(FreeWord const& u) const = 0;
  };

  // G = F; never Unknown.
  class FreeOracle : public GroupOracle {
   public:
    explicit FreeOracle(Alphabet alphabet) : _alphabet(std::move(alphabet)) {}

    std::string name() const override {
      return "free";
    }
    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    Equality equal(FreeWord const& u, FreeWord const& v) const override;
    std::optional<FreeWord> canon(FreeWord const& u) const override {
      check_same_alphabet(u.alphabet(), _alphabet);
      return u;
    }

   private:
    Alphabet _alphabet;
  };

  // Finite G, through the coset table of the trivial subgroup; the canonical
  // form is the shortlex-least representative of the element.
  class CosetOracle : public GroupOracle {
   public:
    // Throws PreconditionError when enumeration exhausts the budget.
    CosetOracle(GroupPresentation const& gp, std::size_t budget);

    std::string name() const override {
      return "cosets";
    }
    Alphabet const& alphabet() const noexcept override {
      return _table->alphabet();
    }
    Equality equal(FreeWord const& u, FreeWord const& v) const override;
    std::optional<FreeWord> canon(FreeWord const& u) const override;

    std::size_t order() const {
      return _table->size();
    }

   private:
    std::optional<CosetTable> _table;
  };

  // NotEqual when u and v differ in the abelianization of G, Equal when they
  // are equal in F, Unknown otherwise.  No canonical form.
  class AbelianOracle : public GroupOracle {
   public:
    explicit AbelianOracle(GroupPresentation const& gp);

    std::string name() const override {
      return "abelian";
    }
    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    Equality equal(FreeWord const& u, FreeWord const& v) const override;
    std::optional<FreeWord> canon(FreeWord const&) const override {
      return std::nullopt;
    }

    // Whether an integer vector lies in the lattice of abelianized relators.
    bool in_relator_lattice(std::vector<long> v) const;

   private:
    Alphabet                       _alphabet;
    std::vector<std::vector<long>> _echelon;  // rows with increasing pivots
    std::vector<std::size_t>       _pivots;
  };

  std::unique_ptr<GroupOracle> make_oracle(std::string_view         kind,
                                           GroupPresentation const& gp,
                                           std::size_t              budget);

  struct RelModKey {
    FreeWord    rep;
    std::size_t rel = 0;

    bool operator==(RelModKey const&) const = default;
    bool operator<(RelModKey const& that) const {
      if (rel != that.rel) {
        return rel < that.rel;
      }
      return rep < that.rep;
    }
  };

  // Finite sums of basis elements rep . rel with nonzero coefficients.
  class RelModElement {
   public:
    RelModElement() = default;

    std::map<RelModKey, long> const& terms() const noexcept {
      return _terms;
    }
    bool empty() const noexcept {
      return _terms.empty();
    }
    long coefficient(RelModKey const& k) const;

    // Adds c to the coefficient of k exactly as given; no oracle merging.
    void add(RelModKey const& k, long c);

    RelModElement& operator+=(RelModElement const& that);
    RelModElement& operator-=(RelModElement const& that);
    friend RelModElement operator+(RelModElement a, RelModElement const& b) {
      return a += b;
    }
    friend RelModElement operator-(RelModElement a, RelModElement const& b) {
      return a -= b;
    }
    RelModElement operator*(long c) const;

    bool operator==(RelModElement const&) const = default;

   private:
    std::map<RelModKey, long> _terms;
  };

  RelModElement basis_element(FreeWord rep, std::size_t rel);

  class PartialResultError : public Error {
   public:
    PartialResultError(std::string const& msg, std::vector<std::string> keys)
        : Error(msg), _keys(std::move(keys)) {}

    std::vector<std::string> const& undecided() const noexcept {
      return _keys;
    }

   private:
    std::vector<std::string> _keys;
  };

  // Each symbol (^u r)^e contributes +1 . (canon(u), r); with signed_gamma
  // the coefficient is e instead.  Throws PartialResultError when keys could
  // not be merged because the oracle answered Unknown.
  RelModElement gamma_image(GroupPresentation const& gp,
                            YSequence const&         d,
                            GroupOracle const&       oracle,
                            bool                     signed_gamma = false);

  // Each key (v, r) becomes (canon(w^-1 v), r).  This is a right action:
  // acting by w and then by v is acting by w v.
  RelModElement module_action(FreeWord const&      w,
                              RelModElement const& e,
                              GroupOracle const&   oracle);

  // Yes when every class of keys identified by the oracle has zero total
  // coefficient, No when some class with nonzero total is known to differ
  // from all others, Unknown otherwise.
  Answer is_zero(RelModElement const& e, GroupOracle const& oracle);

  std::string to_string(GroupPresentation const& gp, RelModElement const& e);

}  // namespace asph

#endif  // ASPH_RELMOD_HPP_
