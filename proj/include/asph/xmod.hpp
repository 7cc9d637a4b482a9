#ifndef ASPH_XMOD_HPP_
#define ASPH_XMOD_HPP_

// Crossed modules built from a presentation with a generator z that occurs
// exactly once, in a relator w.  F = F(x, z) splits as N0 ⋊ F1 where N0 is
// the normal closure of w and F1 = F(x).  The crossed module of the relator
// w over N0 is represented by N0 itself (its boundary is injective), so
// every element below is a free-group word and every identity is checked by
// free reduction.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "asph/peiffer.hpp"
#include "asph/presentation.hpp"
#include "asph/word.hpp"

namespace asph {

  // The big presentation (x ∪ z, r ∪ {w}), the retraction eliminating z, and
  // the small presentation (x, r).
  class ReducibleFixture {
   public:
    ReducibleFixture(GroupPresentation big, std::string_view z);

    GroupPresentation const& big() const noexcept {
      return _big;
    }
    GroupPresentation const& small() const noexcept {
      return _small;
    }
    Retraction const& rho() const noexcept {
      return _rho;
    }
    std::size_t source_relator() const noexcept {
      return _source;
    }
    // Index in the small presentation of a big relator other than w.
    std::size_t small_relator(std::size_t big_rel) const;
    std::size_t big_relator(std::size_t small_rel) const;

   private:
    GroupPresentation                       _big;
    Retraction                              _rho;
    GroupPresentation                       _small;
    std::size_t                             _source;
    std::vector<std::optional<std::size_t>> _to_small;
    std::vector<std::size_t>                _to_big;
  };

  // Reads a presentation file that carries an `eliminate` directive.
  ReducibleFixture read_fixture(std::string const& path);
  ReducibleFixture make_fixture(PresentationFile const& file);

  class ComputableGroup {
   public:
    enum class Kind { Free, Kernel };

    static ComputableGroup free(Alphabet alphabet);
    static ComputableGroup kernel(Retraction rho);

    Kind kind() const noexcept {
      return _kind;
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    bool member(FreeWord const& w) const;
    bool equal(FreeWord const& u, FreeWord const& v) const {
      return u == v;
    }

   private:
    Kind                      _kind = Kind::Free;
    Alphabet                  _alphabet;
    std::optional<Retraction> _rho;
  };

  struct CrossedModule {
    ComputableGroup                                       T;
    ComputableGroup                                       G;
    std::function<FreeWord(FreeWord const&)>              boundary;
    std::function<FreeWord(FreeWord const&, FreeWord const&)> action;  // (g, t)
  };

  // (N0, F, inclusion) with F acting by conjugation.
  CrossedModule conjugation_xmod(Retraction const& rho);

  // Counts of failed samples, with the first failure described.
  struct CheckReport {
    std::size_t samples  = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const noexcept {
      return failures == 0;
    }
    void record(bool pass, std::string const& what);
  };

  // CM1: d(^g t) = g d(t) g^-1;  CM2: ^{d(t)} t' = t t' t^-1.
  CheckReport check_cm1(CrossedModule const&         X,
                        std::vector<FreeWord> const& gs,
                        std::vector<FreeWord> const& ts);
  CheckReport check_cm2(CrossedModule const&         X,
                        std::vector<FreeWord> const& ts);

  // A derivation N0 -> N0 for the conjugation action, given by evaluation.
  // N0 is not finitely generated, so there is no table of generator values.
  class Derivation {
   public:
    using Map = std::function<FreeWord(FreeWord const&)>;

    Derivation(Alphabet alphabet, Map map, std::string label)
        : _alphabet(std::move(alphabet)),
          _map(std::move(map)),
          _label(std::move(label)) {}

    FreeWord operator()(FreeWord const& n) const {
      return _map(n);
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::string const& label() const noexcept {
      return _label;
    }

   private:
    Alphabet    _alphabet;
    Map         _map;
    std::string _label;
  };

  Derivation trivial_derivation(Alphabet const& big);

  // n0 -> g n0 g^-1 n0^-1 with g = u r^e u^-1 (u and r over the small
  // alphabet).  Throws PreconditionError for arguments outside N0 and
  // InvariantError if a value leaves N0.
  Derivation eta(ReducibleFixture const& fx,
                 FreeWord const&         u,
                 std::size_t             small_rel,
                 int                     sign);
  // The same map for the boundary g of a Y1-sequence.
  Derivation eta_sequence(ReducibleFixture const& fx, YSequence const& m);

  // d(x) = d1(sigma2(x)) d2(x)
  Derivation compose_derivations(Derivation const& d1, Derivation const& d2);
  // d(x) = tau1(d2(x)) d1(x), the second expression for the same product.
  Derivation compose_derivations_alt(Derivation const& d1, Derivation const& d2);

  bool derivation_law_holds(Derivation const& d,
                            FreeWord const&   x,
                            FreeWord const&   y);

  struct AutPair {
    std::function<FreeWord(FreeWord const&)> tau;
    std::function<FreeWord(FreeWord const&)> sigma;
  };

  // sigma(x) = d(x) x, tau(t) = d(t) t.  The inverse derivation is the
  // regularity witness; the two pairs must compose to the identity on the
  // samples, or NonRegularError is thrown.
  AutPair sigma_tau(Derivation const&            d,
                    Derivation const&            inverse,
                    std::vector<FreeWord> const& samples);
  AutPair sigma_tau_unchecked(Derivation const& d);

  // Conjugation by u on both components.
  AutPair rho_aut(ReducibleFixture const& fx, FreeWord const& u);

  struct ActorDiagramOptions {
    std::size_t   samples = 200;
    std::uint64_t seed    = 0;
    bool          perturb = false;  // flip the sign inside eta
  };

  // tau_eta(n0) = rho1(u r^e u^-1)(n0) and sigma_eta(m) = rho2(u r^e u^-1)(m)
  // for sampled symbols and sampled n0, m in N0.
  CheckReport check_actor_diagram(ReducibleFixture const&    fx,
                                  ActorDiagramOptions const& opts);

  // An element of T ⋊ M: t in N0, m a Y1-sequence acting through its
  // boundary.
  struct TMPair {
    FreeWord  t;
    YSequence m;

    bool operator==(TMPair const&) const = default;
  };

  // ^{(g,p)}(t, m) = (g (p t p^-1) g^-1 (eta(^p m)(g))^-1, ^p m)
  // with g, t in N0 and p in F1.
  TMPair semidirect_action(ReducibleFixture const& fx,
                           FreeWord const&         g,
                           FreeWord const&         p,
                           TMPair const&           tm);
  // Product in N0 ⋊ F1.
  std::pair<FreeWord, FreeWord>
  semidirect_product(ReducibleFixture const&              fx,
                     std::pair<FreeWord, FreeWord> const& a,
                     std::pair<FreeWord, FreeWord> const& b);

  // u0 u1, for u0 in N0 and u1 over the small alphabet.
  FreeWord p_map(Retraction const& rho, FreeWord const& u0, FreeWord const& u1);

  // Image of one symbol over the big presentation in T ⋊ M.
  TMPair psi_symbol(ReducibleFixture const& fx, YSymbol const& s);

  // Folds psi_symbol over d with (t, m)(t', m') = (t ^{d(m)}t', m m').
  // Throws PreconditionError if d is not an identity sequence and
  // InvariantError if the N0 component does not vanish.
  TMPair project_identity_sequence(ReducibleFixture const& fx,
                                   YSequence const&        d);

  // Random material for the checks.
  FreeWord random_word(Alphabet const&                 alphabet,
                       std::mt19937_64&                rng,
                       std::size_t                     max_length,
                       std::vector<std::size_t> const& letters = {});
  // A product of one or two conjugates of w^{±1}.
  FreeWord random_kernel_element(ReducibleFixture const& fx,
                                 std::mt19937_64&        rng);

}  // namespace asph

#endif  // ASPH_XMOD_HPP_
