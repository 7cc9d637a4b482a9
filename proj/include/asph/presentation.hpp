#ifndef ASPH_PRESENTATION_HPP_
#define ASPH_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "asph/word.hpp"

namespace asph {

  struct Relator {
    std::string name;
    FreeWord    word;
  };

  class GroupPresentation {
   public:
    GroupPresentation() = default;
    // Throws Error on duplicate or malformed names, empty relators, or
    // relators over another alphabet.
    GroupPresentation(std::string          name,
                      Alphabet             alphabet,
                      std::vector<Relator> relators);

    std::string const& name() const noexcept {
      return _name;
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Relator> const& relators() const noexcept {
      return _relators;
    }
    Relator const& relator(std::size_t i) const {
      return _relators.at(i);
    }
    std::size_t size() const noexcept {
      return _relators.size();
    }

    std::optional<std::size_t> find_relator(std::string_view name) const;
    // Throws Error for unknown names.
    std::size_t relator_index(std::string_view name) const;

   private:
    std::string          _name;
    Alphabet             _alphabet;
    std::vector<Relator> _relators;
  };

  struct MonoidRelation {
    MonoidWord lhs;
    MonoidWord rhs;
  };

  class MonoidPresentation {
   public:
    MonoidPresentation() = default;
    MonoidPresentation(std::string                 name,
                       Alphabet                    alphabet,
                       std::vector<MonoidRelation> relations);

    std::string const& name() const noexcept {
      return _name;
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<MonoidRelation> const& relations() const noexcept {
      return _relations;
    }

   private:
    std::string                 _name;
    Alphabet                    _alphabet;
    std::vector<MonoidRelation> _relations;
  };

  using Presentation = std::variant<GroupPresentation, MonoidPresentation>;

  // A parsed presentation file.  Group files may carry an `eliminate <gen>`
  // directive naming the generator a Retraction should solve for.
  struct PresentationFile {
    Presentation               presentation;
    std::optional<std::string> eliminate;
  };

  // Grammar:
  //   group <name> | monoid <name>
  //   gens <id> ...
  //   rel <name> = <word>          (group)
  //   rel <word> = <word>          (monoid)
  //   eliminate <id>               (group, optional)
  // `#` starts a comment.  Errors are ParseError with line and column.
  PresentationFile   parse_presentation(std::string_view text);
  GroupPresentation  parse_group_presentation(std::string_view text);
  PresentationFile   read_presentation_file(std::string const& path);

  std::string to_string(GroupPresentation const& p);
  std::string to_string(MonoidPresentation const& p);

  // One relator u v^-1 per relation (u, v); relations whose two sides are
  // equal in the free group contribute nothing.  Relator names are
  // h1, h2, ... after the index of the source relation.
  GroupPresentation universal_group_presentation(MonoidPresentation const& mp);

  // The retraction F(x ∪ z) -> F(x) sending z to the word forced by a relator
  // in which z occurs exactly once.  Its kernel is the normal closure N0 of
  // that relator.
  class Retraction {
   public:
    Retraction(Alphabet    big,
               std::size_t eliminated,
               FreeWord    solved,
               std::string source_relator,
               FreeWord    source_word);

    Alphabet const& big() const noexcept {
      return _big;
    }
    Alphabet const& small() const noexcept {
      return _small;
    }
    std::size_t eliminated() const noexcept {
      return _eliminated;
    }
    FreeWord const& solved() const noexcept {
      return _solved;
    }
    std::string const& source_relator() const noexcept {
      return _source_relator;
    }
    FreeWord const& source_word() const noexcept {
      return _source_word;
    }

    // Homomorphism F -> F1 fixing x pointwise.
    FreeWord retract(FreeWord const& u) const;
    // F1 -> F
    FreeWord embed(FreeWord const& u) const;
    bool     in_kernel(FreeWord const& u) const {
      return retract(u).empty();
    }

   private:
    Alphabet    _big;
    Alphabet    _small;
    std::size_t _eliminated;
    FreeWord    _solved;
    std::string _source_relator;
    FreeWord    _source_word;
    std::vector<std::optional<std::uint32_t>> _to_small;
  };

  // u = u0 u1 with u0 in N0 and u1 in F1 (u1 over the small alphabet).
  struct Decomposition {
    FreeWord u0;
    FreeWord u1;
  };

  Retraction solve_single_occurrence(GroupPresentation const& gp,
                                     std::string_view         z);
  FreeWord      retract(Retraction const& rho, FreeWord const& u);
  Decomposition decompose(Retraction const& rho, FreeWord const& u);

  // The presentation with z and its relator removed, over the small alphabet.
  GroupPresentation subpresentation(GroupPresentation const& gp,
                                    Retraction const&        rho);

  struct LotEdge {
    std::size_t i;
    std::size_t j;
    std::size_t k;
  };

  // Generators x1..xn; relator r_s = x_j x_k x_j^-1 x_i^-1 for the s-th edge.
  // The edges i -- k (labelled j) must form a spanning tree on 1..n.
  GroupPresentation lot_presentation(std::size_t                 n,
                                     std::vector<LotEdge> const& edges);
  std::vector<LotEdge> parse_lot_edges(std::string_view text);

  // Generators x1..xn, relators U x_i U^-1 x_{i+1}^-1 for i = 1..n-1, where U
  // is given as text over x1..xn.
  GroupPresentation conjugation_chain_presentation(std::size_t      n,
                                                   std::string_view U);

  // First generator in alphabet order occurring exactly once (either sign)
  // across all relators.
  std::optional<std::size_t> is_reducible_lot(GroupPresentation const& gp);

  std::vector<std::size_t> occurrence_counts(GroupPresentation const& gp);

}  // namespace asph

#endif  // ASPH_PRESENTATION_HPP_
