#ifndef ASPH_COSET_HPP_
#define ASPH_COSET_HPP_

// Todd-Coxeter coset enumeration, HLT strategy (relator scanning with
// definitions, no lookahead) under a hard cap on the number of cosets
// defined.

#include <cstddef>
#include <optional>
#include <vector>

#include "asph/presentation.hpp"
#include "asph/word.hpp"

namespace asph {

  // A complete coset table in standard form: coset 0 is the subgroup, and
  // cosets are numbered in order of first appearance when the table is read
  // row by row.  Column 2*i is generator i, column 2*i+1 its inverse.
  class CosetTable {
   public:
    CosetTable(Alphabet alphabet, std::vector<std::vector<std::size_t>> rows);

    std::size_t size() const noexcept {
      return _rows.size();
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<std::vector<std::size_t>> const& rows() const noexcept {
      return _rows;
    }

    static std::size_t column(SignedLetter x) noexcept {
      return 2 * x.letter + (x.sign > 0 ? 0 : 1);
    }

    std::size_t trace(std::size_t coset, FreeWord const& w) const;
    bool        in_subgroup(FreeWord const& w) const {
      return trace(0, w) == 0;
    }
    // Shortlex-least word leading from coset 0 to the given coset.
    FreeWord const& representative(std::size_t coset) const {
      return _reps.at(coset);
    }

   private:
    Alphabet                              _alphabet;
    std::vector<std::vector<std::size_t>> _rows;
    std::vector<FreeWord>                 _reps;
  };

  struct CosetResult {
    std::optional<CosetTable> table;      // empty when the budget ran out
    std::size_t               defined = 0;  // cosets defined in total

    bool exhausted() const noexcept {
      return !table.has_value();
    }
    std::size_t index() const {
      return table->size();
    }
  };

  CosetResult coset_enumeration(GroupPresentation const&     gp,
                                std::vector<FreeWord> const& subgroup,
                                std::size_t                  budget);

}  // namespace asph

#endif  // ASPH_COSET_HPP_
