#ifndef ASPH_PEIFFER_HPP_
#define ASPH_PEIFFER_HPP_

// Y-sequences over a group presentation and the Peiffer moves on them.
//
// A symbol (^u r)^e has boundary u r^e u^-1.  The moves at position i:
//   ExchangeL  (a, b) -> (^{d(a)} b, a)
//   ExchangeR  (a, b) -> (b, ^{d(b)^-1} a)
//   Delete     (a, a^-1) -> ()
//   Insert     () -> (a, a^-1)
// where d is the boundary and ^w conjugates the symbol's conjugator on the
// left.  None of them changes the boundary of the whole sequence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asph/presentation.hpp"
#include "asph/word.hpp"

namespace asph {

  struct YSymbol {
    std::size_t rel = 0;  // index into the presentation's relators
    FreeWord    conj;
    int         sign = 1;

    YSymbol inverse() const {
      return {rel, conj, -sign};
    }
    bool operator==(YSymbol const&) const = default;
  };

  using YSequence = std::vector<YSymbol>;

  // Formal sign -1 stands for the formal inverse in the group of the
  // presentation on Y; nothing cancels syntactically.
  struct GUpsilonEntry {
    YSymbol symbol;
    int     formal_sign = 1;
  };

  using GUpsilonWord = std::vector<GUpsilonEntry>;

  enum class MoveKind { ExchangeL, ExchangeR, Delete, Insert };

  char const*             to_string(MoveKind k) noexcept;
  std::optional<MoveKind> parse_move_kind(std::string_view s) noexcept;

  struct Move {
    MoveKind               kind = MoveKind::Delete;
    std::size_t            pos  = 0;
    std::optional<YSymbol> symbol;  // Insert only

    bool operator==(Move const&) const = default;
  };

  // Where Insert moves draw their symbols from during a search.
  enum class PoolKind { None, Present, PresentExchange };

  char const*             to_string(PoolKind k) noexcept;
  std::optional<PoolKind> parse_pool_kind(std::string_view s) noexcept;

  struct Certificate {
    PoolKind          pool = PoolKind::Present;
    std::size_t       cap  = 0;
    std::vector<Move> moves;
  };

  // Throws Error when the symbol cites a missing relator or its conjugator is
  // over another alphabet.
  void     check_symbol(GroupPresentation const& gp, YSymbol const& s);
  FreeWord symbol_boundary(GroupPresentation const& gp, YSymbol const& s);
  FreeWord boundary(GroupPresentation const& gp, YSequence const& d);
  bool     is_identity(GroupPresentation const& gp, YSequence const& d);

  // Throws IllegalMoveError.
  YSequence apply_move(GroupPresentation const& gp,
                       YSequence const&         d,
                       Move const&              m);

  // Deletes, then ExchangeL/ExchangeR by position, then Inserts of each pool
  // symbol at each position.
  std::vector<Move> legal_moves(GroupPresentation const&    gp,
                                YSequence const&            d,
                                std::vector<YSymbol> const& insert_pool);

  // The move that undoes m when applied to apply_move(gp, d, m).
  Move inverse_move(GroupPresentation const& gp,
                    YSequence const&         d,
                    Move const&              m);
  // Moves leading from the end of `moves` (replayed from d) back to d.
  std::vector<Move> invert_moves(GroupPresentation const& gp,
                                 YSequence const&         d,
                                 std::vector<Move> const& moves);

  struct VerifyReport {
    bool                       ok = false;
    std::optional<std::size_t> failing_step;
    std::string                message;
  };

  // Replays the moves from d and checks that the result is empty.
  VerifyReport verify_certificate(GroupPresentation const& gp,
                                  YSequence const&         d,
                                  Certificate const&       c);
  // Replays the moves; throws IllegalMoveError naming the step on failure.
  YSequence replay(GroupPresentation const& gp,
                   YSequence                d,
                   std::vector<Move> const& moves);

  struct ScrambleOptions {
    std::vector<std::size_t> relators;  // empty means all
    std::vector<std::size_t> letters;   // conjugator letters; empty means all
    std::size_t              max_conj    = 2;
    unsigned                 insert_odds = 50;  // percent
  };

  struct Scrambled {
    YSequence         sequence;
    std::vector<Move> moves;
  };

  // k random legal moves from the empty sequence.
  Scrambled scramble(GroupPresentation const& gp,
                     std::uint64_t            seed,
                     std::size_t              k,
                     ScrambleOptions const&   opts = {});

  // Symbols an Insert may use for a search starting at d, limited to
  // conjugators of length at most cap.
  std::vector<YSymbol> insert_pool(GroupPresentation const& gp,
                                   YSequence const&         d,
                                   PoolKind                 kind,
                                   std::size_t              cap);

  struct SearchOptions {
    std::size_t budget = 50000;  // nodes expanded, summed over iterations
    std::size_t depth  = 12;     // moves
    std::size_t cap    = 64;     // conjugator length
    PoolKind    pool   = PoolKind::Present;
  };

  struct SearchResult {
    std::optional<Certificate> certificate;  // empty when exhausted
    std::size_t                nodes = 0;

    bool exhausted() const noexcept {
      return !certificate.has_value();
    }
  };

  // Iterative deepening with the admissible estimate |length difference|/2.
  // Throws PreconditionError if d is not an identity sequence.
  SearchResult search_trivialization(GroupPresentation const& gp,
                                     YSequence const&         d,
                                     SearchOptions const&     opts = {});
  // Same search towards an arbitrary target with the same boundary.
  SearchResult search_path(GroupPresentation const& gp,
                           YSequence const&         from,
                           YSequence const&         to,
                           SearchOptions const&     opts = {});

  YSequence conjugate_sequence(FreeWord const& w, YSequence const& d);
  // Reverse order, flipped signs.
  YSequence inverse_sequence(YSequence const& d);
  // ^{n0}d followed by the inverse of d.  Throws PreconditionError unless d
  // is an identity sequence.
  YSequence fiber_pair(GroupPresentation const& gp,
                       FreeWord const&          n0,
                       YSequence const&         d);
  YSequence insertion_generator(YSymbol const& a);

  FreeWord theta_tilde(GroupPresentation const& gp, GUpsilonWord const& g);

  std::string to_string(GroupPresentation const& gp, YSymbol const& s);
  std::string to_string(GroupPresentation const& gp, YSequence const& d);

}  // namespace asph

#endif  // ASPH_PEIFFER_HPP_
