#include "asph/peiffer.hpp"

#include <random>
#include <set>

#include "asph/error.hpp"

namespace asph {

  char const* to_string(MoveKind k) noexcept {
    switch (k) {
      case MoveKind::ExchangeL:
        return "ExchangeL";
      case MoveKind::ExchangeR:
        return "ExchangeR";
      case MoveKind::Delete:
        return "Delete";
      case MoveKind::Insert:
        return "Insert";
    }
    return "?";
  }

  std::optional<MoveKind> parse_move_kind(std::string_view s) noexcept {
    for (auto k : {MoveKind::ExchangeL,
                   MoveKind::ExchangeR,
                   MoveKind::Delete,
                   MoveKind::Insert}) {
      if (s == to_string(k)) {
        return k;
      }
    }
    return std::nullopt;
  }

  char const* to_string(PoolKind k) noexcept {
    switch (k) {
      case PoolKind::None:
        return "none";
      case PoolKind::Present:
        return "present";
      case PoolKind::PresentExchange:
        return "present+exchange";
    }
    return "?";
  }

  std::optional<PoolKind> parse_pool_kind(std::string_view s) noexcept {
    for (auto k : {PoolKind::None, PoolKind::Present, PoolKind::PresentExchange}) {
      if (s == to_string(k)) {
        return k;
      }
    }
    return std::nullopt;
  }

  void check_symbol(GroupPresentation const& gp, YSymbol const& s) {
    if (s.rel >= gp.size()) {
      throw Error("symbol cites relator #" + std::to_string(s.rel)
                  + " but the presentation has " + std::to_string(gp.size()));
    }
    if (s.sign != 1 && s.sign != -1) {
      throw Error("symbol sign must be 1 or -1");
    }
    check_same_alphabet(s.conj.alphabet(), gp.alphabet());
  }

  FreeWord symbol_boundary(GroupPresentation const& gp, YSymbol const& s) {
    check_symbol(gp, s);
    auto const& r = gp.relator(s.rel).word;
    return conjugate(s.conj, s.sign > 0 ? r : invert(r));
  }

  FreeWord boundary(GroupPresentation const& gp, YSequence const& d) {
    FreeWord out(gp.alphabet());
    for (auto const& s : d) {
      out = out * symbol_boundary(gp, s);
    }
    return out;
  }

  bool is_identity(GroupPresentation const& gp, YSequence const& d) {
    return boundary(gp, d).empty();
  }

  YSequence apply_move(GroupPresentation const& gp,
                       YSequence const&         d,
                       Move const&              m) {
    auto fail = [&](std::string const& why) {
      throw IllegalMoveError(std::string(to_string(m.kind)) + " at "
                             + std::to_string(m.pos) + ": " + why);
    };
    YSequence out = d;
    switch (m.kind) {
      case MoveKind::ExchangeL:
      case MoveKind::ExchangeR: {
        if (m.pos + 1 >= d.size()) {
          fail("position out of range");
        }
        YSymbol const& a = d[m.pos];
        YSymbol const& b = d[m.pos + 1];
        if (m.kind == MoveKind::ExchangeL) {
          YSymbol b2 = b;
          b2.conj    = symbol_boundary(gp, a) * b.conj;
          out[m.pos]     = std::move(b2);
          out[m.pos + 1] = a;
        } else {
          YSymbol a2 = a;
          a2.conj    = invert(symbol_boundary(gp, b)) * a.conj;
          out[m.pos]     = b;
          out[m.pos + 1] = std::move(a2);
        }
        break;
      }
      case MoveKind::Delete: {
        if (m.pos + 1 >= d.size()) {
          fail("position out of range");
        }
        if (!(d[m.pos + 1] == d[m.pos].inverse())) {
          fail("pair mismatch");
        }
        out.erase(out.begin() + m.pos, out.begin() + m.pos + 2);
        break;
      }
      case MoveKind::Insert: {
        if (m.pos > d.size()) {
          fail("position out of range");
        }
        if (!m.symbol) {
          fail("no symbol to insert");
        }
        check_symbol(gp, *m.symbol);
        out.insert(out.begin() + m.pos, {*m.symbol, m.symbol->inverse()});
        break;
      }
    }
    return out;
  }

  std::vector<Move> legal_moves(GroupPresentation const&    gp,
                                YSequence const&            d,
                                std::vector<YSymbol> const& insert_pool) {
    (void) gp;
    std::vector<Move> out;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] == d[i].inverse()) {
        out.push_back({MoveKind::Delete, i, std::nullopt});
      }
    }
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      out.push_back({MoveKind::ExchangeL, i, std::nullopt});
      out.push_back({MoveKind::ExchangeR, i, std::nullopt});
    }
    for (auto const& a : insert_pool) {
      for (std::size_t i = 0; i <= d.size(); ++i) {
        out.push_back({MoveKind::Insert, i, a});
      }
    }
    return out;
  }

  Move inverse_move(GroupPresentation const& gp,
                    YSequence const&         d,
                    Move const&              m) {
    (void) gp;
    switch (m.kind) {
      case MoveKind::ExchangeL:
        return {MoveKind::ExchangeR, m.pos, std::nullopt};
      case MoveKind::ExchangeR:
        return {MoveKind::ExchangeL, m.pos, std::nullopt};
      case MoveKind::Delete:
        if (m.pos >= d.size()) {
          throw IllegalMoveError("Delete at " + std::to_string(m.pos)
                                 + ": position out of range");
        }
        return {MoveKind::Insert, m.pos, d[m.pos]};
      case MoveKind::Insert:
        return {MoveKind::Delete, m.pos, std::nullopt};
    }
    return m;
  }

  std::vector<Move> invert_moves(GroupPresentation const& gp,
                                 YSequence const&         d,
                                 std::vector<Move> const& moves) {
    std::vector<Move> out(moves.size());
    YSequence         cur = d;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      out[moves.size() - 1 - i] = inverse_move(gp, cur, moves[i]);
      cur                       = apply_move(gp, cur, moves[i]);
    }
    return out;
  }

  YSequence replay(GroupPresentation const& gp,
                   YSequence                d,
                   std::vector<Move> const& moves) {
    for (std::size_t i = 0; i < moves.size(); ++i) {
      try {
        d = apply_move(gp, d, moves[i]);
      } catch (Error const& e) {
        throw IllegalMoveError("step " + std::to_string(i) + ": " + e.what());
      }
    }
    return d;
  }

  VerifyReport verify_certificate(GroupPresentation const& gp,
                                  YSequence const&         d,
                                  Certificate const&       c) {
    VerifyReport report;
    YSequence    cur = d;
    for (std::size_t i = 0; i < c.moves.size(); ++i) {
      try {
        cur = apply_move(gp, cur, c.moves[i]);
      } catch (Error const& e) {
        report.failing_step = i;
        report.message      = e.what();
        return report;
      }
    }
    if (!cur.empty()) {
      report.failing_step = c.moves.size();
      report.message      = "replay ends at a sequence of length "
                       + std::to_string(cur.size());
      return report;
    }
    report.ok = true;
    return report;
  }

  Scrambled scramble(GroupPresentation const& gp,
                     std::uint64_t            seed,
                     std::size_t              k,
                     ScrambleOptions const&   opts) {
    if (gp.size() == 0 && k > 0) {
      throw PreconditionError("cannot scramble over a presentation with no relators");
    }
    std::vector<std::size_t> rels = opts.relators, letters = opts.letters;
    if (rels.empty()) {
      for (std::size_t i = 0; i < gp.size(); ++i) {
        rels.push_back(i);
      }
    }
    if (letters.empty()) {
      for (std::size_t i = 0; i < gp.alphabet().size(); ++i) {
        letters.push_back(i);
      }
    }
    std::mt19937_64 rng(seed);
    Scrambled       out;
    for (std::size_t step = 0; step < k; ++step) {
      Move m;
      if (out.sequence.empty() || rng() % 100 < opts.insert_odds) {
        std::vector<SignedLetter> raw(rng() % (opts.max_conj + 1));
        for (auto& x : raw) {
          x.letter = static_cast<std::uint32_t>(letters[rng() % letters.size()]);
          x.sign   = rng() % 2 == 0 ? 1 : -1;
        }
        YSymbol a;
        a.rel  = rels[rng() % rels.size()];
        a.conj = FreeWord(gp.alphabet(), raw);
        a.sign = rng() % 2 == 0 ? 1 : -1;
        m      = {MoveKind::Insert, rng() % (out.sequence.size() + 1), a};
      } else {
        auto moves = legal_moves(gp, out.sequence, {});
        m          = moves[rng() % moves.size()];
      }
      out.sequence = apply_move(gp, out.sequence, m);
      out.moves.push_back(std::move(m));
    }
    return out;
  }

  std::vector<YSymbol> insert_pool(GroupPresentation const& gp,
                                   YSequence const&         d,
                                   PoolKind                 kind,
                                   std::size_t              cap) {
    std::vector<YSymbol> out;
    if (kind == PoolKind::None) {
      return out;
    }
    std::vector<FreeWord>    conjs;
    std::set<std::size_t>    rels;
    auto add_conj = [&](FreeWord const& w) {
      if (w.length() > cap) {
        return;
      }
      for (auto const& c : conjs) {
        if (c == w) {
          return;
        }
      }
      conjs.push_back(w);
    };
    for (auto const& s : d) {
      check_symbol(gp, s);
      add_conj(s.conj);
      rels.insert(s.rel);
    }
    if (kind == PoolKind::PresentExchange) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (i == j) {
            continue;
          }
          add_conj(symbol_boundary(gp, d[i]) * d[j].conj);
          add_conj(invert(symbol_boundary(gp, d[j])) * d[i].conj);
        }
      }
    }
    for (auto const& c : conjs) {
      for (auto r : rels) {
        out.push_back({r, c, 1});
        out.push_back({r, c, -1});
      }
    }
    return out;
  }

  YSequence conjugate_sequence(FreeWord const& w, YSequence const& d) {
    YSequence out = d;
    for (auto& s : out) {
      s.conj = w * s.conj;
    }
    return out;
  }

  YSequence inverse_sequence(YSequence const& d) {
    YSequence out(d.rbegin(), d.rend());
    for (auto& s : out) {
      s.sign = -s.sign;
    }
    return out;
  }

  YSequence fiber_pair(GroupPresentation const& gp,
                       FreeWord const&          n0,
                       YSequence const&         d) {
    check_same_alphabet(n0.alphabet(), gp.alphabet());
    if (!is_identity(gp, d)) {
      throw PreconditionError("not an identity sequence");
    }
    YSequence out = conjugate_sequence(n0, d);
    auto      inv = inverse_sequence(d);
    out.insert(out.end(), inv.begin(), inv.end());
    return out;
  }

  YSequence insertion_generator(YSymbol const& a) {
    return {a, a.inverse()};
  }

  FreeWord theta_tilde(GroupPresentation const& gp, GUpsilonWord const& g) {
    FreeWord out(gp.alphabet());
    for (auto const& e : g) {
      auto b = symbol_boundary(gp, e.symbol);
      out    = out * (e.formal_sign > 0 ? b : invert(b));
    }
    return out;
  }

  std::string to_string(GroupPresentation const& gp, YSymbol const& s) {
    std::string out = "(^{" + to_string(s.conj) + "}";
    out += s.rel < gp.size() ? gp.relator(s.rel).name : "?";
    out += ")^" + std::to_string(s.sign);
    return out;
  }

  std::string to_string(GroupPresentation const& gp, YSequence const& d) {
    std::string out = "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += to_string(gp, d[i]);
    }
    return out + "]";
  }

}  // namespace asph
