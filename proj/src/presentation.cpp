#include "asph/presentation.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "asph/error.hpp"

namespace asph {

  ////////////////////////////////////////////////////////////////////////
  // GroupPresentation / MonoidPresentation
  ////////////////////////////////////////////////////////////////////////

  GroupPresentation::GroupPresentation(std::string          name,
                                       Alphabet             alphabet,
                                       std::vector<Relator> relators)
      : _name(std::move(name)),
        _alphabet(std::move(alphabet)),
        _relators(std::move(relators)) {
    std::set<std::string> seen;
    for (auto const& r : _relators) {
      if (!Alphabet::valid_identifier(r.name)) {
        throw Error("invalid relator name '" + r.name + "'");
      }
      if (!seen.insert(r.name).second) {
        throw Error("duplicate relator name '" + r.name + "'");
      }
      check_same_alphabet(r.word.alphabet(), _alphabet);
      if (r.word.empty()) {
        throw Error("relator '" + r.name + "' reduces to the identity");
      }
    }
  }

  std::optional<std::size_t>
  GroupPresentation::find_relator(std::string_view name) const {
    for (std::size_t i = 0; i < _relators.size(); ++i) {
      if (_relators[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t GroupPresentation::relator_index(std::string_view name) const {
    auto i = find_relator(name);
    if (!i) {
      throw Error("unknown relator '" + std::string(name) + "'");
    }
    return *i;
  }

  MonoidPresentation::MonoidPresentation(std::string                 name,
                                         Alphabet                    alphabet,
                                         std::vector<MonoidRelation> relations)
      : _name(std::move(name)),
        _alphabet(std::move(alphabet)),
        _relations(std::move(relations)) {
    for (auto const& rel : _relations) {
      check_same_alphabet(rel.lhs.alphabet, _alphabet);
      check_same_alphabet(rel.rhs.alphabet, _alphabet);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    std::vector<Token> split_tokens(std::string_view line) {
      std::vector<Token> out;
      std::size_t        pos = 0;
      while (pos < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[pos]))) {
          ++pos;
          continue;
        }
        std::size_t start = pos;
        while (pos < line.size()
               && !std::isspace(static_cast<unsigned char>(line[pos]))) {
          ++pos;
        }
        out.push_back({line.substr(start, pos - start), start + 1});
      }
      return out;
    }

    // Parses line[offset..] as a word, translating error positions.
    std::vector<SignedLetter> letters_at(Alphabet const&  alphabet,
                                         std::string_view line,
                                         std::size_t      offset,
                                         std::size_t      line_no) {
      try {
        return parse_letters(alphabet, line.substr(offset));
      } catch (ParseError const& e) {
        std::string msg = e.what();
        msg             = msg.substr(msg.find(": ") + 2);
        throw ParseError(msg, line_no, offset + e.column());
      }
    }

  }  // namespace

  PresentationFile parse_presentation(std::string_view text) {
    enum class Kind { Group, Monoid };
    std::optional<Kind>         kind;
    std::string                 name;
    std::optional<Alphabet>     alphabet;
    std::vector<Relator>        relators;
    std::vector<MonoidRelation> relations;
    std::optional<std::string>  eliminate;
    std::set<std::string>       relator_names;

    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(start, end - start);
      start                 = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      auto tokens = split_tokens(line);
      if (tokens.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto const& head = tokens[0];
      if (!kind) {
        if (head.text != "group" && head.text != "monoid") {
          throw ParseError("expected 'group <name>' or 'monoid <name>'",
                           line_no,
                           head.column);
        }
        if (tokens.size() != 2) {
          throw ParseError("expected exactly one name", line_no, head.column);
        }
        if (!Alphabet::valid_identifier(tokens[1].text)) {
          throw ParseError("invalid name", line_no, tokens[1].column);
        }
        kind = head.text == "group" ? Kind::Group : Kind::Monoid;
        name = std::string(tokens[1].text);
      } else if (!alphabet) {
        if (head.text != "gens") {
          throw ParseError("expected 'gens ...'", line_no, head.column);
        }
        std::vector<std::string> ids;
        std::set<std::string>    seen;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          std::string id(tokens[i].text);
          if (!Alphabet::valid_identifier(id)) {
            throw ParseError(
                "invalid generator '" + id + "'", line_no, tokens[i].column);
          }
          if (!seen.insert(id).second) {
            throw ParseError(
                "duplicate generator '" + id + "'", line_no, tokens[i].column);
          }
          ids.push_back(std::move(id));
        }
        alphabet = Alphabet(std::move(ids));
      } else if (head.text == "rel") {
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError("expected '='", line_no, line.size() + 1);
        }
        if (*kind == Kind::Group) {
          if (tokens.size() < 4 || tokens[2].text != "=") {
            throw ParseError(
                "expected 'rel <name> = <word>'", line_no, head.column);
          }
          std::string rname(tokens[1].text);
          if (!Alphabet::valid_identifier(rname)) {
            throw ParseError(
                "invalid relator name", line_no, tokens[1].column);
          }
          if (!relator_names.insert(rname).second) {
            throw ParseError("duplicate relator name '" + rname + "'",
                             line_no,
                             tokens[1].column);
          }
          auto     letters = letters_at(*alphabet, line, eq + 1, line_no);
          FreeWord w(*alphabet, letters);
          if (w.empty()) {
            throw ParseError("relator '" + rname
                                 + "' reduces to the identity",
                             line_no,
                             tokens[3].column);
          }
          relators.push_back({std::move(rname), std::move(w)});
        } else {
          auto lhs_start = head.column + 3 - 1;
          auto lhs = letters_at(*alphabet, line.substr(0, eq), lhs_start, line_no);
          auto rhs = letters_at(*alphabet, line, eq + 1, line_no);
          for (auto const* side : {&lhs, &rhs}) {
            for (auto const& x : *side) {
              if (x.sign < 0) {
                throw ParseError("inverse letters are not allowed in monoid "
                                 "relations",
                                 line_no,
                                 head.column);
              }
            }
          }
          relations.push_back({MonoidWord{*alphabet, std::move(lhs)},
                               MonoidWord{*alphabet, std::move(rhs)}});
        }
      } else if (head.text == "eliminate") {
        if (*kind != Kind::Group) {
          throw ParseError(
              "'eliminate' needs a group presentation", line_no, head.column);
        }
        if (tokens.size() != 2) {
          throw ParseError("expected 'eliminate <gen>'", line_no, head.column);
        }
        if (!alphabet->find(tokens[1].text)) {
          throw ParseError("unknown generator "
                               + std::string(tokens[1].text),
                           line_no,
                           tokens[1].column);
        }
        eliminate = std::string(tokens[1].text);
      } else {
        throw ParseError("unexpected '" + std::string(head.text) + "'",
                         line_no,
                         head.column);
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!kind) {
      throw ParseError("empty presentation", line_no, 1);
    }
    if (!alphabet) {
      throw ParseError("missing 'gens' line", line_no, 1);
    }
    if (*kind == Kind::Group) {
      return {GroupPresentation(name, *alphabet, std::move(relators)),
              eliminate};
    }
    return {MonoidPresentation(name, *alphabet, std::move(relations)),
            std::nullopt};
  }

  GroupPresentation parse_group_presentation(std::string_view text) {
    auto file = parse_presentation(text);
    if (auto* gp = std::get_if<GroupPresentation>(&file.presentation)) {
      return *gp;
    }
    throw ParseError("expected a group presentation", 1, 1);
  }

  PresentationFile read_presentation_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation(buffer.str());
  }

  std::string to_string(GroupPresentation const& p) {
    std::string out = "group " + p.name() + "\ngens";
    for (auto const& id : p.alphabet().ids()) {
      out += " " + id;
    }
    out += "\n";
    for (auto const& r : p.relators()) {
      out += "rel " + r.name + " = " + to_string(r.word) + "\n";
    }
    return out;
  }

  std::string to_string(MonoidPresentation const& p) {
    std::string out = "monoid " + p.name() + "\ngens";
    for (auto const& id : p.alphabet().ids()) {
      out += " " + id;
    }
    out += "\n";
    for (auto const& r : p.relations()) {
      out += "rel " + to_string(r.lhs) + " = " + to_string(r.rhs) + "\n";
    }
    return out;
  }

  GroupPresentation universal_group_presentation(MonoidPresentation const& mp) {
    std::vector<Relator> relators;
    for (std::size_t i = 0; i < mp.relations().size(); ++i) {
      auto const& rel = mp.relations()[i];
      FreeWord    u(mp.alphabet(), rel.lhs.letters);
      FreeWord    v(mp.alphabet(), rel.rhs.letters);
      FreeWord    w = u * invert(v);
      if (!w.empty()) {
        relators.push_back({"h" + std::to_string(i + 1), std::move(w)});
      }
    }
    return GroupPresentation(mp.name(), mp.alphabet(), std::move(relators));
  }

  ////////////////////////////////////////////////////////////////////////
  // Retraction
  ////////////////////////////////////////////////////////////////////////

  Retraction::Retraction(Alphabet    big,
                         std::size_t eliminated,
                         FreeWord    solved,
                         std::string source_relator,
                         FreeWord    source_word)
      : _big(std::move(big)),
        _small(_big.without(eliminated)),
        _eliminated(eliminated),
        _solved(std::move(solved)),
        _source_relator(std::move(source_relator)),
        _source_word(std::move(source_word)),
        _to_small(_big.size()) {
    check_same_alphabet(_solved.alphabet(), _small);
    check_same_alphabet(_source_word.alphabet(), _big);
    for (std::size_t i = 0, j = 0; i < _big.size(); ++i) {
      if (i != _eliminated) {
        _to_small[i] = static_cast<std::uint32_t>(j++);
      }
    }
    if (!retract(_source_word).empty()) {
      throw InvariantError("retraction does not kill its source relator");
    }
  }

  FreeWord Retraction::retract(FreeWord const& u) const {
    check_same_alphabet(u.alphabet(), _big);
    std::vector<SignedLetter> out;
    out.reserve(u.length());
    for (auto const& x : u.letters()) {
      if (x.letter == _eliminated) {
        auto const& s = _solved.letters();
        if (x.sign > 0) {
          out.insert(out.end(), s.begin(), s.end());
        } else {
          for (auto it = s.rbegin(); it != s.rend(); ++it) {
            out.push_back(it->inverse());
          }
        }
      } else {
        out.push_back({*_to_small[x.letter], x.sign});
      }
    }
    return FreeWord(_small, out);
  }

  FreeWord Retraction::embed(FreeWord const& u) const {
    return asph::embed(u, _big);
  }

  Retraction solve_single_occurrence(GroupPresentation const& gp,
                                     std::string_view         z) {
    std::size_t zi    = gp.alphabet().index(z);
    std::size_t count = 0;
    std::size_t which = 0;
    std::size_t pos   = 0;
    for (std::size_t r = 0; r < gp.size(); ++r) {
      auto const& letters = gp.relator(r).word.letters();
      for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p].letter == zi) {
          ++count;
          which = r;
          pos   = p;
        }
      }
    }
    if (count != 1) {
      throw NotReducibleError("generator " + std::string(z) + " occurs "
                              + std::to_string(count)
                              + " times among the relators (need exactly 1)");
    }
    auto const& w       = gp.relator(which).word;
    auto const& letters = w.letters();
    std::span<SignedLetter const> all(letters);
    FreeWord A(gp.alphabet(), all.subspan(0, pos));
    FreeWord B(gp.alphabet(), all.subspan(pos + 1));
    // A z B = 1  =>  z = A^-1 B^-1;   A z^-1 B = 1  =>  z = B A
    FreeWord solved_big = letters[pos].sign > 0 ? invert(A) * invert(B) : B * A;
    Alphabet small      = gp.alphabet().without(zi);
    FreeWord solved;
    try {
      solved = asph::embed(solved_big, small);
    } catch (AlphabetError const&) {
      throw InvariantError("solved word still contains the eliminated letter");
    }
    return Retraction(gp.alphabet(), zi, solved, gp.relator(which).name, w);
  }

  FreeWord retract(Retraction const& rho, FreeWord const& u) {
    return rho.retract(u);
  }

  Decomposition decompose(Retraction const& rho, FreeWord const& u) {
    FreeWord u1 = rho.retract(u);
    FreeWord u0 = u * invert(rho.embed(u1));
    return {std::move(u0), std::move(u1)};
  }

  GroupPresentation subpresentation(GroupPresentation const& gp,
                                    Retraction const&        rho) {
    check_same_alphabet(gp.alphabet(), rho.big());
    std::vector<Relator> relators;
    for (auto const& r : gp.relators()) {
      if (r.name == rho.source_relator()) {
        continue;
      }
      relators.push_back({r.name, asph::embed(r.word, rho.small())});
    }
    return GroupPresentation(gp.name() + "_1", rho.small(), std::move(relators));
  }

  ////////////////////////////////////////////////////////////////////////
  // LOT presentations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Alphabet numbered_alphabet(std::size_t n) {
      std::vector<std::string> ids;
      for (std::size_t i = 1; i <= n; ++i) {
        ids.push_back("x" + std::to_string(i));
      }
      return Alphabet(std::move(ids));
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  GroupPresentation lot_presentation(std::size_t                 n,
                                     std::vector<LotEdge> const& edges) {
    if (n == 0) {
      throw Error("a LOT needs at least one generator");
    }
    for (auto const& e : edges) {
      for (auto v : {e.i, e.j, e.k}) {
        if (v < 1 || v > n) {
          throw Error("edge index " + std::to_string(v) + " out of range 1.."
                      + std::to_string(n));
        }
      }
    }
    if (edges.size() != n - 1) {
      throw Error("not a tree: " + std::to_string(edges.size())
                  + " edges on " + std::to_string(n) + " vertices");
    }
    std::vector<std::size_t> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto const& e : edges) {
      auto a = find_root(parent, e.i);
      auto b = find_root(parent, e.k);
      if (a == b) {
        throw Error("not a tree: edges contain a cycle");
      }
      parent[a] = b;
    }
    Alphabet             alphabet = numbered_alphabet(n);
    std::vector<Relator> relators;
    for (std::size_t s = 0; s < edges.size(); ++s) {
      auto const&  e = edges[s];
      auto         x = [](std::size_t v, int sign) {
        return SignedLetter{static_cast<std::uint32_t>(v - 1), sign};
      };
      SignedLetter raw[] = {x(e.j, 1), x(e.k, 1), x(e.j, -1), x(e.i, -1)};
      relators.push_back({"r" + std::to_string(s + 1), FreeWord(alphabet, raw)});
    }
    return GroupPresentation("LOT", alphabet, std::move(relators));
  }

  std::vector<LotEdge> parse_lot_edges(std::string_view text) {
    std::vector<LotEdge> edges;
    std::size_t          start = 0;
    while (start < text.size()) {
      auto end = text.find(';', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string item(text.substr(start, end - start));
      start = end + 1;
      if (item.find_first_not_of(" \t") == std::string::npos) {
        continue;
      }
      LotEdge e{};
      char    c1 = 0, c2 = 0;
      std::istringstream in(item);
      if (!(in >> e.i >> c1 >> e.j >> c2 >> e.k) || c1 != ',' || c2 != ',') {
        throw ParseError("bad edge '" + item + "' (want i,j,k)", 1, 1);
      }
      std::string rest;
      if (in >> rest) {
        throw ParseError("bad edge '" + item + "' (want i,j,k)", 1, 1);
      }
      edges.push_back(e);
    }
    return edges;
  }

  GroupPresentation conjugation_chain_presentation(std::size_t      n,
                                                   std::string_view U) {
    if (n < 2) {
      throw Error("the chain family needs n >= 2");
    }
    Alphabet             alphabet = numbered_alphabet(n);
    FreeWord             u        = parse_word(alphabet, U);
    std::vector<Relator> relators;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      FreeWord xi   = FreeWord::generator(alphabet, i);
      FreeWord next = FreeWord::generator(alphabet, i + 1);
      relators.push_back(
          {"r" + std::to_string(i + 1), conjugate(u, xi) * invert(next)});
    }
    return GroupPresentation("chain", alphabet, std::move(relators));
  }

  std::vector<std::size_t> occurrence_counts(GroupPresentation const& gp) {
    std::vector<std::size_t> counts(gp.alphabet().size(), 0);
    for (auto const& r : gp.relators()) {
      for (auto const& x : r.word.letters()) {
        ++counts[x.letter];
      }
    }
    return counts;
  }

  std::optional<std::size_t> is_reducible_lot(GroupPresentation const& gp) {
    auto counts = occurrence_counts(gp);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 1) {
        return i;
      }
    }
    return std::nullopt;
  }

}  // namespace asph
