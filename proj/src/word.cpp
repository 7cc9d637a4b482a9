#include "asph/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "asph/error.hpp"

namespace asph {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet() {
    static auto const empty = std::make_shared<Data const>();
    _data                   = empty;
  }

  Alphabet::Alphabet(std::vector<std::string> ids) {
    auto data = std::make_shared<Data>();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!valid_identifier(ids[i])) {
        throw AlphabetError("invalid generator identifier '" + ids[i] + "'");
      }
      if (!data->index.emplace(ids[i], i).second) {
        throw AlphabetError("duplicate generator '" + ids[i] + "'");
      }
    }
    data->ids = std::move(ids);
    _data     = std::move(data);
  }

  bool Alphabet::valid_identifier(std::string_view id) noexcept {
    if (id.empty() || !std::isalpha(static_cast<unsigned char>(id[0]))) {
      return false;
    }
    return std::all_of(id.begin(), id.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  std::optional<std::size_t> Alphabet::find(std::string_view id) const {
    auto it = _data->index.find(std::string(id));
    if (it == _data->index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t Alphabet::index(std::string_view id) const {
    auto i = find(id);
    if (!i) {
      throw AlphabetError("unknown generator " + std::string(id));
    }
    return *i;
  }

  Alphabet Alphabet::without(std::size_t i) const {
    auto ids = _data->ids;
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(i));
    return Alphabet(std::move(ids));
  }

  void check_same_alphabet(Alphabet const& a, Alphabet const& b) {
    if (!(a == b)) {
      throw AlphabetError("alphabet mismatch");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeWord
  ////////////////////////////////////////////////////////////////////////

  FreeWord::FreeWord(Alphabet alphabet, std::span<SignedLetter const> raw)
      : _alphabet(std::move(alphabet)) {
    _letters.reserve(raw.size());
    for (auto const& x : raw) {
      if (x.letter >= _alphabet.size() || (x.sign != 1 && x.sign != -1)) {
        throw AlphabetError("letter outside the alphabet");
      }
      if (!_letters.empty() && _letters.back() == x.inverse()) {
        _letters.pop_back();
      } else {
        _letters.push_back(x);
      }
    }
  }

  FreeWord FreeWord::generator(Alphabet alphabet, std::size_t letter, int sign) {
    SignedLetter x{static_cast<std::uint32_t>(letter), sign};
    return FreeWord(std::move(alphabet), {x});
  }

  bool FreeWord::operator<(FreeWord const& that) const noexcept {
    if (_letters.size() != that._letters.size()) {
      return _letters.size() < that._letters.size();
    }
    // Within one length: x < x^-1 < y < y^-1 ...
    return std::lexicographical_compare(
        _letters.begin(),
        _letters.end(),
        that._letters.begin(),
        that._letters.end(),
        [](SignedLetter const& a, SignedLetter const& b) {
          if (a.letter != b.letter) {
            return a.letter < b.letter;
          }
          return a.sign > b.sign;
        });
  }

  std::size_t FreeWord::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto const& x : _letters) {
      h ^= (static_cast<std::size_t>(x.letter) << 1) | (x.sign > 0 ? 1 : 0);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  FreeWord reduce(Alphabet const& alphabet, std::span<SignedLetter const> raw) {
    return FreeWord(alphabet, raw);
  }

  FreeWord multiply(FreeWord const& u, FreeWord const& v) {
    check_same_alphabet(u._alphabet, v._alphabet);
    if (u.empty()) {
      return v;
    }
    if (v.empty()) {
      return u;
    }
    auto const& a = u._letters;
    auto const& b = v._letters;
    std::size_t k = 0;
    while (k < a.size() && k < b.size()
           && a[a.size() - 1 - k] == b[k].inverse()) {
      ++k;
    }
    FreeWord result(u._alphabet);
    result._letters.reserve(a.size() + b.size() - 2 * k);
    result._letters.insert(
        result._letters.end(), a.begin(), a.end() - static_cast<long>(k));
    result._letters.insert(
        result._letters.end(), b.begin() + static_cast<long>(k), b.end());
    return result;
  }

  FreeWord invert(FreeWord const& u) {
    FreeWord result(u._alphabet);
    result._letters.reserve(u.length());
    for (auto it = u._letters.rbegin(); it != u._letters.rend(); ++it) {
      result._letters.push_back(it->inverse());
    }
    return result;
  }

  FreeWord conjugate(FreeWord const& u, FreeWord const& v) {
    return multiply(multiply(u, v), invert(u));
  }

  FreeWord power(FreeWord const& u, int exponent) {
    FreeWord base = exponent < 0 ? invert(u) : u;
    FreeWord result(u.alphabet());
    for (int i = 0; i < std::abs(exponent); ++i) {
      result = multiply(result, base);
    }
    return result;
  }

  long exponent_sum(FreeWord const& u, std::size_t letter) {
    if (letter >= u.alphabet().size()) {
      throw AlphabetError("letter outside the alphabet");
    }
    long sum = 0;
    for (auto const& x : u.letters()) {
      if (x.letter == letter) {
        sum += x.sign;
      }
    }
    return sum;
  }

  long exponent_sum(FreeWord const& u, std::string_view letter) {
    return exponent_sum(u, u.alphabet().index(letter));
  }

  std::vector<long> abelianize(FreeWord const& u) {
    std::vector<long> result(u.alphabet().size(), 0);
    for (auto const& x : u.letters()) {
      result[x.letter] += x.sign;
    }
    return result;
  }

  FreeWord embed(FreeWord const& u, Alphabet const& target) {
    if (u.alphabet() == target) {
      return u;
    }
    std::vector<SignedLetter> out;
    out.reserve(u.length());
    std::vector<std::optional<std::size_t>> map(u.alphabet().size());
    for (auto const& x : u.letters()) {
      auto& m = map[x.letter];
      if (!m) {
        m = target.find(u.alphabet().name(x.letter));
        if (!m) {
          throw AlphabetError("cannot embed: generator "
                              + u.alphabet().name(x.letter)
                              + " missing from target alphabet");
        }
      }
      out.push_back({static_cast<std::uint32_t>(*m), x.sign});
    }
    return FreeWord(target, out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::vector<SignedLetter> parse_letters(Alphabet const& alphabet,
                                          std::string_view text) {
    std::vector<SignedLetter> out;
    std::size_t               pos    = 0;
    std::size_t               tokens = 0;
    bool                      saw_one = false;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size()
             && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      std::string_view token = text.substr(start, pos - start);
      ++tokens;
      if (token == "1") {
        saw_one = true;
        continue;
      }
      auto             caret = token.find('^');
      std::string_view id    = token.substr(0, caret);
      long             exp   = 1;
      if (caret != std::string_view::npos) {
        std::string_view e = token.substr(caret + 1);
        auto [p, ec]       = std::from_chars(e.data(), e.data() + e.size(), exp);
        if (e.empty() || ec != std::errc() || p != e.data() + e.size()
            || exp == 0) {
          throw ParseError("bad exponent in '" + std::string(token) + "'",
                           1,
                           start + 1);
        }
      }
      if (!Alphabet::valid_identifier(id)) {
        throw ParseError(
            "bad token '" + std::string(token) + "'", 1, start + 1);
      }
      auto letter = alphabet.find(id);
      if (!letter) {
        throw ParseError("unknown generator " + std::string(id), 1, start + 1);
      }
      SignedLetter x{static_cast<std::uint32_t>(*letter), exp > 0 ? 1 : -1};
      for (long i = 0; i < std::labs(exp); ++i) {
        out.push_back(x);
      }
    }
    if (saw_one && tokens > 1) {
      throw ParseError("'1' must stand alone", 1, 1);
    }
    if (tokens == 0) {
      throw ParseError("empty word (write 1 for the identity)", 1, 1);
    }
    return out;
  }

  FreeWord parse_word(Alphabet const& alphabet, std::string_view text) {
    auto letters = parse_letters(alphabet, text);
    return FreeWord(alphabet, letters);
  }

  MonoidWord parse_monoid_word(Alphabet const& alphabet,
                               std::string_view text) {
    return MonoidWord{alphabet, parse_letters(alphabet, text)};
  }

  std::string to_string(Alphabet const& alphabet,
                        std::span<SignedLetter const> letters) {
    if (letters.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& x : letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += alphabet.name(x.letter);
      if (x.sign < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  std::string to_string(FreeWord const& u) {
    return to_string(u.alphabet(), u.letters());
  }

  std::string to_string(MonoidWord const& u) {
    return to_string(u.alphabet, u.letters);
  }

}  // namespace asph
