#ifndef ASPH_WORD_HPP_
#define ASPH_WORD_HPP_

// Free group and free monoid words over named alphabets.
//
// A FreeWord is always stored freely reduced, so equality of group elements
// is equality of letter sequences.  Every operation combining two words
// requires both to live over the same alphabet (structural comparison of the
// identifier lists); use embed() to move a word into a larger alphabet.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace asph {

  class Alphabet {
   public:
    Alphabet();
    explicit Alphabet(std::vector<std::string> ids);

    std::size_t size() const noexcept {
      return _data->ids.size();
    }
    std::string const& name(std::size_t i) const {
      return _data->ids.at(i);
    }
    std::vector<std::string> const& ids() const noexcept {
      return _data->ids;
    }

    std::optional<std::size_t> find(std::string_view id) const;
    // Throws AlphabetError for unknown identifiers.
    std::size_t index(std::string_view id) const;

    // The alphabet with the letter at position i removed.
    Alphabet without(std::size_t i) const;

    bool operator==(Alphabet const& that) const noexcept {
      return _data == that._data || _data->ids == that._data->ids;
    }

    static bool valid_identifier(std::string_view id) noexcept;

   private:
    struct Data {
      std::vector<std::string>                     ids;
      std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<Data const> _data;
  };

  struct SignedLetter {
    std::uint32_t letter = 0;
    std::int32_t  sign   = 1;

    SignedLetter inverse() const noexcept {
      return {letter, -sign};
    }
    bool operator==(SignedLetter const&) const = default;
    auto operator<=>(SignedLetter const&) const = default;
  };

  class FreeWord {
   public:
    FreeWord() = default;
    explicit FreeWord(Alphabet alphabet) : _alphabet(std::move(alphabet)) {}
    // Freely reduces the input.  Throws AlphabetError on out-of-range letters.
    FreeWord(Alphabet alphabet, std::span<SignedLetter const> raw);
    FreeWord(Alphabet alphabet, std::initializer_list<SignedLetter> raw)
        : FreeWord(std::move(alphabet),
                   std::span<SignedLetter const>(raw.begin(), raw.size())) {}

    static FreeWord generator(Alphabet alphabet,
                              std::size_t letter,
                              int         sign = 1);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<SignedLetter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    bool operator==(FreeWord const& that) const noexcept {
      return _letters == that._letters && _alphabet == that._alphabet;
    }

    // Shortlex order on letter sequences.  Only meaningful within one
    // alphabet.
    bool operator<(FreeWord const& that) const noexcept;

    std::size_t hash() const noexcept;

   private:
    friend FreeWord multiply(FreeWord const&, FreeWord const&);
    friend FreeWord invert(FreeWord const&);

    Alphabet                  _alphabet;
    std::vector<SignedLetter> _letters;
  };

  // A word with no reduction applied (monoid words, raw relator text).
  struct MonoidWord {
    Alphabet                  alphabet;
    std::vector<SignedLetter> letters;

    bool operator==(MonoidWord const&) const = default;
  };

  FreeWord reduce(Alphabet const& alphabet, std::span<SignedLetter const> raw);
  FreeWord multiply(FreeWord const& u, FreeWord const& v);
  FreeWord invert(FreeWord const& u);
  // u v u^-1
  FreeWord conjugate(FreeWord const& u, FreeWord const& v);
  FreeWord power(FreeWord const& u, int exponent);

  inline FreeWord operator*(FreeWord const& u, FreeWord const& v) {
    return multiply(u, v);
  }

  long exponent_sum(FreeWord const& u, std::size_t letter);
  long exponent_sum(FreeWord const& u, std::string_view letter);
  std::vector<long> abelianize(FreeWord const& u);

  // Identity on shared identifiers; throws AlphabetError if a letter of u is
  // missing from target.
  FreeWord embed(FreeWord const& u, Alphabet const& target);

  // Textual syntax: whitespace separated tokens, `x` or `x^-1`, and `1` for
  // the empty word.  `x^n` for any nonzero integer n is accepted as shorthand.
  std::vector<SignedLetter> parse_letters(Alphabet const& alphabet,
                                          std::string_view text);
  FreeWord   parse_word(Alphabet const& alphabet, std::string_view text);
  MonoidWord parse_monoid_word(Alphabet const& alphabet, std::string_view text);

  std::string to_string(Alphabet const& alphabet,
                        std::span<SignedLetter const> letters);
  std::string to_string(FreeWord const& u);
  std::string to_string(MonoidWord const& u);

  void check_same_alphabet(Alphabet const& a, Alphabet const& b);

}  // namespace asph

template <>
struct std::hash<asph::FreeWord> {
  std::size_t operator()(asph::FreeWord const& w) const noexcept {
    return w.hash();
  }
};

#endif  // ASPH_WORD_HPP_
