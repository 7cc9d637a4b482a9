#ifndef ASPH_TESTS_SUPPORT_HPP_
#define ASPH_TESTS_SUPPORT_HPP_

// Shared helpers for the unit tests.  The oracles here work on plain letter
// vectors and never call into the library code they are compared against.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "asph/word.hpp"

namespace asph::test {

  // (letter, sign)
  using Raw = std::vector<std::pair<std::uint32_t, int>>;

  // Cancel adjacent inverse pairs left to right, repeated until nothing
  // changes.
  inline Raw naive_reduce(Raw w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].first == w[i + 1].first && w[i].second == -w[i + 1].second) {
          w.erase(w.begin() + static_cast<long>(i),
                  w.begin() + static_cast<long>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  inline Raw raw_of(FreeWord const& w) {
    Raw out;
    for (auto x : w.letters()) {
      out.emplace_back(x.letter, x.sign);
    }
    return out;
  }

  inline std::vector<SignedLetter> letters_of(Raw const& r) {
    std::vector<SignedLetter> out;
    for (auto [l, s] : r) {
      out.push_back({l, s});
    }
    return out;
  }

  inline Raw random_raw(std::mt19937_64& rng, std::size_t letters,
                        std::size_t max_len) {
    Raw         out;
    std::size_t n = rng() % (max_len + 1);
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(static_cast<std::uint32_t>(rng() % letters),
                       rng() % 2 == 0 ? 1 : -1);
    }
    return out;
  }

  inline FreeWord word(Alphabet const& a, std::string const& text) {
    return parse_word(a, text);
  }

  // Permutations of {0..n-1} as image vectors, composed as functions
  // applied left to right: (p * q)(i) = q[p[i]].
  using Perm = std::vector<std::size_t>;

  inline Perm compose(Perm const& p, Perm const& q) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i] = q[p[i]];
    }
    return out;
  }

  // Order of the permutation group generated by gens, by closure.
  inline std::size_t closure_order(std::vector<Perm> const& gens) {
    std::vector<Perm> seen{Perm(gens.front().size())};
    for (std::size_t i = 0; i < seen[0].size(); ++i) {
      seen[0][i] = i;
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
      for (auto const& g : gens) {
        Perm next = compose(seen[k], g);
        bool have = false;
        for (auto const& s : seen) {
          have = have || s == next;
        }
        if (!have) {
          seen.push_back(next);
        }
      }
    }
    return seen.size();
  }

}  // namespace asph::test

#endif  // ASPH_TESTS_SUPPORT_HPP_
