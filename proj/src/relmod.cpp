#include "asph/relmod.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace asph {

  Equality FreeOracle::equal(FreeWord const& u, FreeWord const& v) const {
    check_same_alphabet(u.alphabet(), _alphabet);
    check_same_alphabet(v.alphabet(), _alphabet);
    return u == v ? Equality::Equal : Equality::NotEqual;
  }

  CosetOracle::CosetOracle(GroupPresentation const& gp, std::size_t budget) {
    auto result = coset_enumeration(gp, {}, budget);
    if (result.exhausted()) {
      throw PreconditionError("coset enumeration of " + gp.name()
                              + " exhausted its budget");
    }
    _table = std::move(result.table);
  }

  Equality CosetOracle::equal(FreeWord const& u, FreeWord const& v) const {
    return _table->trace(0, u) == _table->trace(0, v) ? Equality::Equal
                                                      : Equality::NotEqual;
  }

  std::optional<FreeWord> CosetOracle::canon(FreeWord const& u) const {
    return _table->representative(_table->trace(0, u));
  }

  AbelianOracle::AbelianOracle(GroupPresentation const& gp)
      : _alphabet(gp.alphabet()) {
    std::vector<std::vector<long>> rows;
    for (auto const& r : gp.relators()) {
      rows.push_back(abelianize(r.word));
    }
    std::size_t const n    = _alphabet.size();
    std::size_t       next = 0;
    for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
      // Euclid on the column until one row below `next` is nonzero there
      while (true) {
        std::size_t best = rows.size();
        for (std::size_t i = next; i < rows.size(); ++i) {
          if (rows[i][col] != 0
              && (best == rows.size()
                  || std::labs(rows[i][col]) < std::labs(rows[best][col]))) {
            best = i;
          }
        }
        if (best == rows.size()) {
          break;
        }
        std::swap(rows[next], rows[best]);
        bool done = true;
        for (std::size_t i = next + 1; i < rows.size(); ++i) {
          long q = rows[i][col] / rows[next][col];
          if (q != 0) {
            for (std::size_t c = 0; c < n; ++c) {
              rows[i][c] -= q * rows[next][c];
            }
          }
          if (rows[i][col] != 0) {
            done = false;
          }
        }
        if (done) {
          if (rows[next][col] < 0) {
            for (auto& x : rows[next]) {
              x = -x;
            }
          }
          _echelon.push_back(rows[next]);
          _pivots.push_back(col);
          ++next;
          break;
        }
      }
    }
  }

  bool AbelianOracle::in_relator_lattice(std::vector<long> v) const {
    for (std::size_t i = 0; i < _echelon.size(); ++i) {
      long p = _echelon[i][_pivots[i]];
      if (v[_pivots[i]] % p != 0) {
        return false;
      }
      long q = v[_pivots[i]] / p;
      for (std::size_t c = 0; c < v.size(); ++c) {
        v[c] -= q * _echelon[i][c];
      }
    }
    for (long x : v) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  Equality AbelianOracle::equal(FreeWord const& u, FreeWord const& v) const {
    check_same_alphabet(u.alphabet(), _alphabet);
    check_same_alphabet(v.alphabet(), _alphabet);
    if (u == v) {
      return Equality::Equal;
    }
    auto a = abelianize(u), b = abelianize(v);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] -= b[i];
    }
    return in_relator_lattice(std::move(a)) ? Equality::Unknown
                                            : Equality::NotEqual;
  }

  std::unique_ptr<GroupOracle> make_oracle(std::string_view         kind,
                                           GroupPresentation const& gp,
                                           std::size_t              budget) {
    if (kind == "free") {
      return std::make_unique<FreeOracle>(gp.alphabet());
    }
    if (kind == "cosets") {
      return std::make_unique<CosetOracle>(gp, budget);
    }
    if (kind == "abelian") {
      return std::make_unique<AbelianOracle>(gp);
    }
    throw Error("unknown oracle '" + std::string(kind) + "'");
  }

  long RelModElement::coefficient(RelModKey const& k) const {
    auto it = _terms.find(k);
    return it == _terms.end() ? 0 : it->second;
  }

  void RelModElement::add(RelModKey const& k, long c) {
    if (c == 0) {
      return;
    }
    auto [it, fresh] = _terms.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  RelModElement& RelModElement::operator+=(RelModElement const& that) {
    for (auto const& [k, c] : that._terms) {
      add(k, c);
    }
    return *this;
  }

  RelModElement& RelModElement::operator-=(RelModElement const& that) {
    for (auto const& [k, c] : that._terms) {
      add(k, -c);
    }
    return *this;
  }

  RelModElement RelModElement::operator*(long c) const {
    RelModElement out;
    for (auto const& [k, x] : _terms) {
      out.add(k, x * c);
    }
    return out;
  }

  RelModElement basis_element(FreeWord rep, std::size_t rel) {
    RelModElement out;
    out.add({std::move(rep), rel}, 1);
    return out;
  }

  namespace {

    // Relator names when the presentation is at hand, indices otherwise.
    std::string key_string(GroupPresentation const* gp, RelModKey const& k) {
      return "(" + to_string(k.rep) + ")."
             + (gp ? gp->relator(k.rel).name : "#" + std::to_string(k.rel));
    }

    // Adds c to the class of (rep, rel), canonicalizing or merging with an
    // existing key through the oracle.
    void merge_into(RelModElement&            e,
                    FreeWord const&           rep,
                    std::size_t               rel,
                    long                      c,
                    GroupOracle const&        oracle,
                    GroupPresentation const*  gp,
                    std::vector<std::string>& undecided) {
      if (auto canon = oracle.canon(rep)) {
        e.add({std::move(*canon), rel}, c);
        return;
      }
      std::optional<RelModKey> target;
      for (auto const& [k, x] : e.terms()) {
        if (k.rel != rel) {
          continue;
        }
        auto eq = oracle.equal(k.rep, rep);
        if (eq == Equality::Equal) {
          target = k;
          break;
        }
        if (eq == Equality::Unknown) {
          undecided.push_back(key_string(gp, k) + " vs "
                              + key_string(gp, {rep, rel}));
        }
      }
      e.add(target ? *target : RelModKey{rep, rel}, c);
    }

    void throw_if_undecided(std::vector<std::string> undecided) {
      if (!undecided.empty()) {
        throw PartialResultError("oracle could not decide equality of keys",
                                 std::move(undecided));
      }
    }

  }  // namespace

  RelModElement gamma_image(GroupPresentation const& gp,
                            YSequence const&         d,
                            GroupOracle const&       oracle,
                            bool                     signed_gamma) {
    check_same_alphabet(oracle.alphabet(), gp.alphabet());
    RelModElement            out;
    std::vector<std::string> undecided;
    for (auto const& s : d) {
      check_symbol(gp, s);
      merge_into(out, s.conj, s.rel, signed_gamma ? s.sign : 1, oracle,
                 &gp, undecided);
    }
    throw_if_undecided(std::move(undecided));
    return out;
  }

  RelModElement module_action(FreeWord const&      w,
                              RelModElement const& e,
                              GroupOracle const&   oracle) {
    check_same_alphabet(w.alphabet(), oracle.alphabet());
    RelModElement            out;
    std::vector<std::string> undecided;
    FreeWord const           wi = invert(w);
    for (auto const& [k, c] : e.terms()) {
      merge_into(out, wi * k.rep, k.rel, c, oracle, nullptr, undecided);
    }
    throw_if_undecided(std::move(undecided));
    return out;
  }

  Answer is_zero(RelModElement const& e, GroupOracle const& oracle) {
    std::vector<RelModKey> keys;
    std::vector<long>      coef;
    for (auto const& [k, c] : e.terms()) {
      keys.push_back(k);
      coef.push_back(c);
    }
    std::size_t const        n = keys.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) {
        i = parent[i] = parent[parent[i]];
      }
      return i;
    };
    // eq[i][j] for i < j over keys of one relator
    std::vector<std::vector<Equality>> eq(n, std::vector<Equality>(n, Equality::NotEqual));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (keys[i].rel != keys[j].rel) {
          continue;
        }
        eq[i][j] = eq[j][i] = oracle.equal(keys[i].rep, keys[j].rep);
        if (eq[i][j] == Equality::Equal) {
          parent[find(i)] = find(j);
        }
      }
    }
    std::vector<long> total(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      total[find(i)] += coef[i];
    }
    bool all_zero = true, separated_nonzero = false;
    for (std::size_t root = 0; root < n; ++root) {
      if (find(root) != root || total[root] == 0) {
        continue;
      }
      all_zero = false;
      // a class is certainly distinct from another once one pair differs
      bool separated = true;
      for (std::size_t other = 0; other < n && separated; ++other) {
        if (find(other) != other || other == root) {
          continue;
        }
        bool differs = false;
        for (std::size_t i = 0; i < n && !differs; ++i) {
          for (std::size_t j = 0; j < n && !differs; ++j) {
            if (find(i) == root && find(j) == other
                && eq[i][j] == Equality::NotEqual) {
              differs = true;
            }
          }
        }
        separated = differs;
      }
      if (separated) {
        separated_nonzero = true;
      }
    }
    if (all_zero) {
      return Answer::Yes;
    }
    return separated_nonzero ? Answer::No : Answer::Unknown;
  }

  std::string to_string(GroupPresentation const& gp, RelModElement const& e) {
    if (e.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [k, c] : e.terms()) {
      if (!out.empty()) {
        out += " ";
      }
      out += (c > 0 ? "+" : "") + std::to_string(c) + " (" + to_string(k.rep)
             + ")." + (k.rel < gp.size() ? gp.relator(k.rel).name : "?");
    }
    return out;
  }

}  // namespace asph
