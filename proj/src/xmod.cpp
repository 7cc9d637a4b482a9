#include "asph/xmod.hpp"

#include <algorithm>

#include "asph/error.hpp"

namespace asph {

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  ReducibleFixture::ReducibleFixture(GroupPresentation big, std::string_view z)
      : _big(std::move(big)),
        _rho(solve_single_occurrence(_big, z)),
        _small(subpresentation(_big, _rho)),
        _source(_big.relator_index(_rho.source_relator())) {
    for (std::size_t i = 0; i < _big.size(); ++i) {
      if (i == _source) {
        _to_small.push_back(std::nullopt);
      } else {
        _to_small.push_back(_to_big.size());
        _to_big.push_back(i);
      }
    }
  }

  std::size_t ReducibleFixture::small_relator(std::size_t big_rel) const {
    if (big_rel >= _to_small.size() || !_to_small[big_rel]) {
      throw Error("relator #" + std::to_string(big_rel)
                  + " has no counterpart in the small presentation");
    }
    return *_to_small[big_rel];
  }

  std::size_t ReducibleFixture::big_relator(std::size_t small_rel) const {
    return _to_big.at(small_rel);
  }

  ReducibleFixture make_fixture(PresentationFile const& file) {
    auto const* gp = std::get_if<GroupPresentation>(&file.presentation);
    if (gp == nullptr) {
      throw Error("fixture must be a group presentation");
    }
    if (!file.eliminate) {
      throw Error("fixture has no eliminate directive");
    }
    return ReducibleFixture(*gp, *file.eliminate);
  }

  ReducibleFixture read_fixture(std::string const& path) {
    return make_fixture(read_presentation_file(path));
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups and crossed modules
  ////////////////////////////////////////////////////////////////////////

  ComputableGroup ComputableGroup::free(Alphabet alphabet) {
    ComputableGroup G;
    G._kind     = Kind::Free;
    G._alphabet = std::move(alphabet);
    return G;
  }

  ComputableGroup ComputableGroup::kernel(Retraction rho) {
    ComputableGroup G;
    G._kind     = Kind::Kernel;
    G._alphabet = rho.big();
    G._rho      = std::move(rho);
    return G;
  }

  bool ComputableGroup::member(FreeWord const& w) const {
    if (!(w.alphabet() == _alphabet)) {
      return false;
    }
    return _kind == Kind::Free || _rho->in_kernel(w);
  }

  CrossedModule conjugation_xmod(Retraction const& rho) {
    CrossedModule X;
    X.T        = ComputableGroup::kernel(rho);
    X.G        = ComputableGroup::free(rho.big());
    X.boundary = [](FreeWord const& t) { return t; };
    X.action   = [](FreeWord const& g, FreeWord const& t) {
      return conjugate(g, t);
    };
    return X;
  }

  void CheckReport::record(bool pass, std::string const& what) {
    ++samples;
    if (!pass) {
      if (failures == 0) {
        first_failure = what;
      }
      ++failures;
    }
  }

  CheckReport check_cm1(CrossedModule const&         X,
                        std::vector<FreeWord> const& gs,
                        std::vector<FreeWord> const& ts) {
    CheckReport report;
    for (std::size_t i = 0; i < gs.size() && i < ts.size(); ++i) {
      auto const& g  = gs[i];
      auto const& t  = ts[i];
      auto        gt = X.action(g, t);
      report.record(X.T.member(gt)
                        && X.boundary(gt) == conjugate(g, X.boundary(t)),
                    "g = " + to_string(g) + ", t = " + to_string(t));
    }
    return report;
  }

  CheckReport check_cm2(CrossedModule const&         X,
                        std::vector<FreeWord> const& ts) {
    CheckReport report;
    for (std::size_t i = 0; i + 1 < ts.size(); i += 2) {
      auto const& t  = ts[i];
      auto const& t2 = ts[i + 1];
      report.record(X.action(X.boundary(t), t2) == conjugate(t, t2),
                    "t = " + to_string(t) + ", t' = " + to_string(t2));
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derivations
  ////////////////////////////////////////////////////////////////////////

  Derivation trivial_derivation(Alphabet const& big) {
    return Derivation(
        big, [big](FreeWord const&) { return FreeWord(big); }, "1");
  }

  namespace {

    Derivation inner_by(ReducibleFixture const& fx,
                        FreeWord                g,
                        std::string             label) {
      Retraction const rho = fx.rho();
      return Derivation(
          rho.big(),
          [rho, g = std::move(g)](FreeWord const& n) {
            if (!rho.in_kernel(n)) {
              throw PreconditionError("argument " + to_string(n)
                                      + " is not in N0");
            }
            FreeWord out = conjugate(g, n) * invert(n);
            if (!rho.in_kernel(out)) {
              throw InvariantError("derivation value " + to_string(out)
                                   + " left N0");
            }
            return out;
          },
          std::move(label));
    }

    FreeWord lift(ReducibleFixture const& fx, FreeWord const& u) {
      if (u.alphabet() == fx.rho().big()) {
        if (std::any_of(u.letters().begin(), u.letters().end(),
                           [&](SignedLetter x) {
                             return x.letter == fx.rho().eliminated();
                           })) {
          throw PreconditionError("word " + to_string(u)
                                  + " involves the eliminated generator");
        }
        return u;
      }
      return fx.rho().embed(u);
    }

  }  // namespace

  Derivation eta(ReducibleFixture const& fx,
                 FreeWord const&         u,
                 std::size_t             small_rel,
                 int                     sign) {
    auto const& r  = fx.small().relator(small_rel).word;
    FreeWord    uu = lift(fx, u);
    FreeWord    g  = conjugate(uu, fx.rho().embed(sign > 0 ? r : invert(r)));
    return inner_by(fx,
                    std::move(g),
                    "eta(" + to_string(u) + ", "
                        + fx.small().relator(small_rel).name + ", "
                        + std::to_string(sign) + ")");
  }

  Derivation eta_sequence(ReducibleFixture const& fx, YSequence const& m) {
    return inner_by(fx,
                    fx.rho().embed(boundary(fx.small(), m)),
                    "eta" + to_string(fx.small(), m));
  }

  Derivation compose_derivations(Derivation const& d1, Derivation const& d2) {
    return Derivation(
        d1.alphabet(),
        [d1, d2](FreeWord const& x) {
          FreeWord d2x = d2(x);
          return d1(d2x * x) * d2x;
        },
        d1.label() + "*" + d2.label());
  }

  Derivation compose_derivations_alt(Derivation const& d1,
                                     Derivation const& d2) {
    return Derivation(
        d1.alphabet(),
        [d1, d2](FreeWord const& x) {
          FreeWord d2x = d2(x);
          return d1(d2x) * d2x * d1(x);
        },
        d1.label() + "*'" + d2.label());
  }

  bool derivation_law_holds(Derivation const& d,
                            FreeWord const&   x,
                            FreeWord const&   y) {
    return d(x * y) == d(x) * conjugate(x, d(y));
  }

  AutPair sigma_tau_unchecked(Derivation const& d) {
    AutPair out;
    out.sigma = [d](FreeWord const& x) { return d(x) * x; };
    out.tau   = [d](FreeWord const& t) { return d(t) * t; };
    return out;
  }

  AutPair sigma_tau(Derivation const&            d,
                    Derivation const&            inverse,
                    std::vector<FreeWord> const& samples) {
    auto a = sigma_tau_unchecked(d);
    auto b = sigma_tau_unchecked(inverse);
    for (auto const& x : samples) {
      if (a.sigma(b.sigma(x)) != x || b.sigma(a.sigma(x)) != x
          || a.tau(b.tau(x)) != x || b.tau(a.tau(x)) != x) {
        throw NonRegularError(d.label() + " is not inverted by "
                              + inverse.label() + " at " + to_string(x));
      }
    }
    return a;
  }

  AutPair rho_aut(ReducibleFixture const& fx, FreeWord const& u) {
    FreeWord uu = lift(fx, u);
    AutPair  out;
    out.tau   = [uu](FreeWord const& t) { return conjugate(uu, t); };
    out.sigma = out.tau;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random material
  ////////////////////////////////////////////////////////////////////////

  FreeWord random_word(Alphabet const&                 alphabet,
                       std::mt19937_64&                rng,
                       std::size_t                     max_length,
                       std::vector<std::size_t> const& letters) {
    std::vector<SignedLetter> raw(rng() % (max_length + 1));
    for (auto& x : raw) {
      x.letter = static_cast<std::uint32_t>(
          letters.empty() ? rng() % alphabet.size()
                          : letters[rng() % letters.size()]);
      x.sign = rng() % 2 == 0 ? 1 : -1;
    }
    return FreeWord(alphabet, raw);
  }

  FreeWord random_kernel_element(ReducibleFixture const& fx,
                                 std::mt19937_64&        rng) {
    auto const& w     = fx.rho().source_word();
    std::size_t terms = 1 + rng() % 2;
    FreeWord    out(fx.rho().big());
    for (std::size_t i = 0; i < terms; ++i) {
      FreeWord u = random_word(fx.rho().big(), rng, 3);
      out        = out * conjugate(u, rng() % 2 == 0 ? w : invert(w));
    }
    return out;
  }

  CheckReport check_actor_diagram(ReducibleFixture const&    fx,
                                  ActorDiagramOptions const& opts) {
    CheckReport     report;
    std::mt19937_64 rng(opts.seed);
    if (fx.small().size() == 0) {
      return report;
    }
    for (std::size_t i = 0; i < opts.samples; ++i) {
      FreeWord    u    = random_word(fx.small().alphabet(), rng, 2);
      std::size_t r    = rng() % fx.small().size();
      int         sign = rng() % 2 == 0 ? 1 : -1;
      FreeWord    n0   = random_kernel_element(fx, rng);
      FreeWord    m    = random_kernel_element(fx, rng);
      auto        pair = sigma_tau_unchecked(eta(fx, u, r, opts.perturb ? -sign : sign));
      auto const& rr   = fx.small().relator(r).word;
      auto rho = rho_aut(fx, conjugate(u, sign > 0 ? rr : invert(rr)));
      report.record(pair.tau(n0) == rho.tau(n0) && pair.sigma(m) == rho.sigma(m),
                    "u = " + to_string(u) + ", r = "
                        + fx.small().relator(r).name + ", n0 = "
                        + to_string(n0));
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // The semidirect product and the projection
  ////////////////////////////////////////////////////////////////////////

  TMPair semidirect_action(ReducibleFixture const& fx,
                           FreeWord const&         g,
                           FreeWord const&         p,
                           TMPair const&           tm) {
    auto const& rho = fx.rho();
    for (auto const* w : {&g, &tm.t}) {
      if (!rho.in_kernel(*w)) {
        throw PreconditionError(to_string(*w) + " is not in N0");
      }
    }
    check_same_alphabet(p.alphabet(), rho.small());
    FreeWord  pp = rho.embed(p);
    YSequence pm = conjugate_sequence(p, tm.m);
    FreeWord  correction = eta_sequence(fx, pm)(g);
    return {g * conjugate(pp, tm.t) * invert(g) * invert(correction),
            std::move(pm)};
  }

  std::pair<FreeWord, FreeWord>
  semidirect_product(ReducibleFixture const&              fx,
                     std::pair<FreeWord, FreeWord> const& a,
                     std::pair<FreeWord, FreeWord> const& b) {
    return {a.first * conjugate(fx.rho().embed(a.second), b.first),
            a.second * b.second};
  }

  FreeWord p_map(Retraction const& rho, FreeWord const& u0, FreeWord const& u1) {
    if (!rho.in_kernel(u0)) {
      throw InvariantError(to_string(u0) + " is not in N0");
    }
    return u0 * rho.embed(u1);
  }

  TMPair psi_symbol(ReducibleFixture const& fx, YSymbol const& s) {
    check_symbol(fx.big(), s);
    auto const& rho = fx.rho();
    if (s.rel == fx.source_relator()) {
      return {symbol_boundary(fx.big(), s), {}};
    }
    auto [u0, u1]    = decompose(rho, s.conj);
    std::size_t r    = fx.small_relator(s.rel);
    auto const& word = fx.big().relator(s.rel).word;
    FreeWord    X    = conjugate(rho.embed(u1), s.sign > 0 ? word : invert(word));
    FreeWord    t    = conjugate(u0, X) * invert(X);
    if (!rho.in_kernel(t)) {
      throw InvariantError("first component " + to_string(t)
                           + " is not in N0");
    }
    return {std::move(t), {YSymbol{r, std::move(u1), s.sign}}};
  }

  TMPair project_identity_sequence(ReducibleFixture const& fx,
                                   YSequence const&        d) {
    if (!is_identity(fx.big(), d)) {
      throw PreconditionError("not an identity sequence");
    }
    auto const& rho = fx.rho();
    TMPair      acc{FreeWord(rho.big()), {}};
    FreeWord    theta(rho.small());  // boundary of acc.m
    for (auto const& s : d) {
      auto [t, m] = psi_symbol(fx, s);
      acc.t       = acc.t * conjugate(rho.embed(theta), t);
      theta       = theta * boundary(fx.small(), m);
      acc.m.insert(acc.m.end(), m.begin(), m.end());
    }
    if (!acc.t.empty()) {
      throw InvariantError("N0 component " + to_string(acc.t)
                           + " does not vanish");
    }
    return acc;
  }

}  // namespace asph
