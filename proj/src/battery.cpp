#include "asph/battery.hpp"

#include <cmath>
#include <filesystem>
#include <random>

#include "asph/coset.hpp"
#include "asph/oracle.hpp"
#include "asph/peiffer.hpp"
#include "asph/relmod.hpp"

namespace asph {

  void BatteryResult::record(bool pass, std::string const& what) {
    ++samples;
    if (!pass) {
      if (failures == 0) {
        first_failure = what;
      }
      ++failures;
    }
  }

  bool passes(BatteryResult const& r) {
    if (r.failures != 0) {
      return false;
    }
    if (r.control_detected && !*r.control_detected) {
      return false;
    }
    return static_cast<double>(r.successes)
           >= r.required_rate * static_cast<double>(r.samples) - 1e-9;
  }

  json to_json(BatteryResult const& r) {
    json out{{"name", r.name},
             {"samples", r.samples},
             {"failures", r.failures}};
    if (r.required_rate > 0) {
      out["successes"]     = r.successes;
      out["required_rate"] = r.required_rate;
    }
    if (r.control_detected) {
      out["control_detected"] = *r.control_detected;
    }
    if (!r.first_failure.empty()) {
      out["first_failure"] = r.first_failure;
    }
    if (!r.detail.empty()) {
      out["detail"] = r.detail;
    }
    out["pass"] = passes(r);
    return out;
  }

  Fixtures load_fixtures(std::string const& dir) {
    namespace fs = std::filesystem;
    fs::path root(dir);
    auto     need = [&](fs::path const& p) {
      if (!fs::exists(p)) {
        throw MissingFixtureError("missing fixture " + p.string());
      }
      return p.string();
    };
    json manifest = read_json_file(need(root / "suite.json"));

    Fixtures out;
    try {
      for (auto const& f : manifest.at("soundness")) {
        auto file = read_presentation_file(need(root / f.get<std::string>()));
        out.soundness.push_back(std::get<GroupPresentation>(file.presentation));
      }
      for (auto const& f : manifest.at("reducible")) {
        auto path = need(root / f.get<std::string>());
        out.reducible.emplace_back(fs::path(path).stem().string(),
                                   read_fixture(path));
      }
      auto fq = read_presentation_file(
          need(root / manifest.at("finite_quotient").get<std::string>()));
      out.finite_quotient = std::get<GroupPresentation>(fq.presentation);
      fs::path mdir = need(root / manifest.at("monoids").get<std::string>());
      std::vector<fs::path> files;
      for (auto const& e : fs::directory_iterator(mdir)) {
        if (e.path().extension() == ".json") {
          files.push_back(e.path());
        }
      }
      std::sort(files.begin(), files.end());
      for (auto const& p : files) {
        try {
          out.monoids.emplace_back(p.stem().string(),
                                   read_monoid_file(p.string()));
        } catch (Error const& e) {
          throw Error(p.filename().string() + ": " + e.what());
        }
      }
    } catch (json::exception const& e) {
      throw Error(std::string("malformed suite manifest: ") + e.what());
    } catch (std::bad_variant_access const&) {
      throw Error("suite fixture is not a group presentation");
    }
    return out;
  }

  namespace {

    BatteryResult named(std::string name) {
      BatteryResult r;
      r.name = std::move(name);
      return r;
    }

    YSymbol random_symbol(GroupPresentation const& gp,
                          std::mt19937_64&         rng,
                          std::size_t              max_conj = 2) {
      YSymbol s;
      s.rel  = rng() % gp.size();
      s.conj = random_word(gp.alphabet(), rng, max_conj);
      s.sign = rng() % 2 == 0 ? 1 : -1;
      return s;
    }

    YSequence random_sequence(GroupPresentation const& gp,
                              std::mt19937_64&         rng,
                              std::size_t              min_length,
                              std::size_t              max_length) {
      YSequence   d;
      std::size_t len = min_length + rng() % (max_length - min_length + 1);
      for (std::size_t i = 0; i < len; ++i) {
        d.push_back(random_symbol(gp, rng));
      }
      return d;
    }

    // Negative controls always see at least this many samples.
    constexpr std::size_t kControlSamples = 50;

    std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
      return seed * 0x9E3779B97F4A7C15ULL + salt;
    }

    std::string describe(GroupPresentation const& gp, YSequence const& d) {
      return gp.name() + " " + to_string(gp, d);
    }

    std::vector<std::pair<std::string, FiniteMonoid>> const*
    small_only(std::vector<std::pair<std::string, FiniteMonoid>> const& all,
               std::size_t                                              max_size,
               std::vector<std::pair<std::string, FiniteMonoid>>&       keep) {
      for (auto const& m : all) {
        if (m.second.size() <= max_size) {
          keep.push_back(m);
        }
      }
      return &keep;
    }

    bool subset(std::vector<std::size_t> const& a,
                std::vector<std::size_t> const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    std::string subset_string(std::vector<std::size_t> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
      }
      return out + "}";
    }

    // A Y1-sequence over the small presentation.
    YSequence random_small_sequence(ReducibleFixture const& fx,
                                    std::mt19937_64&        rng,
                                    std::size_t             max_length) {
      YSequence   m;
      std::size_t len = rng() % (max_length + 1);
      for (std::size_t i = 0; i < len; ++i) {
        m.push_back(random_symbol(fx.small(), rng));
      }
      return m;
    }

  }  // namespace

  namespace battery {

    BatteryResult boundary_invariance(std::vector<GroupPresentation> const& gps,
                                      std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("peiffer.boundary_invariance");
      std::mt19937_64 rng(mix(seed, 1));
      std::size_t     by_kind[4] = {0, 0, 0, 0};
      for (std::size_t i = 0; i < n; ++i) {
        auto const& gp = gps[i % gps.size()];
        // half identity sequences from scrambles, half arbitrary sequences
        YSequence d = i % 2 == 0
                          ? scramble(gp, rng(), rng() % 7).sequence
                          : random_sequence(gp, rng, 0, 6);
        auto moves = legal_moves(gp, d, {random_symbol(gp, rng)});
        Move m     = moves[rng() % moves.size()];
        ++by_kind[static_cast<int>(m.kind)];
        auto        after = apply_move(gp, d, m);
        std::size_t expected =
            m.kind == MoveKind::Insert   ? d.size() + 2
            : m.kind == MoveKind::Delete ? d.size() - 2
                                         : d.size();
        r.record(boundary(gp, after) == boundary(gp, d)
                     && after.size() == expected,
                 describe(gp, d) + " " + to_string(m.kind) + " at "
                     + std::to_string(m.pos));
      }
      r.detail = {{"ExchangeL", by_kind[0]},
                  {"ExchangeR", by_kind[1]},
                  {"Delete", by_kind[2]},
                  {"Insert", by_kind[3]}};
      return r;
    }

    BatteryResult exchange_involution(std::vector<GroupPresentation> const& gps,
                                      std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("peiffer.exchange_involution");
      std::mt19937_64 rng(mix(seed, 2));
      for (std::size_t i = 0; i < n; ++i) {
        auto const& gp  = gps[i % gps.size()];
        YSequence   d   = random_sequence(gp, rng, 2, 6);
        std::size_t pos = rng() % (d.size() - 1);
        Move        L{MoveKind::ExchangeL, pos, std::nullopt};
        Move        R{MoveKind::ExchangeR, pos, std::nullopt};
        bool ok = apply_move(gp, apply_move(gp, d, L), R) == d
                  && apply_move(gp, apply_move(gp, d, R), L) == d;
        r.record(ok, describe(gp, d) + " at " + std::to_string(pos));
      }
      return r;
    }

    BatteryResult conjugation_action(std::vector<GroupPresentation> const& gps,
                                     std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("peiffer.conjugation_action");
      std::mt19937_64 rng(mix(seed, 3));
      for (std::size_t i = 0; i < n; ++i) {
        auto const& gp = gps[i % gps.size()];
        YSequence   d  = random_sequence(gp, rng, 0, 5);
        FreeWord    v  = random_word(gp.alphabet(), rng, 4);
        FreeWord    w  = random_word(gp.alphabet(), rng, 4);
        bool ok = conjugate_sequence(FreeWord(gp.alphabet()), d) == d
                  && conjugate_sequence(v, conjugate_sequence(w, d))
                         == conjugate_sequence(v * w, d)
                  && boundary(gp, conjugate_sequence(w, d))
                         == conjugate(w, boundary(gp, d));
        r.record(ok, describe(gp, d) + " v = " + to_string(v)
                         + " w = " + to_string(w));
      }
      return r;
    }

    BatteryResult centrality(std::vector<GroupPresentation> const& gps,
                             std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("peiffer.centrality");
      std::mt19937_64 rng(mix(seed, 4));
      SearchOptions   opts;
      opts.budget     = 64;
      opts.depth      = 4;
      opts.pool       = PoolKind::None;
      std::size_t most = 0;
      for (std::size_t i = 0; i < n; ++i) {
        auto const& gp = gps[i % gps.size()];
        YSymbol     s  = random_symbol(gp, rng);
        YSymbol     a  = random_symbol(gp, rng);
        auto        g  = insertion_generator(a);
        YSequence   left{s, g[0], g[1]};
        YSequence   right{g[0], g[1], s};
        YSequence   d = random_sequence(gp, rng, 0, 4);
        YSequence   dg = d, gd = g;
        dg.insert(dg.end(), g.begin(), g.end());
        gd.insert(gd.end(), d.begin(), d.end());
        bool ok = boundary(gp, dg) == boundary(gp, d)
                  && boundary(gp, gd) == boundary(gp, d);
        auto there = search_path(gp, left, right, opts);
        auto back  = search_path(gp, right, left, opts);
        ok         = ok && !there.exhausted() && !back.exhausted();
        if (ok) {
          most = std::max({most, there.certificate->moves.size(),
                           back.certificate->moves.size()});
          ok   = replay(gp, left, there.certificate->moves) == right
               && replay(gp, right, back.certificate->moves) == left;
        }
        r.record(ok, describe(gp, left));
      }
      r.detail = {{"node_budget", opts.budget}, {"longest_certificate", most}};
      return r;
    }

    BatteryResult scramble_recovery(std::vector<GroupPresentation> const& gps,
                                    std::size_t   seeds,
                                    std::size_t   max_k,
                                    std::size_t   budget,
                                    std::uint64_t seed) {
      BatteryResult r = named("peiffer.scramble_recovery");
      r.required_rate   = 0.95;
      std::size_t nodes = 0;
      json        misses = json::array();
      for (std::size_t i = 0; i < seeds; ++i) {
        auto const&   gp = gps[i % gps.size()];
        std::size_t   k  = 1 + i % max_k;
        std::uint64_t s  = mix(seed, 1000 + i);
        auto          sc = scramble(gp, s, k);
        SearchOptions opts;
        opts.budget = budget;
        opts.depth  = 2 * k;
        auto res    = search_trivialization(gp, sc.sequence, opts);
        nodes += res.nodes;
        if (res.exhausted()) {
          r.record(true, "");
          misses.push_back({{"presentation", gp.name()}, {"k", k}});
          continue;
        }
        bool ok = verify_certificate(gp, sc.sequence, *res.certificate).ok;
        r.record(ok, describe(gp, sc.sequence));
        if (ok) {
          ++r.successes;
        }
      }
      r.detail = {{"nodes", nodes}, {"budget", budget}, {"misses", misses}};
      return r;
    }

    BatteryResult dominion_laws(
        std::vector<std::pair<std::string, FiniteMonoid>> const& monoids,
        std::size_t                                              max_size) {
      BatteryResult r = named("actions.dominion_laws");
      std::vector<std::pair<std::string, FiniteMonoid>> keep;
      small_only(monoids, max_size, keep);
      for (auto const& [name, S] : keep) {
        for (auto const& U : all_submonoids(S)) {
          auto dom  = dominion(S, U);
          bool ok   = subset(U.elements(), dom);
          bool closed = true;
          for (auto a : dom) {
            for (auto b : dom) {
              if (!std::binary_search(dom.begin(), dom.end(), S.product(a, b))) {
                closed = false;
              }
            }
          }
          ok = ok && closed;
          if (U.size() == 1) {
            ok = ok && dom == std::vector<std::size_t>{S.identity()};
          }
          if (is_inverse_monoid(U)) {
            ok = ok && dom == U.elements();
          }
          r.record(ok, name + " U = " + subset_string(U.elements()));
        }
      }
      r.detail = {{"tables", keep.size()}, {"max_size", max_size}};
      return r;
    }

    BatteryResult tensor_agreement(
        std::vector<std::pair<std::string, FiniteMonoid>> const& monoids,
        std::size_t                                              max_size) {
      BatteryResult r = named("actions.tensor_agreement");
      std::vector<std::pair<std::string, FiniteMonoid>> keep;
      small_only(monoids, max_size, keep);
      for (auto const& [name, S] : keep) {
        for (auto const& U : all_submonoids(S)) {
          auto A  = right_regular(S, U);
          auto B  = left_regular(S, U);
          auto uf = tensor_product(A, B, U);
          std::vector<std::size_t> reversed(U.size());
          for (std::size_t i = 0; i < U.size(); ++i) {
            reversed[i] = U.size() - 1 - i;
          }
          bool ok = uf == oracle::naive_tensor_closure(A, B, U)
                    && uf == tensor_product(A, B, U, reversed);
          r.record(ok, name + " U = " + subset_string(U.elements()));
        }
      }
      r.detail = {{"tables", keep.size()}};
      return r;
    }

    BatteryResult absolute_closure(
        std::vector<std::pair<std::string, FiniteMonoid>> const& monoids,
        std::size_t                                              max_size) {
      BatteryResult r = named("actions.absolute_closure");
      std::vector<std::pair<std::string, FiniteMonoid>> keep;
      small_only(monoids, max_size, keep);
      std::size_t inverse = 0;
      for (auto const& [name, S] : keep) {
        for (auto const& U : all_submonoids(S)) {
          if (!is_inverse_monoid(U)) {
            continue;
          }
          ++inverse;
          r.record(dominion(S, U) == U.elements(),
                   name + " U = " + subset_string(U.elements()));
        }
      }
      r.detail = {{"tables", keep.size()}, {"inverse_submonoids", inverse}};
      return r;
    }

    BatteryResult wdom_consistency(
        std::vector<std::pair<std::string, FiniteMonoid>> const& monoids,
        std::size_t                                              max_size,
        std::size_t                                              cosets) {
      BatteryResult r = named("actions.wdom_consistency");
      std::vector<std::pair<std::string, FiniteMonoid>> keep;
      small_only(monoids, max_size, keep);
      std::size_t unknown = 0;
      for (auto const& [name, S] : keep) {
        for (auto const& U : all_submonoids(S)) {
          for (auto d : dominion(S, U)) {
            auto a = wdom_membership_partial(S, U, d, cosets);
            unknown += a == Answer::Unknown;
          r.record(a != Answer::No, name + " U = " + subset_string(U.elements())
                                          + " d = " + std::to_string(d));
          }
        }
      }
      r.detail = {{"unknown", unknown}};
      return r;
    }

    BatteryResult universal_group_probe(std::size_t cosets) {
      BatteryResult r = named("actions.universal_group_probe");
      // 1, a, a^2 with a^3 = a
      auto cube = validate_monoid({{0, 1, 2}, {1, 2, 1}, {2, 1, 2}}, 0);
      auto g1   = coset_enumeration(universal_group(cube), {}, cosets);
      auto c3   = parse_group_presentation("group C3\ngens a\nrel r = a^3\n");
      auto g2   = coset_enumeration(c3, {}, cosets);
      auto s3   = parse_group_presentation(
          "group S3\ngens a b\nrel r1 = a^2\nrel r2 = b^2\nrel r3 = a b a b a b\n");
      auto g3 = coset_enumeration(s3, {}, cosets);
      auto index = [](CosetResult const& c) -> json {
        return c.exhausted() ? json("exhausted") : json(c.index());
      };
      r.record(!g1.exhausted() && g1.index() == 2, "G(1,a,a^2 : a^3 = a)");
      r.record(!g2.exhausted() && g2.index() == 3, "(a | a^3)");
      r.record(!g3.exhausted() && g3.index() == 6, "(a, b | a^2, b^2, (ab)^3)");
      r.detail = {{"monoid", index(g1)}, {"cyclic3", index(g2)}, {"s3", index(g3)}};
      return r;
    }

    BatteryResult crossed_module_axioms(ReducibleFixture const& fx,
                                        std::size_t n, std::uint64_t seed) {
      BatteryResult         r = named("xmod.crossed_module_axioms");
      std::mt19937_64       rng(mix(seed, 10));
      auto                  X = conjugation_xmod(fx.rho());
      std::vector<FreeWord> gs, ts;
      for (std::size_t i = 0; i < n; ++i) {
        gs.push_back(random_word(fx.rho().big(), rng, 5));
        ts.push_back(random_kernel_element(fx, rng));
        ts.push_back(random_kernel_element(fx, rng));
      }
      std::vector<FreeWord> first(ts.begin(), ts.begin() + n);
      auto cm1 = check_cm1(X, gs, first);
      auto cm2 = check_cm2(X, ts);
      r.samples       = cm1.samples + cm2.samples;
      r.failures      = cm1.failures + cm2.failures;
      r.first_failure = !cm1.ok() ? cm1.first_failure : cm2.first_failure;
      return r;
    }

    BatteryResult eta_derivation_law(ReducibleFixture const& fx,
                                     std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("xmod.eta_derivation_law");
      std::mt19937_64 rng(mix(seed, 11));
      bool            control = false;
      for (std::size_t i = 0; i < std::max(n, kControlSamples); ++i) {
        FreeWord    u    = random_word(fx.small().alphabet(), rng, 2);
        std::size_t rel  = rng() % fx.small().size();
        int         sign = rng() % 2 == 0 ? 1 : -1;
        FreeWord    x    = random_kernel_element(fx, rng);
        FreeWord    y    = random_kernel_element(fx, rng);
        auto        d    = eta(fx, u, rel, sign);
        if (i < n) {
          r.record(derivation_law_holds(d, x, y),
                   d.label() + " x = " + to_string(x) + " y = " + to_string(y));
        }
        // n -> n^-1 g n g^-1 satisfies the law for the opposite action only
        auto const& rw = fx.small().relator(rel).word;
        FreeWord    g  = conjugate(fx.rho().embed(u), fx.rho().embed(sign > 0 ? rw : invert(rw)));
        Derivation bad(fx.rho().big(),
                       [g](FreeWord const& m) {
                         return invert(m) * conjugate(g, m);
                       },
                       "perturbed");
        control = control || !derivation_law_holds(bad, x, y);
      }
      r.control_detected = control;
      return r;
    }

    BatteryResult eta_regularity(ReducibleFixture const& fx,
                                 std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("xmod.eta_regularity");
      std::mt19937_64 rng(mix(seed, 12));
      bool            control = false;
      for (std::size_t i = 0; i < std::max(n, kControlSamples); ++i) {
        FreeWord    u   = random_word(fx.small().alphabet(), rng, 2);
        std::size_t rel = rng() % fx.small().size();
        FreeWord    x   = random_kernel_element(fx, rng);
        auto        pos = eta(fx, u, rel, 1);
        auto        neg = eta(fx, u, rel, -1);
        bool        ok  = compose_derivations(pos, neg)(x).empty()
                  && compose_derivations(neg, pos)(x).empty();
        try {
          auto st = sigma_tau(pos, neg, {x});
          ok      = ok && st.sigma(x) == pos(x) * x && st.tau(x) == pos(x) * x;
        } catch (NonRegularError const&) {
          ok = false;
        }
        if (i < n) {
          r.record(ok, pos.label() + " x = " + to_string(x));
        }
        control = control || !compose_derivations(pos, pos)(x).empty();
      }
      r.control_detected = control;
      return r;
    }

    BatteryResult composition_agreement(ReducibleFixture const& fx,
                                        std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("xmod.composition_agreement");
      std::mt19937_64 rng(mix(seed, 13));
      bool            control = false;
      auto            triv    = trivial_derivation(fx.rho().big());
      for (std::size_t i = 0; i < std::max(n, kControlSamples); ++i) {
        auto d1 = eta(fx, random_word(fx.small().alphabet(), rng, 2),
                      rng() % fx.small().size(), rng() % 2 == 0 ? 1 : -1);
        auto d2 = eta(fx, random_word(fx.small().alphabet(), rng, 2),
                      rng() % fx.small().size(), rng() % 2 == 0 ? 1 : -1);
        FreeWord x     = random_kernel_element(fx, rng);
        FreeWord first = compose_derivations(d1, d2)(x);
        bool     ok    = first == compose_derivations_alt(d1, d2)(x)
                  && compose_derivations(d1, triv)(x) == d1(x)
                  && compose_derivations(triv, d1)(x) == d1(x);
        if (i < n) {
          r.record(ok, d1.label() + " " + d2.label() + " x = " + to_string(x));
        }
        // d2(sigma1(x)) d1(x): the factors taken in the wrong order
        FreeWord swapped = d2(d1(x) * x) * d1(x);
        control          = control || swapped != first;
      }
      r.control_detected = control;
      return r;
    }

    BatteryResult actor_diagram(ReducibleFixture const& fx,
                                std::size_t n, std::uint64_t seed) {
      BatteryResult       r = named("xmod.actor_diagram");
      ActorDiagramOptions opts{n, mix(seed, 14), false};
      auto                good = check_actor_diagram(fx, opts);
      opts.perturb             = true;
      opts.samples             = std::max(n, kControlSamples);
      auto bad                 = check_actor_diagram(fx, opts);
      r.samples                = good.samples;
      r.failures               = good.failures;
      r.first_failure          = good.first_failure;
      r.control_detected       = bad.failures > 0;
      return r;
    }

    BatteryResult semidirect_action_laws(ReducibleFixture const& fx,
                                         std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("xmod.semidirect_action_laws");
      std::mt19937_64 rng(mix(seed, 15));
      bool            control = false;
      auto const&     rho     = fx.rho();
      FreeWord const  one_big(rho.big()), one_small(rho.small());
      // the action with the inverse on the eta term dropped
      auto bad_action = [&](FreeWord const& g, FreeWord const& p, TMPair const& tm) {
        YSequence pm = conjugate_sequence(p, tm.m);
        return TMPair{g * conjugate(rho.embed(p), tm.t) * invert(g)
                          * eta_sequence(fx, pm)(g),
                      pm};
      };
      for (std::size_t i = 0; i < std::max(n, kControlSamples); ++i) {
        FreeWord g  = random_kernel_element(fx, rng);
        FreeWord g2 = random_kernel_element(fx, rng);
        FreeWord p  = random_word(rho.small(), rng, 3);
        FreeWord p2 = random_word(rho.small(), rng, 3);
        TMPair   tm{random_kernel_element(fx, rng), random_small_sequence(fx, rng, 3)};
        bool     ok = semidirect_action(fx, one_big, one_small, tm) == tm;
        auto     gp = semidirect_product(fx, {g, p}, {g2, p2});
        auto     lhs = semidirect_action(fx, g, p, semidirect_action(fx, g2, p2, tm));
        auto     rhs = semidirect_action(fx, gp.first, gp.second, tm);
        ok           = ok && lhs == rhs;
        if (i < n) {
          r.record(ok, "g = " + to_string(g) + " p = " + to_string(p)
                           + " t = " + to_string(tm.t));
        }
        auto blhs = bad_action(g, p, bad_action(g2, p2, tm));
        auto brhs = bad_action(gp.first, gp.second, tm);
        control   = control || !(blhs == brhs);
      }
      r.control_detected = control;
      return r;
    }

    BatteryResult decomposition_round_trip(ReducibleFixture const& fx,
                                           std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("xmod.decomposition_round_trip");
      std::mt19937_64 rng(mix(seed, 16));
      auto const&     rho = fx.rho();
      for (std::size_t i = 0; i < n; ++i) {
        FreeWord u    = random_word(rho.big(), rng, 8);
        auto     dec  = decompose(rho, u);
        bool     ok   = rho.in_kernel(dec.u0) && p_map(rho, dec.u0, dec.u1) == u;
        FreeWord u0   = random_kernel_element(fx, rng);
        FreeWord u1   = random_word(rho.small(), rng, 5);
        auto     back = decompose(rho, p_map(rho, u0, u1));
        ok            = ok && back.u0 == u0 && back.u1 == u1;
        r.record(ok, "u = " + to_string(u) + " (u0, u1) = (" + to_string(u0)
                         + ", " + to_string(u1) + ")");
      }
      return r;
    }

    BatteryResult projection_pipeline(ReducibleFixture const& fx,
                                      std::size_t   n,
                                      std::size_t   budget,
                                      std::uint64_t seed) {
      BatteryResult r = named("xmod.projection_pipeline");
      r.required_rate = 0.9;
      std::size_t nodes = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s  = mix(seed, 2000 + i);
        auto          sc = scramble(fx.big(), s, 1 + i % 6);
        bool          ok = false;
        std::string   what = describe(fx.big(), sc.sequence);
        try {
          auto tm = project_identity_sequence(fx, sc.sequence);
          ok      = tm.t.empty() && is_identity(fx.small(), tm.m);
          if (ok) {
            SearchOptions opts;
            opts.budget = budget;
            auto res    = search_trivialization(fx.small(), tm.m, opts);
            nodes += res.nodes;
            if (!res.exhausted()
                && verify_certificate(fx.small(), tm.m, *res.certificate).ok) {
              ++r.successes;
            }
          }
        } catch (Error const& e) {
          what += std::string(": ") + e.what();
        }
        r.record(ok, what);
      }
      r.detail = {{"nodes", nodes}, {"budget", budget}};
      return r;
    }

    BatteryResult insertion_identity(std::vector<GroupPresentation> const& gps,
                                     std::size_t n, std::uint64_t seed) {
      BatteryResult   r = named("relmod.insertion_identity");
      std::mt19937_64 rng(mix(seed, 20));
      for (std::size_t i = 0; i < n; ++i) {
        auto const& gp = gps[i % gps.size()];
        FreeOracle  free(gp.alphabet());
        YSequence   d  = random_sequence(gp, rng, 0, 5);
        YSymbol     a  = random_symbol(gp, rng);
        auto        g  = insertion_generator(a);
        YSequence   da = d;
        da.insert(da.end(), g.begin(), g.end());
        auto diff = gamma_image(gp, da, free) - gamma_image(gp, d, free);
        r.record(diff == basis_element(a.conj, a.rel) * 2, describe(gp, da));
      }
      return r;
    }

    BatteryResult exchange_invariance(GroupPresentation const& finite,
                                      std::size_t              n,
                                      std::size_t              cosets,
                                      std::uint64_t            seed) {
      BatteryResult   r = named("relmod.exchange_invariance");
      std::mt19937_64 rng(mix(seed, 21));
      CosetOracle     G(finite, cosets);
      for (std::size_t i = 0; i < n; ++i) {
        YSequence   d   = random_sequence(finite, rng, 2, 6);
        std::size_t pos = rng() % (d.size() - 1);
        Move m{rng() % 2 == 0 ? MoveKind::ExchangeL : MoveKind::ExchangeR, pos,
               std::nullopt};
        r.record(gamma_image(finite, apply_move(finite, d, m), G)
                     == gamma_image(finite, d, G),
                 describe(finite, d) + " " + to_string(m.kind) + " at "
                     + std::to_string(pos));
      }
      r.detail = {{"order", G.order()}};
      return r;
    }

    BatteryResult module_action_laws(GroupPresentation const& finite,
                                     std::size_t              n,
                                     std::size_t              cosets,
                                     std::uint64_t            seed) {
      BatteryResult   r = named("relmod.module_action_laws");
      std::mt19937_64 rng(mix(seed, 22));
      CosetOracle     G(finite, cosets);
      FreeOracle      F(finite.alphabet());
      FreeWord const  one(finite.alphabet());
      for (std::size_t i = 0; i < n; ++i) {
        YSequence d = random_sequence(finite, rng, 0, 5);
        FreeWord  v = random_word(finite.alphabet(), rng, 4);
        FreeWord  w = random_word(finite.alphabet(), rng, 4);
        bool      ok = true;
        for (GroupOracle const* o : {static_cast<GroupOracle const*>(&F),
                                     static_cast<GroupOracle const*>(&G)}) {
          auto e = gamma_image(finite, d, *o);
          ok = ok && module_action(one, e, *o) == e
               && module_action(invert(w), module_action(w, e, *o), *o) == e
               && module_action(v, module_action(w, e, *o), *o)
                      == module_action(w * v, e, *o);
        }
        r.record(ok, describe(finite, d) + " v = " + to_string(v)
                         + " w = " + to_string(w));
      }
      return r;
    }

  }  // namespace battery

  std::vector<BatteryResult> run_suite(Fixtures const& fx, SuiteConfig const& cfg) {
    auto count = [&](std::size_t n) { return cfg.samples ? *cfg.samples : n; };
    std::uint64_t const        seed = cfg.seed;
    std::vector<BatteryResult> out;
    auto tagged = [&](BatteryResult r, std::string const& fixture) {
      r.name += "[" + fixture + "]";
      out.push_back(std::move(r));
    };

    out.push_back(battery::boundary_invariance(fx.soundness, count(1000), seed));
    out.push_back(battery::exchange_involution(fx.soundness, count(500), seed));
    out.push_back(battery::conjugation_action(fx.soundness, count(500), seed));
    out.push_back(battery::centrality(fx.soundness, count(200), seed));
    out.push_back(battery::scramble_recovery(fx.soundness, count(200), 6,
                                             cfg.budget, seed));

    out.push_back(battery::dominion_laws(fx.monoids, 5));
    out.push_back(battery::tensor_agreement(fx.monoids, 5));
    out.push_back(battery::absolute_closure(fx.monoids, 6));
    out.push_back(battery::wdom_consistency(fx.monoids, 4, cfg.cosets));
    out.push_back(battery::universal_group_probe(cfg.cosets));

    for (auto const& [name, f] : fx.reducible) {
      tagged(battery::crossed_module_axioms(f, count(500), seed), name);
      tagged(battery::eta_derivation_law(f, count(500), seed), name);
      tagged(battery::eta_regularity(f, count(500), seed), name);
      tagged(battery::composition_agreement(f, count(500), seed), name);
      tagged(battery::actor_diagram(f, count(200), seed), name);
      tagged(battery::semidirect_action_laws(f, count(100), seed), name);
      tagged(battery::decomposition_round_trip(f, count(1000), seed), name);
      tagged(battery::projection_pipeline(f, count(100), cfg.budget, seed), name);
    }

    out.push_back(battery::insertion_identity(fx.soundness, count(500), seed));
    out.push_back(battery::exchange_invariance(fx.finite_quotient, count(200),
                                               cfg.cosets, seed));
    out.push_back(battery::module_action_laws(fx.finite_quotient, count(500),
                                              cfg.cosets, seed));
    return out;
  }

  json suite_json(SuiteConfig const& cfg, std::vector<BatteryResult> const& results) {
    json batteries = json::array();
    bool all       = true;
    for (auto const& r : results) {
      batteries.push_back(to_json(r));
      all = all && passes(r);
    }
    return json{{"seed", cfg.seed},
                {"samples", cfg.samples ? json(*cfg.samples) : json("default")},
                {"budget", cfg.budget},
                {"batteries", std::move(batteries)},
                {"pass", all}};
  }

}  // namespace asph
