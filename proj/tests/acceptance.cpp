// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "asph/battery.hpp"
#include "asph/coset.hpp"
#include "asph/monoid.hpp"
#include "asph/presentation.hpp"

using namespace asph;

namespace {

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  std::string counts(BatteryResult const& r) {
    std::string s = r.name + " " + std::to_string(r.samples) + " samples, "
                    + std::to_string(r.failures) + " failures";
    if (r.required_rate > 0) {
      s += ", " + std::to_string(r.successes) + " found";
    }
    if (r.control_detected) {
      s += *r.control_detected ? ", control detected" : ", control MISSED";
    }
    if (!r.first_failure.empty()) {
      s += ", first failure: " + r.first_failure;
    }
    return s;
  }

  // Appends to the outcome; a battery must have exactly `samples` samples.
  void require(Outcome& o, BatteryResult const& r, std::size_t samples) {
    bool ok = passes(r) && r.samples == samples;
    o.pass  = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + counts(r);
  }

  std::size_t group_order(std::string const& text) {
    auto res = coset_enumeration(parse_group_presentation(text), {}, 100);
    return res.exhausted() ? 0 : res.index();
  }

}  // namespace

int main() {
  std::string const   dir  = ASPH_FIXTURES_DIR;
  std::uint64_t const seed = 0;
  Fixtures const      fx   = load_fixtures(dir);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("Peiffer soundness", [&] {
    Outcome o{fx.soundness.size() == 5, ""};
    o.detail = std::to_string(fx.soundness.size()) + " presentations";
    require(o, battery::boundary_invariance(fx.soundness, 1000, seed), 1000);
    return o;
  });

  criteria.emplace_back("scramble and recover", [&] {
    auto    start = std::chrono::steady_clock::now();
    auto    r     = battery::scramble_recovery(fx.soundness, 200, 6, 50000, seed);
    double  secs  = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                  - start)
                      .count();
    Outcome o{true, ""};
    require(o, r, 200);
    o.pass = o.pass && secs < 120;
    o.detail += ", " + std::to_string(secs) + " s";
    return o;
  });

  criteria.emplace_back("zigzag and dominion", [&] {
    std::size_t tables = 0;
    for (auto const& [name, S] : fx.monoids) {
      tables += S.size() <= 5;
    }
    Outcome o{tables >= 20, std::to_string(tables) + " tables"};
    // one sample per (table, submonoid) pair, so the counts are whatever the
    // corpus holds
    auto dom = battery::dominion_laws(fx.monoids, 5);
    auto uf  = battery::tensor_agreement(fx.monoids, 5);
    require(o, dom, dom.samples);
    require(o, uf, uf.samples);
    o.pass = o.pass && dom.samples > 0 && uf.samples > 0;
    return o;
  });

  criteria.emplace_back("universal-group probe", [&] {
    // the monoid {1, a, 0} with a a = 0 and 0 absorbing
    auto        nil3 = validate_monoid({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
    auto        res  = coset_enumeration(universal_group(nil3), {}, 100);
    std::size_t g    = res.exhausted() ? 0 : res.index();
    std::size_t c3   = group_order("group C3\ngens a\nrel r = a^3");
    std::size_t s3   = group_order(
        "group S3\ngens a b\nrel r1 = a^2\nrel r2 = b^2\nrel r3 = a b a b a b");
    return Outcome{g == 2 && c3 == 3 && s3 == 6,
                   "G({1,a,0}) index " + std::to_string(g) + " (expected 2), C3 "
                       + std::to_string(c3) + " (expected 3), S3 "
                       + std::to_string(s3) + " (expected 6)"};
  });

  criteria.emplace_back("reducible-LOT lemma batteries", [&] {
    bool family = false;
    for (auto const& [name, f] : fx.reducible) {
      auto chain = conjugation_chain_presentation(3, "x3");
      if (f.big().size() == chain.size()) {
        bool same = true;
        for (std::size_t i = 0; i < chain.size(); ++i) {
          same = same && f.big().relator(i).word.letters() == chain.relator(i).word.letters();
        }
        family = family || same;
      }
    }
    Outcome o{fx.reducible.size() >= 3 && family,
              std::to_string(fx.reducible.size()) + " fixtures"};
    for (auto const& [name, f] : fx.reducible) {
      require(o, battery::eta_derivation_law(f, 500, seed), 500);
      require(o, battery::eta_regularity(f, 500, seed), 500);
      require(o, battery::composition_agreement(f, 500, seed), 500);
      require(o, battery::actor_diagram(f, 200, seed), 200);
      require(o, battery::semidirect_action_laws(f, 100, seed), 100);
    }
    return o;
  });

  criteria.emplace_back("decomposition round trips", [&] {
    Outcome o{true, ""};
    for (auto const& [name, f] : fx.reducible) {
      require(o, battery::decomposition_round_trip(f, 1000, seed), 1000);
    }
    return o;
  });

  criteria.emplace_back("projection pipeline", [&] {
    Outcome o{true, ""};
    for (auto const& [name, f] : fx.reducible) {
      require(o, battery::projection_pipeline(f, 100, 50000, seed), 100);
    }
    return o;
  });

  criteria.emplace_back("relation-module insertion identity", [&] {
    Outcome o{true, ""};
    require(o, battery::insertion_identity(fx.soundness, 500, seed), 500);
    require(o, battery::exchange_invariance(fx.finite_quotient, 200, 100, seed), 200);
    return o;
  });

  criteria.emplace_back("determinism", [&] {
    SuiteConfig cfg;
    cfg.fixtures_dir = dir;
    cfg.seed         = seed;
    auto first       = suite_json(cfg, run_suite(fx, cfg)).dump();
    auto second      = suite_json(cfg, run_suite(load_fixtures(dir), cfg)).dump();
    return Outcome{first == second,
                   std::to_string(first.size()) + " bytes per run"};
  });

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu (%s): %s  %s\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
