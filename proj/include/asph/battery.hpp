#ifndef ASPH_BATTERY_HPP_
#define ASPH_BATTERY_HPP_

// Randomized property batteries over the shipped fixtures.  Each battery
// returns raw counts; deciding what counts as a pass is left to the caller
// (passes() gives the default rule).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asph/error.hpp"
#include "asph/io.hpp"
#include "asph/monoid.hpp"
#include "asph/presentation.hpp"
#include "asph/xmod.hpp"

namespace asph {

  class MissingFixtureError : public Error {
   public:
    using Error::Error;
  };

  struct BatteryResult {
    std::string         name;
    std::size_t         samples   = 0;
    std::size_t         failures  = 0;  // violated laws
    std::size_t         successes = 0;  // for rate batteries: found witnesses
    double              required_rate = 0;  // minimum successes / samples
    std::optional<bool> control_detected;  // the perturbed formula failed
    std::string         first_failure;
    json                detail = json::object();

    void record(bool pass, std::string const& what);
  };

  bool passes(BatteryResult const& r);
  json to_json(BatteryResult const& r);

  struct SuiteConfig {
    std::string                fixtures_dir;
    std::uint64_t              seed = 0;
    std::optional<std::size_t> samples;  // overrides every sample count
    std::size_t                budget = 50000;
    std::size_t                cosets = 100;
  };

  struct Fixtures {
    std::vector<GroupPresentation>                  soundness;
    std::vector<std::pair<std::string, ReducibleFixture>> reducible;
    GroupPresentation                               finite_quotient;
    std::vector<std::pair<std::string, FiniteMonoid>> monoids;  // by file name
  };

  // Reads fixtures/suite.json and everything it names.  Throws
  // MissingFixtureError for absent files and Error for malformed ones.
  Fixtures load_fixtures(std::string const& dir);

  namespace battery {

    BatteryResult boundary_invariance(std::vector<GroupPresentation> const& gps,
                                      std::size_t n, std::uint64_t seed);
    BatteryResult exchange_involution(std::vector<GroupPresentation> const& gps,
                                      std::size_t n, std::uint64_t seed);
    BatteryResult conjugation_action(std::vector<GroupPresentation> const& gps,
                                     std::size_t n, std::uint64_t seed);
    BatteryResult centrality(std::vector<GroupPresentation> const& gps,
                             std::size_t n, std::uint64_t seed);
    BatteryResult scramble_recovery(std::vector<GroupPresentation> const& gps,
                                    std::size_t   seeds,
                                    std::size_t   max_k,
                                    std::size_t   budget,
                                    std::uint64_t seed);

    // Every submonoid of every table with at most max_size elements.
    BatteryResult dominion_laws(
        std::vector<std::pair<std::string, FiniteMonoid>> const& monoids,
        std::size_t                                              max_size);
    BatteryResult tensor_agreement(
        std::vector<std::pair<std::string, FiniteMonoid>> const& monoids,
        std::size_t                                              max_size);
    BatteryResult absolute_closure(
        std::vector<std::pair<std::string, FiniteMonoid>> const& monoids,
        std::size_t                                              max_size);
    BatteryResult wdom_consistency(
        std::vector<std::pair<std::string, FiniteMonoid>> const& monoids,
        std::size_t                                              max_size,
        std::size_t                                              cosets);
    BatteryResult universal_group_probe(std::size_t cosets);

    BatteryResult crossed_module_axioms(ReducibleFixture const& fx,
                                        std::size_t n, std::uint64_t seed);
    BatteryResult eta_derivation_law(ReducibleFixture const& fx,
                                     std::size_t n, std::uint64_t seed);
    BatteryResult eta_regularity(ReducibleFixture const& fx,
                                 std::size_t n, std::uint64_t seed);
    BatteryResult composition_agreement(ReducibleFixture const& fx,
                                        std::size_t n, std::uint64_t seed);
    BatteryResult actor_diagram(ReducibleFixture const& fx,
                                std::size_t n, std::uint64_t seed);
    BatteryResult semidirect_action_laws(ReducibleFixture const& fx,
                                         std::size_t n, std::uint64_t seed);
    BatteryResult decomposition_round_trip(ReducibleFixture const& fx,
                                           std::size_t n, std::uint64_t seed);
    BatteryResult projection_pipeline(ReducibleFixture const& fx,
                                      std::size_t   n,
                                      std::size_t   budget,
                                      std::uint64_t seed);

    BatteryResult insertion_identity(std::vector<GroupPresentation> const& gps,
                                     std::size_t n, std::uint64_t seed);
    BatteryResult exchange_invariance(GroupPresentation const& finite,
                                      std::size_t              n,
                                      std::size_t              cosets,
                                      std::uint64_t            seed);
    BatteryResult module_action_laws(GroupPresentation const& finite,
                                     std::size_t              n,
                                     std::size_t              cosets,
                                     std::uint64_t            seed);

  }  // namespace battery

  // Every battery, in a fixed order.
  std::vector<BatteryResult> run_suite(Fixtures const& fx, SuiteConfig const& cfg);
  json suite_json(SuiteConfig const& cfg, std::vector<BatteryResult> const& results);

}  // namespace asph

#endif  // ASPH_BATTERY_HPP_
