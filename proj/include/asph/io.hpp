#ifndef ASPH_IO_HPP_
#define ASPH_IO_HPP_

// JSON forms of Y-sequences, certificates, monoid tables and relation-module
// elements.
//
//   Y-sequence   [{"rel": "r1", "conj": "a b^-1", "sign": 1}, ...]
//   certificate  {"pool_spec": {"pool": "present", "cap": 64},
//                 "moves": [{"kind": "ExchangeL", "pos": 0},
//                           {"kind": "Insert", "pos": 2, "symbol": {...}}]}
//   monoid       {"size": n, "identity": i, "table": [[...], ...]}

#include <string>

#include <json.hpp>

#include "asph/monoid.hpp"
#include "asph/peiffer.hpp"
#include "asph/relmod.hpp"

namespace asph {

  using json = nlohmann::ordered_json;

  // Throws Error when the file is missing or is not valid JSON.
  json read_json_file(std::string const& path);

  json    to_json(GroupPresentation const& gp, YSymbol const& s);
  YSymbol symbol_from_json(GroupPresentation const& gp, json const& j);

  json      to_json(GroupPresentation const& gp, YSequence const& d);
  YSequence sequence_from_json(GroupPresentation const& gp, json const& j);

  json        to_json(GroupPresentation const& gp, Certificate const& c);
  Certificate certificate_from_json(GroupPresentation const& gp, json const& j);

  json         to_json(FiniteMonoid const& S);
  FiniteMonoid monoid_from_json(json const& j);
  FiniteMonoid read_monoid_file(std::string const& path);

  // {"r1": {"a b^-1": 2, "1": -1}, ...}
  json to_json(GroupPresentation const& gp, RelModElement const& e);

}  // namespace asph

#endif  // ASPH_IO_HPP_
