#include "asph/io.hpp"

#include <fstream>

#include "asph/error.hpp"

namespace asph {

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  namespace {

    template <typename F>
    auto guarded(char const* what, F&& f) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw Error(std::string("malformed ") + what + ": " + e.what());
      }
    }

  }  // namespace

  json to_json(GroupPresentation const& gp, YSymbol const& s) {
    check_symbol(gp, s);
    return json{{"rel", gp.relator(s.rel).name},
                {"conj", to_string(s.conj)},
                {"sign", s.sign}};
  }

  YSymbol symbol_from_json(GroupPresentation const& gp, json const& j) {
    return guarded("symbol", [&] {
      YSymbol s;
      s.rel  = gp.relator_index(j.at("rel").get<std::string>());
      s.conj = parse_word(gp.alphabet(), j.at("conj").get<std::string>());
      s.sign = j.at("sign").get<int>();
      if (s.sign != 1 && s.sign != -1) {
        throw Error("symbol sign must be 1 or -1");
      }
      return s;
    });
  }

  json to_json(GroupPresentation const& gp, YSequence const& d) {
    json out = json::array();
    for (auto const& s : d) {
      out.push_back(to_json(gp, s));
    }
    return out;
  }

  YSequence sequence_from_json(GroupPresentation const& gp, json const& j) {
    if (!j.is_array()) {
      throw Error("a Y-sequence must be a JSON array");
    }
    YSequence out;
    for (auto const& x : j) {
      out.push_back(symbol_from_json(gp, x));
    }
    return out;
  }

  json to_json(GroupPresentation const& gp, Certificate const& c) {
    json moves = json::array();
    for (auto const& m : c.moves) {
      json jm{{"kind", to_string(m.kind)}, {"pos", m.pos}};
      if (m.kind == MoveKind::Insert && m.symbol) {
        jm["symbol"] = to_json(gp, *m.symbol);
      }
      moves.push_back(std::move(jm));
    }
    return json{{"pool_spec", {{"pool", to_string(c.pool)}, {"cap", c.cap}}},
                {"moves", std::move(moves)}};
  }

  Certificate certificate_from_json(GroupPresentation const& gp, json const& j) {
    return guarded("certificate", [&] {
      Certificate c;
      if (j.contains("pool_spec")) {
        auto const& spec = j.at("pool_spec");
        auto        pool = parse_pool_kind(spec.at("pool").get<std::string>());
        if (!pool) {
          throw Error("unknown pool kind");
        }
        c.pool = *pool;
        c.cap  = spec.at("cap").get<std::size_t>();
      }
      for (auto const& jm : j.at("moves")) {
        auto kind = parse_move_kind(jm.at("kind").get<std::string>());
        if (!kind) {
          throw Error("unknown move kind "
                      + jm.at("kind").get<std::string>());
        }
        Move m{*kind, jm.at("pos").get<std::size_t>(), std::nullopt};
        if (jm.contains("symbol")) {
          m.symbol = symbol_from_json(gp, jm.at("symbol"));
        }
        c.moves.push_back(std::move(m));
      }
      return c;
    });
  }

  json to_json(FiniteMonoid const& S) {
    return json{{"size", S.size()},
                {"identity", S.identity()},
                {"table", S.table()}};
  }

  FiniteMonoid monoid_from_json(json const& j) {
    return guarded("monoid", [&] {
      auto table = j.at("table").get<std::vector<std::vector<long>>>();
      if (j.contains("size")
          && j.at("size").get<std::size_t>() != table.size()) {
        throw Error("monoid size does not match its table");
      }
      std::optional<std::size_t> identity;
      if (j.contains("identity")) {
        identity = j.at("identity").get<std::size_t>();
      }
      return validate_monoid(table, identity);
    });
  }

  FiniteMonoid read_monoid_file(std::string const& path) {
    return monoid_from_json(read_json_file(path));
  }

  json to_json(GroupPresentation const& gp, RelModElement const& e) {
    json out = json::object();
    for (auto const& [k, c] : e.terms()) {
      out[gp.relator(k.rel).name][to_string(k.rep)] = c;
    }
    return out;
  }

}  // namespace asph
