// asph: command-line front end.
//
// Exit codes: 0 success / Yes / verified, 1 No / refuted / illegal,
// 2 Exhausted / Unknown, 3 usage or parse errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asph/battery.hpp"
#include "asph/coset.hpp"
#include "asph/error.hpp"
#include "asph/io.hpp"
#include "asph/monoid.hpp"
#include "asph/peiffer.hpp"
#include "asph/presentation.hpp"
#include "asph/relmod.hpp"
#include "asph/word.hpp"
#include "asph/xmod.hpp"

using namespace asph;

namespace {

  enum Exit : int { kOk = 0, kNo = 1, kUnknown = 2, kUsage = 3 };

  struct Globals {
    std::uint64_t              seed = 0;
    bool                       json = false;
    std::optional<std::size_t> budget;
    std::optional<std::size_t> depth;
    std::optional<std::size_t> samples;
  };

  Globals g;

  void emit(json const& j, std::string const& text) {
    if (g.json) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text << '\n';
    }
  }

  GroupPresentation read_group(std::string const& path) {
    auto file = read_presentation_file(path);
    if (auto const* gp = std::get_if<GroupPresentation>(&file.presentation)) {
      return *gp;
    }
    throw Error(path + ": expected a group presentation");
  }

  // A bare array, or the object printed by `peiffer scramble`.
  YSequence read_sequence(GroupPresentation const& gp, std::string const& path) {
    json j = read_json_file(path);
    if (j.is_object() && j.contains("sequence")) {
      return sequence_from_json(gp, j["sequence"]);
    }
    return sequence_from_json(gp, j);
  }

  std::vector<std::size_t> parse_indices(std::string const& text) {
    std::vector<std::size_t> out;
    std::stringstream        in(text);
    std::string              item;
    while (std::getline(in, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      if (b == std::string::npos) {
        continue;
      }
      std::size_t used = 0;
      long        v    = -1;
      try {
        v = std::stol(item.substr(b), &used);
      } catch (std::exception const&) {
        throw ParseError("bad element index '" + item + "'", 1, b + 1);
      }
      if (v < 0) {
        throw ParseError("negative element index '" + item + "'", 1, b + 1);
      }
      out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  }

  std::string set_string(std::vector<std::size_t> const& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? ", " : "") + std::to_string(xs[i]);
    }
    return out + "}";
  }

  int answer_code(Answer a) {
    switch (a) {
      case Answer::Yes:
        return kOk;
      case Answer::No:
        return kNo;
      case Answer::Unknown:
        break;
    }
    return kUnknown;
  }

  void print_seed() {
    if (!g.json) {
      std::cout << "seed " << g.seed << '\n';
    }
  }

  SearchOptions search_options(std::optional<std::size_t> cap,
                               std::string const&         pool) {
    SearchOptions opts;
    if (g.budget) {
      opts.budget = *g.budget;
    }
    if (g.depth) {
      opts.depth = *g.depth;
    }
    if (cap) {
      opts.cap = *cap;
    }
    auto kind = parse_pool_kind(pool);
    if (!kind) {
      throw ParseError("unknown pool '" + pool + "'", 1, 1);
    }
    opts.pool = *kind;
    return opts;
  }

  // ---- word ----

  int word_command(std::string const& op,
                   std::string const& gens,
                   std::vector<std::string> const& args) {
    std::vector<std::string> ids;
    std::stringstream        in(gens);
    for (std::string id; in >> id;) {
      ids.push_back(id);
    }
    Alphabet              alphabet(ids);
    std::vector<FreeWord> ws;
    for (auto const& a : args) {
      ws.push_back(parse_word(alphabet, a));
    }
    auto need = [&](std::size_t n) {
      if (ws.size() != n) {
        throw ParseError(op + " takes " + std::to_string(n) + " word(s)", 1, 1);
      }
    };
    if (op == "abelianize") {
      need(1);
      auto v = abelianize(ws[0]);
      json j = json::object();
      std::string text;
      for (std::size_t i = 0; i < v.size(); ++i) {
        j[alphabet.name(i)] = v[i];
        text += (i ? " " : "") + alphabet.name(i) + ":" + std::to_string(v[i]);
      }
      emit(j, text);
      return kOk;
    }
    FreeWord result;
    if (op == "reduce") {
      need(1);
      result = ws[0];
    } else if (op == "mul") {
      if (ws.empty()) {
        throw ParseError("mul takes at least one word", 1, 1);
      }
      result = FreeWord(alphabet);
      for (auto const& w : ws) {
        result = result * w;
      }
    } else if (op == "inv") {
      need(1);
      result = invert(ws[0]);
    } else if (op == "conj") {
      need(2);
      result = conjugate(ws[0], ws[1]);
    } else {
      throw ParseError("unknown word operation '" + op + "'", 1, 1);
    }
    emit(json{{"word", to_string(result)}, {"length", result.length()}},
         to_string(result));
    return kOk;
  }

  // ---- present ----

  int present_validate(std::string const& path) {
    auto file = read_presentation_file(path);
    std::visit(
        [&](auto const& p) {
          emit(json{{"name", p.name()},
                    {"generators", p.alphabet().ids()},
                    {"eliminate", file.eliminate ? json(*file.eliminate) : json()}},
               to_string(p));
        },
        file.presentation);
    return kOk;
  }

  int present_hat(std::string const& path) {
    auto file = read_presentation_file(path);
    auto const* mp = std::get_if<MonoidPresentation>(&file.presentation);
    if (!mp) {
      throw Error(path + ": expected a monoid presentation");
    }
    auto gp = universal_group_presentation(*mp);
    json rels = json::object();
    for (auto const& r : gp.relators()) {
      rels[r.name] = to_string(r.word);
    }
    emit(json{{"name", gp.name()},
              {"generators", gp.alphabet().ids()},
              {"relators", rels}},
         to_string(gp));
    return kOk;
  }

  int present_solve(std::string const& path, std::string gen) {
    auto file = read_presentation_file(path);
    auto const* gp = std::get_if<GroupPresentation>(&file.presentation);
    if (!gp) {
      throw Error(path + ": expected a group presentation");
    }
    if (gen.empty()) {
      if (!file.eliminate) {
        throw ParseError("no --gen given and no eliminate directive", 1, 1);
      }
      gen = *file.eliminate;
    }
    auto rho   = solve_single_occurrence(*gp, gen);
    auto small = subpresentation(*gp, rho);
    emit(json{{"eliminated", gen},
              {"solved", to_string(rho.solved())},
              {"source_relator", rho.source_relator()},
              {"small", to_string(small)}},
         gen + " = " + to_string(rho.solved()) + "\n" + to_string(small));
    return kOk;
  }

  int present_lot(std::size_t n, std::string const& edges, std::string const& chain) {
    GroupPresentation gp = chain.empty()
                               ? lot_presentation(n, parse_lot_edges(edges))
                               : conjugation_chain_presentation(n, chain);
    auto        red  = is_reducible_lot(gp);
    json        j{{"presentation", to_string(gp)},
                  {"reducible", red ? json(gp.alphabet().name(*red)) : json()}};
    std::string text = to_string(gp);
    if (red) {
      text += "\n# reducible: " + gp.alphabet().name(*red) + " occurs once";
    }
    emit(j, text);
    return kOk;
  }

  int present_cosets(std::string const& path, std::vector<std::string> const& subgroup) {
    auto                  gp = read_group(path);
    std::vector<FreeWord> H;
    for (auto const& w : subgroup) {
      H.push_back(parse_word(gp.alphabet(), w));
    }
    auto res = coset_enumeration(gp, H, g.budget.value_or(1000));
    if (res.exhausted()) {
      emit(json{{"index", "Exhausted"}, {"defined", res.defined}}, "Exhausted");
      return kUnknown;
    }
    emit(json{{"index", res.index()}, {"defined", res.defined}},
         std::to_string(res.index()));
    return kOk;
  }

  // ---- monoid ----

  struct MonoidArgs {
    std::string                path;
    std::string                u = "";
    std::optional<std::size_t> d;
  };

  Submonoid submonoid_arg(FiniteMonoid const& S, std::string const& u) {
    if (u.empty()) {
      return whole(S);
    }
    auto elems = parse_indices(u);
    for (auto x : elems) {
      if (x >= S.size()) {
        throw ParseError("element " + std::to_string(x) + " out of range", 1, 1);
      }
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return Submonoid(S, elems);
  }

  int monoid_command(std::string const& op, MonoidArgs const& a) {
    auto S = read_monoid_file(a.path);
    if (op == "validate") {
      bool inv = is_inverse_monoid(S);
      emit(json{{"size", S.size()}, {"identity", S.identity()}, {"inverse", inv}},
           "monoid of order " + std::to_string(S.size()) + ", identity "
               + std::to_string(S.identity()) + (inv ? ", inverse" : ""));
      return kOk;
    }
    auto U = submonoid_arg(S, a.u);
    if (a.d && *a.d >= S.size()) {
      throw ParseError("element " + std::to_string(*a.d) + " out of range", 1, 1);
    }
    if (op == "tensor") {
      auto t = tensor_product(right_regular(S, U), left_regular(S, U), U);
      emit(json{{"classes", t.class_count()}, {"labels", t.labels()}},
           std::to_string(t.class_count()) + " classes in S x S");
      return kOk;
    }
    if (op == "dominion") {
      if (a.d) {
        bool in = dominion_membership(S, U, *a.d);
        emit(json{{"element", *a.d}, {"member", in}}, in ? "true" : "false");
        return in ? kOk : kNo;
      }
      auto dom = dominion(S, U);
      emit(json{{"dominion", dom}}, set_string(dom));
      return kOk;
    }
    if (op == "wdom") {
      if (!a.d) {
        throw ParseError("wdom needs --d", 1, 1);
      }
      auto ans = wdom_membership_partial(S, U, *a.d, g.budget.value_or(100));
      emit(json{{"element", *a.d}, {"answer", to_string(ans)}}, to_string(ans));
      return answer_code(ans);
    }
    throw ParseError("unknown monoid operation '" + op + "'", 1, 1);
  }

  // ---- peiffer ----

  struct PeifferArgs {
    std::string                presentation;
    std::string                sequence;
    std::string                certificate;
    std::optional<std::size_t> cap;
    std::string                pool = "present";
    std::size_t                k    = 4;
    std::string                n0   = "1";
    std::string                to;
  };

  int peiffer_command(std::string const& op, PeifferArgs const& a) {
    auto gp        = read_group(a.presentation);
    auto need_path = [&](std::string const& p, char const* what) {
      if (p.empty()) {
        throw ParseError(std::string("missing ") + what, 1, 1);
      }
      return p;
    };

    if (op == "scramble") {
      print_seed();
      auto sc = scramble(gp, g.seed, a.k);
      Certificate c;
      c.pool  = PoolKind::None;
      c.moves = sc.moves;
      emit(json{{"seed", g.seed},
                {"k", a.k},
                {"sequence", to_json(gp, sc.sequence)},
                {"moves", to_json(gp, c)["moves"]}},
           to_string(gp, sc.sequence));
      return kOk;
    }

    auto d = read_sequence(gp, need_path(a.sequence, "sequence"));
    if (op == "boundary") {
      auto b = boundary(gp, d);
      emit(json{{"boundary", to_string(b)}}, to_string(b));
      return kOk;
    }
    if (op == "check") {
      bool id = is_identity(gp, d);
      emit(json{{"identity", id}, {"boundary", to_string(boundary(gp, d))}},
           id ? "identity" : "not an identity: " + to_string(boundary(gp, d)));
      return id ? kOk : kNo;
    }
    if (op == "search") {
      auto opts = search_options(a.cap, a.pool);
      SearchResult res;
      if (a.to.empty()) {
        res = search_trivialization(gp, d, opts);
      } else {
        res = search_path(gp, d, read_sequence(gp, a.to), opts);
      }
      if (res.exhausted()) {
        emit(json{{"result", "Exhausted"}, {"nodes", res.nodes}}, "Exhausted");
        return kUnknown;
      }
      json cert = to_json(gp, *res.certificate);
      if (!a.certificate.empty()) {
        std::ofstream out(a.certificate);
        if (!out) {
          throw Error("cannot write " + a.certificate);
        }
        out << cert.dump(2) << '\n';
      }
      std::string text;
      for (auto const& m : res.certificate->moves) {
        text += std::string(to_string(m.kind)) + " " + std::to_string(m.pos);
        if (m.symbol) {
          text += " " + to_string(gp, *m.symbol);
        }
        text += "\n";
      }
      text += std::to_string(res.certificate->moves.size()) + " moves, "
              + std::to_string(res.nodes) + " nodes";
      emit(cert, text);
      return kOk;
    }
    if (op == "verify") {
      auto c = certificate_from_json(
          gp, read_json_file(need_path(a.certificate, "certificate")));
      auto rep = verify_certificate(gp, d, c);
      json j{{"verified", rep.ok}};
      if (rep.failing_step) {
        j["failing_step"] = *rep.failing_step;
      }
      if (!rep.message.empty()) {
        j["message"] = rep.message;
      }
      emit(j, rep.ok ? "verified" : "refuted: " + rep.message);
      return rep.ok ? kOk : kNo;
    }
    if (op == "fiber") {
      auto fp = fiber_pair(gp, parse_word(gp.alphabet(), a.n0), d);
      emit(to_json(gp, fp), to_string(gp, fp));
      return kOk;
    }
    throw ParseError("unknown peiffer operation '" + op + "'", 1, 1);
  }

  // ---- relmod ----

  int relmod_gmap(std::string const& pres,
                  std::string const& seq,
                  std::string const& oracle_kind,
                  bool               signed_gamma) {
    auto gp     = read_group(pres);
    auto d      = read_sequence(gp, seq);
    auto oracle = make_oracle(oracle_kind, gp, g.budget.value_or(1000));
    try {
      auto e    = gamma_image(gp, d, *oracle, signed_gamma);
      auto zero = is_zero(e, *oracle);
      emit(json{{"gamma", to_json(gp, e)}, {"zero", to_string(zero)}},
           to_string(gp, e));
      return kOk;
    } catch (PartialResultError const& e) {
      emit(json{{"error", e.what()}, {"undecided", e.undecided()}},
           std::string("Unknown: ") + e.what());
      return kUnknown;
    }
  }

  // ---- xmod ----

  int xmod_check(std::string const& path) {
    auto fx = read_fixture(path);
    print_seed();
    std::size_t n   = g.samples.value_or(100);
    auto        bud = g.budget.value_or(50000);
    std::vector<BatteryResult> rs{
        battery::crossed_module_axioms(fx, n, g.seed),
        battery::eta_derivation_law(fx, n, g.seed),
        battery::eta_regularity(fx, n, g.seed),
        battery::composition_agreement(fx, n, g.seed),
        battery::actor_diagram(fx, n, g.seed),
        battery::semidirect_action_laws(fx, n, g.seed),
        battery::decomposition_round_trip(fx, n, g.seed),
        battery::projection_pipeline(fx, n, bud, g.seed)};
    json        arr = json::array();
    bool        all = true;
    std::string text;
    for (auto const& r : rs) {
      arr.push_back(to_json(r));
      all = all && passes(r);
      text += std::string(passes(r) ? "PASS " : "FAIL ") + r.name + " ("
              + std::to_string(r.samples - r.failures) + "/"
              + std::to_string(r.samples) + ")\n";
    }
    text.pop_back();
    emit(json{{"seed", g.seed}, {"samples", n}, {"batteries", arr}, {"pass", all}},
         text);
    return all ? kOk : kNo;
  }

  int xmod_project(std::string const& path, std::string const& seq) {
    auto fx = read_fixture(path);
    auto d  = read_sequence(fx.big(), seq);
    auto tm = project_identity_sequence(fx, d);
    emit(json{{"t", to_string(tm.t)}, {"m", to_json(fx.small(), tm.m)}},
         "t = " + to_string(tm.t) + "\nm = " + to_string(fx.small(), tm.m));
    return kOk;
  }

  // ---- suite ----

  int suite_command(std::string const& dir) {
    SuiteConfig cfg;
    cfg.fixtures_dir = dir;
    cfg.seed         = g.seed;
    cfg.samples      = g.samples;
    if (g.budget) {
      cfg.budget = *g.budget;
    }
    print_seed();
    Fixtures fx;
    try {
      fx = load_fixtures(dir);
    } catch (MissingFixtureError const&) {
      throw;
    } catch (Error const& e) {
      std::cerr << "asph: " << e.what() << '\n';
      emit(json{{"seed", g.seed}, {"error", e.what()}, {"pass", false}},
           std::string("FAIL fixtures: ") + e.what());
      return kNo;
    }
    std::vector<BatteryResult> results;
    bool                       all = true;
    for (auto& r : run_suite(fx, cfg)) {
      all = all && passes(r);
      if (!g.json) {
        std::cout << (passes(r) ? "PASS " : "FAIL ") << r.name << " ("
                  << r.samples - r.failures << "/" << r.samples;
        if (r.required_rate > 0) {
          std::cout << ", " << r.successes << " found";
        }
        std::cout << ")";
        if (!r.first_failure.empty()) {
          std::cout << " first failure: " << r.first_failure;
        }
        std::cout << '\n';
      }
      results.push_back(std::move(r));
    }
    if (g.json) {
      std::cout << suite_json(cfg, results).dump(2) << '\n';
    }
    return all ? kOk : kNo;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asph: Peiffer moves, dominions and crossed modules"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "Random seed");
  app.add_flag("--json", g.json, "JSON output on stdout");
  app.add_option("--budget", g.budget, "Node or coset budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", g.depth, "Search depth")->check(CLI::PositiveNumber);
  app.add_option("--samples", g.samples, "Samples per battery")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  // word
  auto*                    word = app.add_subcommand("word", "Free-group words");
  std::string              word_op, word_gens;
  std::vector<std::string> word_args;
  word->add_option("op", word_op, "reduce | mul | inv | conj | abelianize")
      ->required()
      ->check(CLI::IsMember({"reduce", "mul", "inv", "conj", "abelianize"}));
  word->add_option("words", word_args, "Words like 'a b^-1 a'");
  word->add_option("--gens", word_gens, "Generators, space separated")->required();
  word->callback([&] { action = [&] { return word_command(word_op, word_gens, word_args); }; });

  // present
  auto* present = app.add_subcommand("present", "Presentations");
  present->require_subcommand(1);
  std::string              pres_path, solve_gen, lot_edges, lot_chain;
  std::size_t              lot_n = 0;
  std::vector<std::string> subgroup;
  auto* validate = present->add_subcommand("validate", "Parse a presentation file");
  validate->add_option("file", pres_path)->required();
  validate->callback([&] { action = [&] { return present_validate(pres_path); }; });
  auto* hat = present->add_subcommand("hat", "Universal group of a monoid presentation");
  hat->add_option("file", pres_path)->required();
  hat->callback([&] { action = [&] { return present_hat(pres_path); }; });
  auto* solve = present->add_subcommand("solve", "Eliminate a single-occurrence generator");
  solve->add_option("file", pres_path)->required();
  solve->add_option("--gen", solve_gen, "Generator to eliminate");
  solve->callback([&] { action = [&] { return present_solve(pres_path, solve_gen); }; });
  auto* lot = present->add_subcommand("lot", "Labelled oriented tree presentation");
  lot->add_option("--n", lot_n, "Number of generators")->required()->check(CLI::PositiveNumber);
  auto* edges_opt = lot->add_option("--edges", lot_edges, "Edges \"i,j,k;...\"");
  lot->add_option("--chain", lot_chain, "Relators U x_i U^-1 x_(i+1)^-1 for the word U")
      ->excludes(edges_opt);
  lot->callback([&] {
    if (lot_edges.empty() && lot_chain.empty()) {
      throw CLI::ValidationError("lot", "one of --edges or --chain is required");
    }
    action = [&] { return present_lot(lot_n, lot_edges, lot_chain); };
  });
  auto* cosets = present->add_subcommand("cosets", "Coset enumeration probe");
  cosets->add_option("file", pres_path)->required();
  cosets->add_option("--subgroup", subgroup, "Subgroup generators");
  cosets->callback([&] { action = [&] { return present_cosets(pres_path, subgroup); }; });

  // monoid
  auto*       monoid = app.add_subcommand("monoid", "Finite monoid tables");
  std::string monoid_op;
  MonoidArgs  margs;
  monoid->add_option("op", monoid_op, "validate | tensor | dominion | wdom")
      ->required()
      ->check(CLI::IsMember({"validate", "tensor", "dominion", "wdom"}));
  monoid->add_option("file", margs.path, "Monoid table JSON")->required();
  monoid->add_option("--u", margs.u, "Submonoid elements \"0,3,5\"; default all of S");
  monoid->add_option("--d", margs.d, "Element to test");
  monoid->callback([&] { action = [&] { return monoid_command(monoid_op, margs); }; });

  // peiffer
  auto*       peiffer = app.add_subcommand("peiffer", "Y-sequences and Peiffer moves");
  std::string peiffer_op;
  PeifferArgs pargs;
  peiffer->add_option("op", peiffer_op,
                      "boundary | check | search | verify | scramble | fiber")
      ->required()
      ->check(CLI::IsMember({"boundary", "check", "search", "verify", "scramble", "fiber"}));
  peiffer->add_option("presentation", pargs.presentation)->required();
  peiffer->add_option("sequence", pargs.sequence, "Y-sequence JSON");
  peiffer->add_option("certificate", pargs.certificate,
                      "Certificate JSON (verify reads it, search writes it)");
  peiffer->add_option("--cap", pargs.cap, "Conjugator length cap");
  peiffer->add_option("--pool", pargs.pool, "none | present | present+exchange");
  peiffer->add_option("--k", pargs.k, "Scramble moves");
  peiffer->add_option("--n0", pargs.n0, "Conjugator for fiber");
  peiffer->add_option("--to", pargs.to, "Search towards this Y-sequence instead of []");
  peiffer->callback([&] { action = [&] { return peiffer_command(peiffer_op, pargs); }; });

  // relmod
  auto* relmod = app.add_subcommand("relmod", "Relation module images");
  relmod->require_subcommand(1);
  std::string rm_pres, rm_seq, rm_oracle = "free";
  bool        rm_signed = false;
  auto*       gmap      = relmod->add_subcommand("gmap", "Image of a Y-sequence");
  gmap->add_option("presentation", rm_pres)->required();
  gmap->add_option("sequence", rm_seq)->required();
  gmap->add_option("--oracle", rm_oracle, "free | cosets | abelian")
      ->check(CLI::IsMember({"free", "cosets", "abelian"}));
  gmap->add_flag("--signed-gamma", rm_signed, "Use the symbol sign as coefficient");
  gmap->callback([&] {
    action = [&] { return relmod_gmap(rm_pres, rm_seq, rm_oracle, rm_signed); };
  });

  // xmod
  auto* xmod = app.add_subcommand("xmod", "Crossed-module checks");
  xmod->require_subcommand(1);
  std::string fixture, xseq;
  auto*       xcheck = xmod->add_subcommand("check", "Run the sampled checks");
  xcheck->add_option("fixture", fixture)->required();
  xcheck->callback([&] { action = [&] { return xmod_check(fixture); }; });
  auto* xproject = xmod->add_subcommand("project", "Project an identity sequence");
  xproject->add_option("fixture", fixture)->required();
  xproject->add_option("sequence", xseq)->required();
  xproject->callback([&] { action = [&] { return xmod_project(fixture, xseq); }; });

  // suite
  auto*       suite = app.add_subcommand("suite", "Run every battery");
  std::string fixtures_dir = ASPH_DEFAULT_FIXTURES;
  suite->add_option("--fixtures", fixtures_dir, "Fixture directory");
  suite->callback([&] { action = [&] { return suite_command(fixtures_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  auto start = std::chrono::steady_clock::now();
  int  code  = kUsage;
  try {
    code = action();
  } catch (IllegalMoveError const& e) {
    std::cerr << "asph: illegal move: " << e.what() << '\n';
    code = kNo;
  } catch (NotReducibleError const& e) {
    std::cerr << "asph: " << e.what() << '\n';
    code = kNo;
  } catch (InvariantError const& e) {
    std::cerr << "asph: invariant violated: " << e.what() << '\n';
    code = kNo;
  } catch (NonRegularError const& e) {
    std::cerr << "asph: " << e.what() << '\n';
    code = kNo;
  } catch (Error const& e) {
    std::cerr << "asph: " << e.what() << '\n';
    code = kUsage;
  } catch (std::exception const& e) {
    std::cerr << "asph: " << e.what() << '\n';
    code = kUsage;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (suite->parsed()) {
    std::cerr << "asph: suite took " << ms << " ms\n";
  }
  return code;
}
