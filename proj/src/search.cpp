// Bounded search in the Peiffer move graph.
//
// The graph is infinitely branching (Insert takes any symbol), so Inserts
// draw from a finite pool fixed at the start, and conjugators longer than a
// cap are pruned.  Each move changes the length by at most 2, so half the
// length difference to the target never overestimates the remaining moves;
// iterative deepening on g + h then returns a shortest path within the
// pruned graph.

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>

#include "asph/error.hpp"
#include "asph/peiffer.hpp"

namespace asph {

  namespace {

    std::size_t max_conj_length(YSequence const& d) {
      std::size_t out = 0;
      for (auto const& s : d) {
        out = std::max(out, s.conj.length());
      }
      return out;
    }

    void append(std::string& key, std::uint32_t x) {
      char buf[sizeof x];
      std::memcpy(buf, &x, sizeof x);
      key.append(buf, sizeof x);
    }

    std::string state_key(YSequence const& d) {
      std::string key;
      for (auto const& s : d) {
        append(key, static_cast<std::uint32_t>(s.rel));
        append(key, static_cast<std::uint32_t>(s.sign > 0 ? 1 : 2));
        append(key, static_cast<std::uint32_t>(s.conj.length()));
        for (auto const& x : s.conj.letters()) {
          append(key, x.letter * 2 + (x.sign > 0 ? 0 : 1));
        }
      }
      return key;
    }

    class Searcher {
     public:
      Searcher(GroupPresentation const& gp,
               YSequence const&         target,
               std::vector<YSymbol>     pool,
               std::size_t              cap,
               std::size_t              budget)
          : _gp(gp),
            _target(target),
            _pool(std::move(pool)),
            _cap(cap),
            _budget(budget) {}

      std::size_t estimate(YSequence const& d) const {
        std::size_t a = d.size(), b = _target.size();
        return (a > b ? a - b : b - a) / 2;
      }

      bool run(YSequence const& start, std::size_t depth) {
        for (std::size_t limit = estimate(start); limit <= depth; ++limit) {
          _limit = limit;
          _visited.clear();
          _path.clear();
          if (dfs(start, 0)) {
            return true;
          }
          if (_out_of_budget) {
            return false;
          }
        }
        return false;
      }

      std::vector<Move> const& path() const noexcept {
        return _path;
      }
      std::size_t nodes() const noexcept {
        return _nodes;
      }

     private:
      bool dfs(YSequence const& d, std::size_t g) {
        if (d == _target) {
          return true;
        }
        if (_nodes >= _budget) {
          _out_of_budget = true;
          return false;
        }
        ++_nodes;
        if (g + estimate(d) > _limit) {
          return false;
        }
        auto [it, fresh] = _visited.emplace(state_key(d), g);
        if (!fresh) {
          if (it->second <= g) {
            return false;
          }
          it->second = g;
        }
        for (auto const& m : legal_moves(_gp, d, _pool)) {
          YSequence child = apply_move(_gp, d, m);
          if (max_conj_length(child) > _cap
              || g + 1 + estimate(child) > _limit) {
            continue;
          }
          _path.push_back(m);
          if (dfs(child, g + 1)) {
            return true;
          }
          _path.pop_back();
          if (_out_of_budget) {
            return false;
          }
        }
        return false;
      }

      GroupPresentation const&                     _gp;
      YSequence const&                             _target;
      std::vector<YSymbol>                         _pool;
      std::size_t                                  _cap;
      std::size_t                                  _budget;
      std::size_t                                  _limit         = 0;
      std::size_t                                  _nodes         = 0;
      bool                                         _out_of_budget = false;
      std::vector<Move>                            _path;
      std::unordered_map<std::string, std::size_t> _visited;
    };

  }  // namespace

  SearchResult search_path(GroupPresentation const& gp,
                           YSequence const&         from,
                           YSequence const&         to,
                           SearchOptions const&     opts) {
    if (boundary(gp, from) != boundary(gp, to)) {
      throw PreconditionError("sequences have different boundaries");
    }
    std::size_t cap = std::max({opts.cap, max_conj_length(from),
                                max_conj_length(to)});
    auto pool = insert_pool(gp, from, opts.pool, cap);
    for (auto const& a : insert_pool(gp, to, opts.pool, cap)) {
      if (std::find(pool.begin(), pool.end(), a) == pool.end()) {
        pool.push_back(a);
      }
    }
    Searcher     s(gp, to, std::move(pool), cap, opts.budget);
    SearchResult result;
    if (s.run(from, opts.depth)) {
      result.certificate = Certificate{opts.pool, cap, s.path()};
    }
    result.nodes = s.nodes();
    return result;
  }

  SearchResult search_trivialization(GroupPresentation const& gp,
                                     YSequence const&         d,
                                     SearchOptions const&     opts) {
    if (!is_identity(gp, d)) {
      throw PreconditionError("not an identity sequence");
    }
    return search_path(gp, d, {}, opts);
  }

}  // namespace asph
