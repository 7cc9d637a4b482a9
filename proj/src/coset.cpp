#include "asph/coset.hpp"

#include <deque>
#include <limits>

#include "asph/error.hpp"

namespace asph {

  namespace {

    constexpr std::size_t UNDEFINED = std::numeric_limits<std::size_t>::max();

    class Enumerator {
     public:
      Enumerator(std::size_t ncols, std::size_t budget)
          : _ncols(ncols), _budget(budget) {
        new_row();
      }

      // Returns false when the coset cap was hit.
      bool scan_and_fill(std::size_t c, std::vector<std::size_t> const& w) {
        if (w.empty()) {
          return true;
        }
        std::size_t f = c, b = c;
        std::size_t i = 0, j = w.size() - 1;
        while (true) {
          while (i <= j && _table[f][w[i]] != UNDEFINED) {
            f = _table[f][w[i]];
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return true;
          }
          while (j >= i && _table[b][w[j] ^ 1] != UNDEFINED) {
            b = _table[b][w[j] ^ 1];
            if (j == 0) {
              // the whole word scanned backwards
              coincidence(f, b);
              return true;
            }
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return true;
          }
          if (i == j) {
            _table[f][w[i]]     = b;
            _table[b][w[i] ^ 1] = f;
            return true;
          }
          if (!define(f, w[i])) {
            return false;
          }
        }
      }

      bool define(std::size_t c, std::size_t x) {
        if (_table.size() >= _budget) {
          return false;
        }
        std::size_t d = new_row();
        _table[c][x]     = d;
        _table[d][x ^ 1] = c;
        return true;
      }

      bool live(std::size_t c) const {
        return _parent[c] == c;
      }

      std::size_t rows() const {
        return _table.size();
      }

      std::size_t entry(std::size_t c, std::size_t x) const {
        return _table[c][x];
      }

      std::size_t rep(std::size_t c) {
        std::size_t root = c;
        while (_parent[root] != root) {
          root = _parent[root];
        }
        while (_parent[c] != root) {
          std::size_t next = _parent[c];
          _parent[c]       = root;
          c                = next;
        }
        return root;
      }

     private:
      std::size_t new_row() {
        _table.emplace_back(_ncols, UNDEFINED);
        _parent.push_back(_parent.size());
        return _table.size() - 1;
      }

      void merge(std::size_t k, std::size_t l) {
        std::size_t k1 = rep(k), l1 = rep(l);
        if (k1 == l1) {
          return;
        }
        if (k1 > l1) {
          std::swap(k1, l1);
        }
        _parent[l1] = k1;
        _queue.push_back(l1);
      }

      void coincidence(std::size_t a, std::size_t b) {
        _queue.clear();
        merge(a, b);
        for (std::size_t q = 0; q < _queue.size(); ++q) {
          std::size_t e = _queue[q];
          for (std::size_t x = 0; x < _ncols; ++x) {
            std::size_t f = _table[e][x];
            if (f == UNDEFINED) {
              continue;
            }
            _table[f][x ^ 1] = UNDEFINED;
            std::size_t e1 = rep(e), f1 = rep(f);
            if (_table[e1][x] != UNDEFINED) {
              merge(f1, _table[e1][x]);
            } else if (_table[f1][x ^ 1] != UNDEFINED) {
              merge(e1, _table[f1][x ^ 1]);
            } else {
              _table[e1][x]     = f1;
              _table[f1][x ^ 1] = e1;
            }
          }
        }
      }

      std::size_t                           _ncols;
      std::size_t                           _budget;
      std::vector<std::vector<std::size_t>> _table;
      std::vector<std::size_t>              _parent;
      std::vector<std::size_t>              _queue;
    };

    std::vector<std::size_t> columns(FreeWord const& w) {
      std::vector<std::size_t> out;
      out.reserve(w.length());
      for (auto const& x : w.letters()) {
        out.push_back(CosetTable::column(x));
      }
      return out;
    }

  }  // namespace

  CosetTable::CosetTable(Alphabet                              alphabet,
                         std::vector<std::vector<std::size_t>> rows)
      : _alphabet(std::move(alphabet)), _rows(std::move(rows)) {
    std::size_t const ncols = 2 * _alphabet.size();
    for (auto const& row : _rows) {
      if (row.size() != ncols) {
        throw Error("coset table row has the wrong width");
      }
      for (auto c : row) {
        if (c >= _rows.size()) {
          throw Error("coset table is incomplete");
        }
      }
    }
    _reps.assign(_rows.size(), FreeWord(_alphabet));
    std::vector<bool>       seen(_rows.size(), false);
    std::deque<std::size_t> queue;
    if (!_rows.empty()) {
      seen[0] = true;
      queue.push_back(0);
    }
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < ncols; ++x) {
        std::size_t d = _rows[c][x];
        if (!seen[d]) {
          seen[d] = true;
          _reps[d] = _reps[c]
                     * FreeWord::generator(
                         _alphabet, x / 2, x % 2 == 0 ? 1 : -1);
          queue.push_back(d);
        }
      }
    }
  }

  std::size_t CosetTable::trace(std::size_t coset, FreeWord const& w) const {
    check_same_alphabet(w.alphabet(), _alphabet);
    for (auto const& x : w.letters()) {
      coset = _rows[coset][column(x)];
    }
    return coset;
  }

  CosetResult coset_enumeration(GroupPresentation const&     gp,
                                std::vector<FreeWord> const& subgroup,
                                std::size_t                  budget) {
    if (budget == 0) {
      throw PreconditionError("coset budget must be at least 1");
    }
    std::size_t const ncols = 2 * gp.alphabet().size();
    Enumerator        e(ncols, budget);
    CosetResult       result;

    for (auto const& h : subgroup) {
      check_same_alphabet(h.alphabet(), gp.alphabet());
      if (!e.scan_and_fill(0, columns(h))) {
        result.defined = e.rows();
        return result;
      }
    }
    std::vector<std::vector<std::size_t>> relators;
    for (auto const& r : gp.relators()) {
      relators.push_back(columns(r.word));
    }

    for (std::size_t c = 0; c < e.rows(); ++c) {
      if (!e.live(c)) {
        continue;
      }
      for (auto const& r : relators) {
        if (!e.scan_and_fill(c, r)) {
          result.defined = e.rows();
          return result;
        }
        if (!e.live(c)) {
          break;
        }
      }
      if (!e.live(c)) {
        continue;
      }
      for (std::size_t x = 0; x < ncols; ++x) {
        if (e.entry(c, x) == UNDEFINED && !e.define(c, x)) {
          result.defined = e.rows();
          return result;
        }
      }
    }
    result.defined = e.rows();

    // standardize
    std::vector<std::size_t> renumber(e.rows(), UNDEFINED);
    std::vector<std::size_t> order;
    renumber[e.rep(0)] = 0;
    order.push_back(e.rep(0));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t x = 0; x < ncols; ++x) {
        std::size_t d = e.rep(e.entry(order[k], x));
        if (renumber[d] == UNDEFINED) {
          renumber[d] = order.size();
          order.push_back(d);
        }
      }
    }
    std::vector<std::vector<std::size_t>> rows(order.size(),
                                               std::vector<std::size_t>(ncols));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t x = 0; x < ncols; ++x) {
        rows[k][x] = renumber[e.rep(e.entry(order[k], x))];
      }
    }
    result.table.emplace(gp.alphabet(), std::move(rows));
    return result;
  }

}  // namespace asph
