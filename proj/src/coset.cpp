#include "torlen/coset.hpp"

#include <cstdio>

namespace torlen {

  namespace {

    constexpr long undefined = -1;

    class Enumerator {
     public:
      Enumerator(std::size_t generators, std::size_t max_cosets)
          : _cols(2 * generators), _max(max_cosets) {
        new_coset();
      }

      bool overflow() const noexcept {
        return _overflow;
      }
      bool alive(std::size_t c) const noexcept {
        return _parent[c] == c;
      }
      std::size_t allocated() const noexcept {
        return _parent.size();
      }
      std::size_t live() const noexcept {
        return _live;
      }
      long& at(std::size_t c, std::size_t x) {
        return _table[c * _cols + x];
      }

      void scan_and_fill(std::size_t coset, std::vector<std::size_t> const& w) {
        if (w.empty()) {
          return;
        }
        std::size_t f = coset, b = coset;
        long        i = 0, j = static_cast<long>(w.size()) - 1;
        while (true) {
          while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != undefined) {
            f = static_cast<std::size_t>(at(f, w[static_cast<std::size_t>(i)]));
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && at(b, inv(w[static_cast<std::size_t>(j)])) != undefined) {
            b = static_cast<std::size_t>(at(b, inv(w[static_cast<std::size_t>(j)])));
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            auto x        = w[static_cast<std::size_t>(i)];
            at(f, x)      = static_cast<long>(b);
            at(b, inv(x)) = static_cast<long>(f);
            return;
          }
          define(f, w[static_cast<std::size_t>(i)]);
          if (_overflow) {
            return;
          }
        }
      }

      void define(std::size_t c, std::size_t x) {
        if (_live >= _max) {
          _overflow = true;
          return;
        }
        std::size_t d = new_coset();
        at(c, x)      = static_cast<long>(d);
        at(d, inv(x)) = static_cast<long>(c);
      }

      std::vector<std::vector<std::size_t>> compact() const {
        std::vector<long> number(_parent.size(), -1);
        std::size_t       n = 0;
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          if (_parent[c] == c) {
            number[c] = static_cast<long>(n++);
          }
        }
        std::vector<std::vector<std::size_t>> rows;
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          if (_parent[c] != c) {
            continue;
          }
          std::vector<std::size_t> row(_cols);
          for (std::size_t x = 0; x < _cols; ++x) {
            row[x] = static_cast<std::size_t>(number[static_cast<std::size_t>(_table[c * _cols + x])]);
          }
          rows.push_back(std::move(row));
        }
        return rows;
      }

     private:
      static std::size_t inv(std::size_t x) {
        return x ^ 1U;
      }

      std::size_t new_coset() {
        std::size_t c = _parent.size();
        _parent.push_back(c);
        _table.resize(_table.size() + _cols, undefined);
        ++_live;
        return c;
      }

      std::size_t rep(std::size_t c) {
        std::size_t r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          std::size_t next = _parent[c];
          _parent[c]       = r;
          c                = next;
        }
        return r;
      }

      void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) {
          return;
        }
        if (a > b) {
          std::swap(a, b);
        }
        _parent[b] = a;
        --_live;
        queue.push_back(b);
      }

      void coincidence(std::size_t a, std::size_t b) {
        std::vector<std::size_t> queue;
        merge(a, b, queue);
        for (std::size_t q = 0; q < queue.size(); ++q) {
          std::size_t e = queue[q];
          for (std::size_t x = 0; x < _cols; ++x) {
            long fv = at(e, x);
            if (fv == undefined) {
              continue;
            }
            auto f = static_cast<std::size_t>(fv);
            at(f, inv(x)) = undefined;
            std::size_t mu = rep(e), nu = rep(f);
            if (at(mu, x) != undefined) {
              merge(nu, static_cast<std::size_t>(at(mu, x)), queue);
            } else if (at(nu, inv(x)) != undefined) {
              merge(mu, static_cast<std::size_t>(at(nu, inv(x))), queue);
            } else {
              at(mu, x)      = static_cast<long>(nu);
              at(nu, inv(x)) = static_cast<long>(mu);
            }
          }
        }
      }

      std::size_t              _cols;
      std::size_t              _max;
      std::size_t              _live     = 0;
      bool                     _overflow = false;
      std::vector<std::size_t> _parent;
      std::vector<long>        _table;
    };

    std::string digest(std::vector<std::vector<std::size_t>> const& rows) {
      std::uint64_t h   = 14695981039346656037ULL;
      auto          mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
          h ^= (v >> (8 * i)) & 0xFFU;
          h *= 1099511628211ULL;
        }
      };
      mix(rows.size());
      for (auto const& row : rows) {
        for (auto v : row) {
          mix(v);
        }
      }
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
      return buf;
    }

  }  // namespace

  CosetTable todd_coxeter(Presentation const&      p,
                          std::vector<Word> const& subgroup,
                          std::size_t              max_cosets) {
    Alphabet alphabet = p.alphabet();
    auto     columns  = [&](Word const& w) {
      std::vector<std::size_t> out;
      for (int x : code::reduce(alphabet.encode(w))) {
        out.push_back(2 * static_cast<std::size_t>(std::abs(x) - 1) + (x < 0 ? 1 : 0));
      }
      return out;
    };
    std::vector<std::vector<std::size_t>> rels, subs;
    for (auto const& r : p.relators()) {
      rels.push_back(columns(r));
    }
    for (auto const& s : subgroup) {
      subs.push_back(columns(s));
    }

    CosetTable result;
    result.limit = max_cosets;
    Enumerator e(alphabet.size(), std::max<std::size_t>(max_cosets, 1));
    std::size_t const cols = 2 * alphabet.size();

    for (auto const& s : subs) {
      e.scan_and_fill(0, s);
      if (e.overflow()) {
        return result;
      }
    }
    for (std::size_t c = 0; c < e.allocated(); ++c) {
      for (auto const& r : rels) {
        if (!e.alive(c)) {
          break;
        }
        e.scan_and_fill(c, r);
        if (e.overflow()) {
          return result;
        }
      }
      for (std::size_t x = 0; x < cols && e.alive(c); ++x) {
        if (e.at(c, x) == undefined) {
          e.define(c, x);
          if (e.overflow()) {
            return result;
          }
        }
      }
    }
    result.status = CosetStatus::complete;
    result.rows   = e.compact();
    result.index  = result.rows.size();
    result.digest = digest(result.rows);
    return result;
  }

}  // namespace torlen
