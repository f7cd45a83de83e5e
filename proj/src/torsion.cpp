#include "torlen/torsion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "torlen/coset.hpp"

namespace torlen {

  namespace {

    struct Power {
      std::size_t gen;
      long        exponent;  // > 0
    };

    // u v w^-e, children u, v of parent w
    struct Link {
      std::size_t u, v, w;
      long        e;
    };

    std::optional<Power> as_power(Code const& core) {
      if (core.empty()) {
        return std::nullopt;
      }
      for (int x : core) {
        if (x != core.front()) {
          return std::nullopt;
        }
      }
      return Power{static_cast<std::size_t>(std::abs(core.front()) - 1),
                   static_cast<long>(core.size())};
    }

    std::optional<Link> as_link(Code const& core) {
      std::size_t const n = core.size();
      if (n < 3) {
        return std::nullopt;
      }
      for (Code const& base : {core, code::inverse(core)}) {
        for (std::size_t s = 0; s < n; ++s) {
          auto at = [&](std::size_t i) { return base[(s + i) % n]; };
          if (at(0) < 0 || at(1) < 0 || at(2) > 0) {
            continue;
          }
          bool tail = true;
          for (std::size_t i = 3; i < n; ++i) {
            tail = tail && at(i) == at(2);
          }
          int u = at(0), v = at(1), w = -at(2);
          if (tail && u != v && u != w && v != w) {
            return Link{static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1),
                        static_cast<std::size_t>(w - 1), static_cast<long>(n - 2)};
          }
        }
      }
      return std::nullopt;
    }

    std::vector<Code> cores(Presentation const& p, Alphabet const& alphabet) {
      std::vector<Code> out;
      for (auto const& r : p.relators()) {
        Code c = alphabet.encode(cyclic_reduce(r).core);
        if (!c.empty()) {
          out.push_back(std::move(c));
        }
      }
      return out;
    }

    ClassVerdict reject(std::string reason) {
      return ClassVerdict{false, std::move(reason)};
    }

  }  // namespace

  ClassVerdict certified_class(Presentation const& p0) {
    Presentation      p = canonicalize(p0);
    Alphabet          alphabet = p.alphabet();
    std::size_t const k        = alphabet.size();

    std::vector<long> gcds(k, 0);
    std::vector<Link> links;
    for (auto const& c : cores(p, alphabet)) {
      if (auto pw = as_power(c)) {
        gcds[pw->gen] = std::gcd(gcds[pw->gen], pw->exponent);
      } else if (auto ln = as_link(c)) {
        links.push_back(*ln);
      } else {
        return reject("relator " + alphabet.decode(c).str() + " is neither a power nor a link");
      }
    }

    std::vector<std::size_t> component(k);
    std::iota(component.begin(), component.end(), 0);
    auto find = [&](std::size_t x) {
      while (component[x] != x) {
        x = component[x] = component[component[x]];
      }
      return x;
    };
    for (auto const& l : links) {
      component[find(l.u)] = find(l.w);
      component[find(l.v)] = find(l.w);
    }

    std::vector<int> as_parent(k, 0), as_child(k, 0);
    for (auto const& l : links) {
      ++as_parent[l.w];
      ++as_child[l.u];
      ++as_child[l.v];
    }
    std::map<std::size_t, std::size_t> gens_in, links_in, roots_in;
    for (std::size_t g = 0; g < k; ++g) {
      ++gens_in[find(g)];
      if (as_parent[g] > 1 || as_child[g] > 1) {
        return reject(alphabet.symbol(g) + " occurs in two links in the same role");
      }
      if (as_parent[g] == 1 && gcds[g] != 0) {
        return reject(alphabet.symbol(g) + " is a parent carrying a power relator");
      }
      if (as_parent[g] == 1 && as_child[g] == 0) {
        ++roots_in[find(g)];
      }
    }
    for (auto const& l : links) {
      ++links_in[find(l.w)];
    }
    for (auto const& [root, links_count] : links_in) {
      if (gens_in[root] != 2 * links_count + 1 || roots_in[root] != 1) {
        return reject("linked component is not a binary tree");
      }
    }
    for (std::size_t g = 0; g < k; ++g) {
      bool leaf = as_parent[g] == 0 && as_child[g] == 1;
      if (leaf && gcds[g] == 1) {
        return reject("leaf " + alphabet.symbol(g) + " is trivial");
      }
    }
    return ClassVerdict{true, {}};
  }

  std::set<std::string> visible_torsion_generators(Presentation const& p) {
    Alphabet              alphabet = p.alphabet();
    std::set<std::string> out;
    for (auto const& c : cores(p, alphabet)) {
      if (auto pw = as_power(c)) {
        out.insert(alphabet.symbol(pw->gen));
      }
    }
    return out;
  }

  long power_gcd(Presentation const& p, std::string const& g) {
    Alphabet    alphabet = p.alphabet();
    std::size_t idx      = alphabet.index(g);
    long        d        = 0;
    for (auto const& c : cores(p, alphabet)) {
      if (auto pw = as_power(c); pw && pw->gen == idx) {
        d = std::gcd(d, pw->exponent);
      }
    }
    return d;
  }

  QuotientStep torsion_quotient_step(Presentation const& p) {
    QuotientStep step;
    step.killed       = visible_torsion_generators(p);
    step.presentation = kill_generators(p, step.killed);
    step.sound        = certified_class(p).certified;
    return step;
  }

  TorsionLengthReport torsion_length(Presentation const& p, std::size_t max_iter) {
    TorsionLengthReport report;
    report.max_iter = max_iter;

    Presentation                 cur = p;
    std::optional<TorsionTraceEntry> pending;
    bool                         all_sound = true;
    while (report.iterations < max_iter) {
      QuotientStep step = torsion_quotient_step(cur);
      ++report.iterations;
      if (step.killed.empty()) {
        report.fixed_point = true;
        break;
      }
      all_sound = all_sound && step.sound;
      bool effective = std::any_of(step.killed.begin(), step.killed.end(),
                                   [&](std::string const& g) { return power_gcd(cur, g) != 1; });
      if (!pending) {
        pending = TorsionTraceEntry{cur, {}, {}, true};
      }
      pending->killed.insert(step.killed.begin(), step.killed.end());
      pending->sound = pending->sound && step.sound;
      cur            = std::move(step.presentation);
      if (effective) {
        pending->after = cur;
        report.trace.push_back(std::move(*pending));
        pending.reset();
      }
    }
    report.value              = report.trace.size();
    report.sound              = all_sound && certified_class(cur).certified;
    report.exact              = report.fixed_point && report.sound;
    report.final_presentation = std::move(cur);
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<int> keys(Code const& c) {
      std::vector<int> out;
      for (int x : c) {
        out.push_back(2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0));
      }
      return out;
    }

    // Least rotation of c or its inverse, by generator order.
    bool is_canonical_cyclic(Code const& c) {
      auto const own = keys(c);
      for (Code const& base : {c, code::inverse(c)}) {
        for (std::size_t s = 0; s < base.size(); ++s) {
          Code r(base.begin() + static_cast<long>(s), base.end());
          r.insert(r.end(), base.begin(), base.begin() + static_cast<long>(s));
          if (keys(r) < own) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_proper_power(Code const& c) {
      std::size_t const n = c.size();
      for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) {
          continue;
        }
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) {
          periodic = c[i] == c[i - d];
        }
        if (periodic) {
          return true;
        }
      }
      return false;
    }

    // Cyclically reduced, canonical, primitive words in length-lex order.
    std::vector<Code> candidate_words(std::size_t k, std::size_t max_len) {
      std::vector<Code> out;
      std::vector<int>  letters;
      for (std::size_t g = 0; g < k; ++g) {
        letters.push_back(static_cast<int>(g + 1));
        letters.push_back(-static_cast<int>(g + 1));
      }
      Code cur;
      auto rec = [&](auto&& self, std::size_t len) -> void {
        if (cur.size() == len) {
          if (cur.front() != -cur.back() && is_canonical_cyclic(cur)
              && !is_proper_power(cur)) {
            out.push_back(cur);
          }
          return;
        }
        for (int x : letters) {
          if (!cur.empty() && cur.back() == -x) {
            continue;
          }
          cur.push_back(x);
          self(self, len);
          cur.pop_back();
        }
      };
      for (std::size_t len = 1; len <= max_len; ++len) {
        rec(rec, len);
      }
      return out;
    }

    // Integer row lattice in echelon form, for membership tests.
    class Lattice {
     public:
      explicit Lattice(IntMatrix rows) {
        std::size_t const cols = rows.empty() ? 0 : rows[0].size();
        std::size_t       r    = 0;
        for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
          // gcd elimination below row r in column c
          while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
              if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) {
                best = i;
              }
            }
            if (best == rows.size()) {
              break;
            }
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
              BigInt q = rows[i][c] / rows[r][c];
              for (std::size_t j = c; j < cols; ++j) {
                rows[i][j] -= q * rows[r][j];
              }
              clean = clean && rows[i][c] == 0;
            }
            if (clean) {
              _pivots.push_back(c);
              _rows.push_back(rows[r]);
              ++r;
              break;
            }
          }
        }
      }

      bool contains(std::vector<BigInt> v) const {
        for (std::size_t i = 0; i < _rows.size(); ++i) {
          std::size_t c = _pivots[i];
          if (v[c] % _rows[i][c] != 0) {
            return false;
          }
          BigInt q = v[c] / _rows[i][c];
          for (std::size_t j = c; j < v.size(); ++j) {
            v[j] -= q * _rows[i][j];
          }
        }
        return std::all_of(v.begin(), v.end(), [](BigInt const& x) { return x == 0; });
      }

     private:
      std::vector<std::size_t>         _pivots;
      std::vector<std::vector<BigInt>> _rows;
    };

    std::vector<BigInt> exponent_sums(Code const& c, std::size_t k, long n) {
      std::vector<BigInt> v(k, 0);
      for (int x : c) {
        v[static_cast<std::size_t>(std::abs(x) - 1)] += (x > 0 ? n : -n);
      }
      return v;
    }

    // A finite quotient as a permutation action on cosets of the trivial
    // subgroup.
    class FiniteQuotient {
     public:
      explicit FiniteQuotient(std::vector<std::vector<std::size_t>> rows)
          : _rows(std::move(rows)) {}

      // Order of the image of c.
      long order(Code const& c) const {
        std::size_t const        n = _rows.size();
        std::vector<std::size_t> image(n);
        for (std::size_t start = 0; start < n; ++start) {
          std::size_t at = start;
          for (int x : c) {
            at = _rows[at][2 * static_cast<std::size_t>(std::abs(x) - 1) + (x < 0 ? 1 : 0)];
          }
          image[start] = at;
        }
        long              result = 1;
        std::vector<bool> visited(n, false);
        for (std::size_t s = 0; s < n; ++s) {
          long len = 0;
          for (std::size_t at = s; !visited[at]; at = image[at]) {
            visited[at] = true;
            ++len;
          }
          if (len > 0) {
            result = std::lcm(result, len);
          }
        }
        return result;
      }

     private:
      std::vector<std::vector<std::size_t>> _rows;
    };

    // Quotients by g^lcm(m, d_g) for all g and small m, d_g the gcd of g's
    // power relators, that enumerate within a small bound.
    std::vector<FiniteQuotient> small_quotients(std::vector<std::string> const& gens,
                                                std::vector<Word> const&        rels) {
      constexpr std::size_t coset_bound = 2000;
      Presentation const    p(gens, rels);
      std::vector<FiniteQuotient> out;
      for (long m = 2; m <= 7; ++m) {
        std::vector<Word> extended = rels;
        for (auto const& g : gens) {
          long d = power_gcd(p, g);
          extended.push_back(Word::generator(g, d == 0 ? m : std::lcm(m, d)));
        }
        auto table = todd_coxeter(Presentation(gens, std::move(extended)), {}, coset_bound);
        if (table.complete() && table.index > 1) {
          out.emplace_back(std::move(table.rows));
        }
      }
      return out;
    }

    Code power_code(Code const& c, long n) {
      Code out;
      for (long i = 0; i < n; ++i) {
        out.insert(out.end(), c.begin(), c.end());
      }
      return code::reduce(std::move(out));
    }

  }  // namespace

  std::vector<TorsionCertificate>
  torsion_certificate_search(Presentation const&       p,
                             std::size_t               level,
                             CertificateBudgets const& budgets) {
    Alphabet const    alphabet   = p.alphabet();
    auto const        candidates = candidate_words(alphabet.size(), budgets.word_bound);
    ConsequenceBudget budget{budgets.consequence_budget, budgets.max_states};
    ConsequenceBudget redundancy_budget{budgets.consequence_budget, 256};

    std::vector<TorsionCertificate> all;
    std::vector<bool>               done(candidates.size(), false);
    auto adjoined = std::make_shared<std::vector<TorsionCertificate> const>();

    std::vector<TorsionCertificate> kept;  // adjoined certificates
    for (std::size_t lvl = 1; lvl <= level; ++lvl) {
      std::vector<Word> rels = p.relators();
      for (auto const& c : *adjoined) {
        rels.push_back(c.word);
      }
      ConsequenceSearch search(alphabet, rels);
      // w^n = e forces n * w into the relation lattice of the
      // abelianization, so other exponents are not searched
      Lattice const lattice(exponent_matrix(Presentation(p.generators(), rels)));
      // likewise the order of w in any finite quotient divides n
      auto const quotients = small_quotients(p.generators(), rels);
      bool              progress = false;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (done[i]) {
          continue;
        }
        long step = 1;
        for (auto const& q : quotients) {
          step = std::lcm(step, q.order(candidates[i]));
        }
        for (long n = step; n <= static_cast<long>(budgets.exponent_bound); n += step) {
          if (!lattice.contains(exponent_sums(candidates[i], alphabet.size(), n))) {
            continue;
          }
          Word target = alphabet.decode(power_code(candidates[i], n));
          if (auto proof = search.prove(target, budget)) {
            all.push_back({alphabet.decode(candidates[i]), n, lvl, std::move(*proof), rels,
                           adjoined});
            done[i]  = true;
            progress = true;
            break;
          }
        }
      }
      if (!progress) {
        break;  // later levels see the same relators
      }
      // adjoin the new words, skipping those already trivial modulo the
      // relators kept so far; the normal closure is unchanged
      for (auto const& c : all) {
        if (c.level != lvl) {
          continue;
        }
        std::vector<Word> base = p.relators();
        for (auto const& k : kept) {
          base.push_back(k.word);
        }
        if (!ConsequenceSearch(alphabet, base).prove(c.word, redundancy_budget)) {
          kept.push_back(c);
        }
      }
      adjoined = std::make_shared<std::vector<TorsionCertificate> const>(kept);
    }
    return all;
  }

  bool verify_certificate(Presentation const& p, TorsionCertificate const& c) {
    if (c.exponent < 1 || c.level < 1 || !c.adjoined) {
      return false;
    }
    auto const& adj = *c.adjoined;
    if (c.relators.size() != p.relators().size() + adj.size()) {
      return false;
    }
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      if (c.relators[i] != p.relators()[i]) {
        return false;
      }
    }
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (c.relators[p.relators().size() + i] != adj[i].word || adj[i].level >= c.level
          || !verify_certificate(p, adj[i])) {
        return false;
      }
    }
    return verify(c.proof, c.relators, c.word.power(c.exponent));
  }

}  // namespace torlen
