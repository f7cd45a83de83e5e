#include "torlen/constructions.hpp"

#include <set>

#include "torlen/error.hpp"
#include "torlen/stallings.hpp"

namespace torlen {

  namespace {

    Word gen(std::string const& g, long e = 1) {
      return Word::generator(g, e);
    }

    // Binary strings of length `len` in lexicographic order.
    std::vector<std::string> strings_of_length(std::size_t len) {
      std::vector<std::string> out{""};
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::string> next;
        for (auto const& s : out) {
          next.push_back(s + "0");
          next.push_back(s + "1");
        }
        out = std::move(next);
      }
      return out;
    }

    // Renames p's generators that collide with `reserved`.
    Presentation avoid(Presentation const&                 p,
                       std::set<std::string> const&        reserved,
                       std::map<std::string, std::string>& renamed) {
      std::set<std::string> taken(p.generators().begin(), p.generators().end());
      taken.insert(reserved.begin(), reserved.end());
      Substitution             sub;
      std::vector<std::string> gens;
      for (auto const& g : p.generators()) {
        if (reserved.count(g) != 0) {
          std::string fresh = fresh_name(g, taken);
          taken.insert(fresh);
          renamed[g] = fresh;
          sub[g]     = gen(fresh);
          gens.push_back(fresh);
        } else {
          gens.push_back(g);
        }
      }
      if (sub.empty()) {
        return p;
      }
      std::vector<Word> rels;
      for (auto const& r : p.relators()) {
        rels.push_back(substitute(r, sub));
      }
      return Presentation(std::move(gens), std::move(rels));
    }

  }  // namespace

  Presentation build_pjkl(long j, long k, long l) {
    if (j < 2 || k < 2 || l < 2) {
      throw Error("P_{j,k,l} needs j, k, l >= 2");
    }
    return Presentation({"x", "y", "z"},
                        {gen("x", j), gen("y", k), gen("x") * gen("y") * gen("z", -l)});
  }

  std::string pn_generator(std::string const& bits) {
    return "x_" + bits;
  }

  Presentation build_pn(std::size_t n, long exponent) {
    if (exponent < 2) {
      throw Error("P_n exponent must be >= 2");
    }
    if (n == 0) {
      return Presentation();
    }
    std::vector<std::string> gens;
    for (std::size_t len = 0; len < n; ++len) {
      for (auto const& s : strings_of_length(len)) {
        gens.push_back(pn_generator(s));
      }
    }
    std::vector<Word> rels;
    for (auto const& s : strings_of_length(n - 1)) {
      rels.push_back(gen(pn_generator(s), exponent));
    }
    for (std::size_t len = 0; len + 1 < n; ++len) {
      for (auto const& s : strings_of_length(len)) {
        rels.push_back(gen(pn_generator(s + "0")) * gen(pn_generator(s + "1"))
                       * gen(pn_generator(s), -exponent));
      }
    }
    return Presentation(std::move(gens), std::move(rels));
  }

  TgenResult build_tgen(Presentation const& p0) {
    TgenResult   out;
    Presentation p = avoid(p0, {"a", "b", "t"}, out.renamed);
    std::size_t const n    = p.generators().size();
    std::size_t const nrel = p.relators().size();

    Presentation ab({"a", "b"}, {});
    Presentation q = free_product(p, ab).presentation;

    std::vector<std::pair<Word, Word>> pairs;
    for (std::size_t i = 0; i <= n; ++i) {
      auto e    = static_cast<long>(i);
      Word conj = gen("b", -e) * gen("a") * gen("b", e);
      Word left = i == 0 ? conj : gen(p.generators()[i - 1]) * conj;
      pairs.emplace_back(free_reduce(left), free_reduce(gen("a", -e) * gen("b") * gen("a", e)));
    }
    out.intermediate = hnn_presentation(q, pairs, "t");

    // the i = 0 relator t^-1 a t b^-1 defines b; then each x_i in turn sits
    // in the first remaining HNN relator
    Presentation cur = eliminate_generator(out.intermediate, "b", nrel).presentation;
    Substitution defs;
    for (std::size_t i = 0; i < n; ++i) {
      auto const& g   = p.generators()[i];
      auto        res = eliminate_generator(cur, g, nrel);
      defs[g]         = res.definition;
      cur             = std::move(res.presentation);
    }
    out.presentation = std::move(cur);
    for (auto const& g : p0.generators()) {
      auto it       = out.renamed.find(g);
      out.images[g] = defs.at(it == out.renamed.end() ? g : it->second);
    }
    return out;
  }

  LnResult build_ln(Presentation const& p0) {
    LnResult     out;
    Presentation p = avoid(p0, {"x", "y"}, out.renamed);

    SubgroupGraph graph = build_subgroup_graph(p.generators(), p.relators());
    out.rank            = rank(graph);
    out.basis           = free_basis(graph);
    out.degenerate      = out.rank == 0;

    Word a = gen("y") * gen("x") * gen("y");
    Word b = gen("x") * gen("y") * gen("x") * gen("y") * gen("x");

    std::vector<std::string> gens = p.generators();
    gens.push_back("x");
    gens.push_back("y");
    std::vector<Word> rels{gen("x", 2), gen("y", 3)};
    for (std::size_t i = 1; i <= out.basis.size(); ++i) {
      auto e = static_cast<long>(i);
      Word c = b.power(-e) * a * b.power(e);
      rels.push_back(free_reduce(out.basis[i - 1] * c.inverse()));
    }
    out.presentation = Presentation(std::move(gens), std::move(rels));
    return out;
  }

  Presentation build_qn(std::size_t n) {
    if (n == 0) {
      throw Error("Q_n needs n >= 1");
    }
    Presentation g({"z"}, {gen("z", 2)});
    for (std::size_t i = 1; i < n; ++i) {
      g = build_ln(g).presentation;
    }
    return g;
  }

  Presentation build_chain(std::size_t m) {
    std::vector<std::string> gens;
    std::vector<Word>        rels;
    for (std::size_t i = 0; i <= m; ++i) {
      Presentation factor = build_pn(i);
      std::string  prefix = "f" + std::to_string(i) + ".";
      Substitution sub;
      for (auto const& g : factor.generators()) {
        gens.push_back(prefix + g);
        sub[g] = gen(prefix + g);
      }
      for (auto const& r : factor.relators()) {
        rels.push_back(substitute(r, sub));
      }
    }
    return Presentation(std::move(gens), std::move(rels));
  }

}  // namespace torlen
