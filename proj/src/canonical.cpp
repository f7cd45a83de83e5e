// Canonical form of a presentation up to generator renaming.
//
// Generators are ordered by iterated colour refinement on the relator
// hypergraph: a generator's colour is refined by the multiset of "views" of
// the relators it occurs in, read cyclically from each occurrence.  When the
// refinement is stable but not discrete, the lowest-indexed member of the
// first non-singleton class is individualised and refinement resumes.
// Individualisation is name-independent whenever colour classes are orbits,
// which holds for the tree-shaped families built by this library.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "torlen/presentation.hpp"

namespace torlen {

  namespace {

    using View = std::vector<int>;

    // Reading of a cyclic word starting at position `start`, oriented so
    // the starting letter is positive.  Letters become (colour, sign,
    // local id), the local id numbering generators by first appearance.
    View view(Code const& core, std::size_t start, std::vector<int> const& colours) {
      std::size_t const n = core.size();
      bool const forward  = core[start] > 0;
      View              out;
      out.reserve(3 * n);
      std::map<int, int> local;
      for (std::size_t k = 0; k < n; ++k) {
        int x = forward ? core[(start + k) % n] : -core[(start + n - k) % n];
        int g = std::abs(x) - 1;
        auto [it, fresh] = local.emplace(g, static_cast<int>(local.size()));
        out.push_back(colours[static_cast<std::size_t>(g)]);
        out.push_back(x > 0 ? 1 : -1);
        out.push_back(it->second);
      }
      return out;
    }

    // Replaces colours by ranks of (old colour, sorted views).
    std::vector<int> refine_once(std::vector<Code> const& cores,
                                 std::vector<int> const&  colours) {
      std::size_t const k = colours.size();
      std::vector<std::vector<View>> views(k);
      for (auto const& core : cores) {
        for (std::size_t i = 0; i < core.size(); ++i) {
          views[static_cast<std::size_t>(std::abs(core[i]) - 1)].push_back(
              view(core, i, colours));
        }
      }
      using Signature = std::pair<int, std::vector<View>>;
      std::vector<Signature> sigs(k);
      for (std::size_t g = 0; g < k; ++g) {
        std::sort(views[g].begin(), views[g].end());
        sigs[g] = {colours[g], std::move(views[g])};
      }
      std::vector<Signature const*> order;
      for (auto const& s : sigs) {
        order.push_back(&s);
      }
      std::sort(order.begin(), order.end(),
                [](auto const* a, auto const* b) { return *a < *b; });
      std::map<Signature const*, int> rank;
      int                             next = -1;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || *order[i - 1] < *order[i]) {
          ++next;
        }
        rank[order[i]] = next;
      }
      std::vector<int> out(k);
      for (std::size_t g = 0; g < k; ++g) {
        out[g] = rank[&sigs[g]];
      }
      return out;
    }

    std::size_t count_classes(std::vector<int> const& colours) {
      return std::set<int>(colours.begin(), colours.end()).size();
    }

    std::vector<int> refine(std::vector<Code> const& cores, std::vector<int> colours) {
      std::size_t classes = count_classes(colours);
      while (true) {
        auto        next        = refine_once(cores, colours);
        std::size_t next_classes = count_classes(next);
        colours                  = std::move(next);
        if (next_classes == classes) {
          return colours;
        }
        classes = next_classes;
      }
    }

    int letter_key(int x) {
      return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0);
    }

    std::vector<int> keys(Code const& c) {
      std::vector<int> out;
      out.reserve(c.size());
      for (int x : c) {
        out.push_back(letter_key(x));
      }
      return out;
    }

    Code least_rotation(Code const& core) {
      Code best = core;
      auto best_keys = keys(best);
      for (Code const& base : {core, code::inverse(core)}) {
        for (std::size_t s = 0; s < base.size(); ++s) {
          Code r(base.begin() + static_cast<long>(s), base.end());
          r.insert(r.end(), base.begin(), base.begin() + static_cast<long>(s));
          auto k = keys(r);
          if (k < best_keys) {
            best      = std::move(r);
            best_keys = std::move(k);
          }
        }
      }
      return best;
    }

  }  // namespace

  Presentation canonicalize(Presentation const& p, CanonicalizeOptions const& options) {
    std::vector<std::string> gens = p.generators();
    std::vector<Word>        cores_w;
    for (auto const& r : p.relators()) {
      Word core = cyclic_reduce(r).core;
      if (!core.empty()) {
        cores_w.push_back(std::move(core));
      }
    }
    if (options.drop_unused_generators) {
      std::set<std::string> used;
      for (auto const& c : cores_w) {
        for (auto const& l : c.letters()) {
          used.insert(l.symbol);
        }
      }
      std::erase_if(gens, [&](std::string const& g) { return used.count(g) == 0; });
    }
    Alphabet          alphabet(gens);
    std::vector<Code> cores;
    for (auto const& c : cores_w) {
      cores.push_back(alphabet.encode(c));
    }

    std::size_t const k = gens.size();
    std::vector<int>  colours(k, 0);
    colours = refine(cores, std::move(colours));
    while (count_classes(colours) < k) {
      std::map<int, std::size_t> sizes;
      for (int c : colours) {
        ++sizes[c];
      }
      int target = -1;
      for (auto const& [c, n] : sizes) {
        if (n > 1) {
          target = c;
          break;
        }
      }
      std::size_t chosen = 0;
      while (colours[chosen] != target) {
        ++chosen;
      }
      for (std::size_t g = 0; g < k; ++g) {
        colours[g] = 2 * colours[g] + ((colours[g] == target && g != chosen) ? 1 : 0);
      }
      colours = refine(cores, std::move(colours));
    }

    // colours are now a permutation of 0..k-1
    std::vector<Code> relabelled;
    for (auto const& c : cores) {
      Code out;
      out.reserve(c.size());
      for (int x : c) {
        int g = colours[static_cast<std::size_t>(std::abs(x) - 1)] + 1;
        out.push_back(x > 0 ? g : -g);
      }
      relabelled.push_back(least_rotation(out));
    }
    std::sort(relabelled.begin(), relabelled.end(), [](Code const& a, Code const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return keys(a) < keys(b);
    });
    relabelled.erase(std::unique(relabelled.begin(), relabelled.end()), relabelled.end());

    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back("g" + std::to_string(i));
    }
    Alphabet          out_alphabet(names);
    std::vector<Word> rels;
    for (auto const& c : relabelled) {
      rels.push_back(out_alphabet.decode(c));
    }
    return Presentation(std::move(names), std::move(rels));
  }

}  // namespace torlen
