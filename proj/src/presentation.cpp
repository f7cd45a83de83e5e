#include "torlen/presentation.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "torlen/error.hpp"

namespace torlen {

  Presentation::Presentation(std::vector<std::string> generators,
                             std::vector<Word>        relators)
      : _generators(std::move(generators)) {
    Alphabet alphabet(_generators);  // rejects duplicates
    for (auto const& g : _generators) {
      if (!is_valid_symbol(g)) {
        throw Error("invalid generator symbol '" + g + "'");
      }
    }
    _relators.reserve(relators.size());
    for (auto& r : relators) {
      for (auto const& l : r.letters()) {
        if (!alphabet.contains(l.symbol)) {
          throw Error("relator mentions undeclared generator '" + l.symbol + "'");
        }
      }
      _relators.push_back(free_reduce(r));
    }
  }

  bool Presentation::has_generator(std::string_view name) const {
    return std::find(_generators.begin(), _generators.end(), name)
           != _generators.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  bool PresentationMorphism::all_verified() const {
    return std::all_of(relators.begin(), relators.end(), [](auto const& r) {
      return r.status != RelatorCheck::unverified;
    });
  }

  PresentationMorphism make_morphism(Presentation const&      source,
                                     Presentation const&      target,
                                     Substitution             images,
                                     ConsequenceBudget const& budget) {
    for (auto const& g : source.generators()) {
      if (images.find(g) == images.end()) {
        throw Error("morphism has no image for generator '" + g + "'");
      }
    }
    for (auto const& [g, w] : images) {
      for (auto const& l : w.letters()) {
        if (!target.has_generator(l.symbol)) {
          throw Error("image of '" + g + "' mentions '" + l.symbol
                      + "', not a target generator");
        }
      }
    }

    std::set<Word> target_forms;
    for (auto const& r : target.relators()) {
      target_forms.insert(minimal_cyclic_form(r));
    }

    PresentationMorphism m{source, target, std::move(images), {}};
    std::unique_ptr<ConsequenceSearch> search;
    for (auto const& r : source.relators()) {
      // Images may share names with source generators, so substitute
      // simultaneously through a renamed copy.
      Word image;
      for (auto const& l : r.letters()) {
        Word const& x = m.images.at(l.symbol);
        image *= l.sign > 0 ? x : x.inverse();
      }
      image = free_reduce(image);

      MorphismRelator check;
      if (image.empty() || target_forms.count(minimal_cyclic_form(image)) > 0) {
        check.status = RelatorCheck::literal;
      } else {
        if (!search) {
          search = std::make_unique<ConsequenceSearch>(target.alphabet(),
                                                       target.relators());
        }
        if (auto proof = search->prove(image, budget)) {
          check.status = RelatorCheck::consequence;
          check.proof  = std::move(proof);
        }
      }
      m.relators.push_back(std::move(check));
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions on presentations
  ////////////////////////////////////////////////////////////////////////

  std::string fresh_name(std::string const& name, std::set<std::string> const& taken) {
    if (taken.count(name) == 0) {
      return name;
    }
    for (std::size_t k = 1;; ++k) {
      std::string candidate = name + "#" + std::to_string(k);
      if (taken.count(candidate) == 0) {
        return candidate;
      }
    }
  }

  namespace {
    Substitution identity_images(Presentation const& p) {
      Substitution s;
      for (auto const& g : p.generators()) {
        s.emplace(g, Word::generator(g));
      }
      return s;
    }
  }  // namespace

  FreeProduct free_product(Presentation const& p, Presentation const& q) {
    std::set<std::string> taken(p.generators().begin(), p.generators().end());
    taken.insert(q.generators().begin(), q.generators().end());

    std::vector<std::string> gens = p.generators();
    Substitution             rename;
    Substitution             right_images;
    for (auto const& g : q.generators()) {
      std::string name = g;
      if (p.has_generator(g)) {
        name = fresh_name(g, taken);
        taken.insert(name);
        rename.emplace(g, Word::generator(name));
      }
      gens.push_back(name);
      right_images.emplace(g, Word::generator(name));
    }

    std::vector<Word> rels = p.relators();
    for (auto const& r : q.relators()) {
      rels.push_back(substitute(r, rename));
    }
    Presentation result(std::move(gens), std::move(rels));
    auto left  = make_morphism(p, result, identity_images(p));
    auto right = make_morphism(q, result, std::move(right_images));
    return {std::move(result), std::move(left), std::move(right)};
  }

  Presentation adjoin_relators(Presentation const& p, std::vector<Word> const& s) {
    std::vector<Word> rels = p.relators();
    rels.insert(rels.end(), s.begin(), s.end());
    return Presentation(p.generators(), std::move(rels));
  }

  Presentation hnn_presentation(Presentation const&                       p,
                                std::vector<std::pair<Word, Word>> const& pairs,
                                std::string const&                        stable) {
    if (!is_valid_symbol(stable)) {
      throw Error("invalid stable letter '" + stable + "'");
    }
    if (p.has_generator(stable)) {
      throw Error("stable letter '" + stable + "' clashes with a generator");
    }
    std::vector<std::string> gens = p.generators();
    gens.push_back(stable);
    std::vector<Word> rels = p.relators();
    Word const        t    = Word::generator(stable);
    for (auto const& [u, v] : pairs) {
      rels.push_back(t.inverse() * u * t * v.inverse());
    }
    return Presentation(std::move(gens), std::move(rels));
  }

  Presentation kill_generators(Presentation const&          p,
                               std::set<std::string> const& victims) {
    Substitution kill;
    for (auto const& v : victims) {
      if (!p.has_generator(v)) {
        throw Error("cannot kill '" + v + "': not a generator");
      }
      kill.emplace(v, Word());
    }
    std::vector<std::string> gens;
    for (auto const& g : p.generators()) {
      if (victims.count(g) == 0) {
        gens.push_back(g);
      }
    }
    std::vector<Word> rels;
    for (auto const& r : p.relators()) {
      Word w = substitute(r, kill);
      if (!w.empty()) {
        rels.push_back(std::move(w));
      }
    }
    return Presentation(std::move(gens), std::move(rels));
  }

  Elimination eliminate_generator(Presentation const& p,
                                  std::string const&  g,
                                  std::size_t         defining_relator) {
    if (!p.has_generator(g)) {
      throw Error("cannot eliminate '" + g + "': not a generator");
    }
    if (defining_relator >= p.relators().size()) {
      throw Error("defining relator index out of range");
    }
    Word const& r     = p.relators()[defining_relator];
    auto        count = std::count_if(r.letters().begin(), r.letters().end(),
                               [&](Letter const& l) { return l.symbol == g; });
    if (count != 1) {
      throw Error("relator '" + r.str() + "' does not contain exactly one occurrence of '"
                  + g + "'");
    }
    auto letters = r.letters();
    auto pos     = static_cast<std::size_t>(
        std::find_if(letters.begin(), letters.end(),
                     [&](Letter const& l) { return l.symbol == g; })
        - letters.begin());
    Word alpha({letters.begin(), letters.begin() + static_cast<long>(pos)});
    Word beta({letters.begin() + static_cast<long>(pos) + 1, letters.end()});
    // alpha g beta = e  gives  g = alpha^-1 beta^-1;
    // alpha g^-1 beta = e  gives  g = beta alpha.
    Word definition = letters[pos].sign > 0 ? free_reduce(alpha.inverse() * beta.inverse())
                                            : free_reduce(beta * alpha);

    Substitution             sub{{g, definition}};
    std::vector<std::string> gens;
    for (auto const& h : p.generators()) {
      if (h != g) {
        gens.push_back(h);
      }
    }
    std::vector<Word> rels;
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      if (i != defining_relator) {
        rels.push_back(substitute(p.relators()[i], sub));
      }
    }
    return {Presentation(std::move(gens), std::move(rels)), std::move(definition)};
  }

}  // namespace torlen
