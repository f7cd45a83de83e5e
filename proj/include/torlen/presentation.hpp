#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "torlen/consequence.hpp"
#include "torlen/word.hpp"

namespace torlen {

  using BigInt = boost::multiprecision::cpp_int;

  // A group presentation <X | R>.  Relators are stored freely reduced and in
  // the order given; duplicates are kept.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators, std::vector<Word> relators);

    std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    bool has_generator(std::string_view name) const;
    Alphabet alphabet() const {
      return Alphabet(_generators);
    }

    bool operator==(Presentation const&) const = default;

   private:
    std::vector<std::string> _generators;
    std::vector<Word>        _relators;
  };

  enum class RelatorCheck {
    literal,      // image reduces to a target relator up to rotation/inversion
    consequence,  // bounded consequence search found a proof
    unverified
  };

  struct MorphismRelator {
    RelatorCheck                    status = RelatorCheck::unverified;
    std::optional<ConsequenceProof> proof;
  };

  // A map on generators, with a record of which source relators are known
  // to map to the identity.
  struct PresentationMorphism {
    Presentation                 source;
    Presentation                 target;
    Substitution                 images;
    std::vector<MorphismRelator> relators;

    bool all_verified() const;
  };

  PresentationMorphism make_morphism(Presentation const& source,
                                     Presentation const& target,
                                     Substitution        images,
                                     ConsequenceBudget const& budget = {});

  struct FreeProduct {
    Presentation         presentation;
    PresentationMorphism left;
    PresentationMorphism right;
  };

  // Clashing names from q get the first free suffix #1, #2, ...
  FreeProduct free_product(Presentation const& p, Presentation const& q);

  // Name not in `taken`, built as `name`, `name#1`, `name#2`, ...
  std::string fresh_name(std::string const& name, std::set<std::string> const& taken);

  Presentation adjoin_relators(Presentation const& p, std::vector<Word> const& s);

  // Relators t^-1 u t v^-1 for each (u, v).
  Presentation hnn_presentation(Presentation const&                      p,
                                std::vector<std::pair<Word, Word>> const& pairs,
                                std::string const&                       stable);

  Presentation kill_generators(Presentation const&          p,
                               std::set<std::string> const& victims);

  struct Elimination {
    Presentation presentation;
    Word         definition;  // the eliminated generator, over the others
  };

  // Tietze elimination of g using a relator with exactly one occurrence of g.
  Elimination eliminate_generator(Presentation const& p,
                                  std::string const&  g,
                                  std::size_t         defining_relator);

  struct CanonicalizeOptions {
    bool drop_unused_generators = false;
  };

  // Deterministic normal form up to renaming of generators, rotation and
  // inversion of relators, relator order and duplicates.  Generators are
  // renamed g0, g1, ...
  Presentation canonicalize(Presentation const&        p,
                            CanonicalizeOptions const& options = {});

  struct AbelianInvariants {
    std::vector<BigInt> torsion;  // d_1 | d_2 | ..., each >= 2
    std::size_t         free_rank = 0;

    bool operator==(AbelianInvariants const&) const = default;
  };

  AbelianInvariants abelianization(Presentation const& p);

  using IntMatrix = std::vector<std::vector<BigInt>>;

  // Nonzero diagonal entries (absolute values, divisibility chain, ones
  // included) of the Smith normal form of m.
  std::vector<BigInt> smith_diagonal(IntMatrix m);

  IntMatrix exponent_matrix(Presentation const& p);

  // Text format:
  //   gens: g1 g2 ...
  //   rel: tok tok ...
  // A token starting with '#' begins a comment.
  Presentation parse_presentation(std::string_view text);
  std::string  serialize(Presentation const& p);

}  // namespace torlen
