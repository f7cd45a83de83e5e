#pragma once

// Free products of cyclic groups: syllable normal forms and the searches
// built on them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torlen/word.hpp"

namespace torlen {

  struct CyclicFactor {
    std::string                 generator;
    std::optional<std::int64_t> order;  // nullopt: infinite cyclic

    bool operator==(CyclicFactor const&) const = default;
  };

  class CyclicFactorSpec {
   public:
    CyclicFactorSpec() = default;
    explicit CyclicFactorSpec(std::vector<CyclicFactor> factors);

    // "x:2 y:3 t:inf"
    static CyclicFactorSpec parse(std::string_view text);
    std::string             str() const;

    std::vector<CyclicFactor> const& factors() const noexcept {
      return _factors;
    }
    std::size_t size() const noexcept {
      return _factors.size();
    }
    CyclicFactor const& operator[](std::size_t i) const {
      return _factors.at(i);
    }
    // Throws Error for undeclared generators.
    std::size_t index(std::string_view generator) const;
    bool        is_finite(std::size_t factor) const {
      return _factors.at(factor).order.has_value();
    }

   private:
    std::vector<CyclicFactor> _factors;
  };

  struct Syllable {
    std::size_t  factor   = 0;
    std::int64_t exponent = 0;

    auto operator<=>(Syllable const&) const = default;
  };

  // Alternating syllables; exponents of finite factors lie in 1..order-1.
  struct NormalForm {
    std::vector<Syllable> syllables;

    bool empty() const noexcept {
      return syllables.empty();
    }
    auto operator<=>(NormalForm const&) const = default;
  };

  class NormalFormBuilder {
   public:
    explicit NormalFormBuilder(CyclicFactorSpec const& spec) : _spec(&spec) {}

    void push(std::size_t factor, std::int64_t exponent);
    void push(NormalForm const& nf);
    NormalForm const& result() const noexcept {
      return _nf;
    }

   private:
    CyclicFactorSpec const* _spec;
    NormalForm              _nf;
  };

  NormalForm normal_form(CyclicFactorSpec const& spec, Word const& w);
  NormalForm multiply(CyclicFactorSpec const& spec, NormalForm const& a, NormalForm const& b);
  NormalForm inverse(CyclicFactorSpec const& spec, NormalForm const& a);
  NormalForm power(CyclicFactorSpec const& spec, NormalForm const& a, std::int64_t n);
  Word       to_word(CyclicFactorSpec const& spec, NormalForm const& nf);

  struct TorsionWitness {
    NormalForm conjugator;  // w = conjugator * element * conjugator^-1
    NormalForm element;     // empty, or one syllable of a finite factor
  };

  struct TorsionVerdict {
    bool                          torsion = false;
    std::optional<TorsionWitness> witness;
  };

  TorsionVerdict is_torsion(CyclicFactorSpec const& spec, Word const& w);

  struct ConjugateSeparationBounds {
    std::size_t  max_syllables = 6;
    std::int64_t max_exponent  = 4;
  };

  struct SeparationWitness {
    NormalForm   x;
    std::int64_t i = 0;
    std::int64_t j = 0;
  };

  struct ConjugateSeparationReport {
    ConjugateSeparationBounds        bounds;
    std::optional<SeparationWitness> witness;  // nullopt: none up to bounds
    std::size_t                      candidates_checked = 0;
  };

  // Searches x with x (ab)^i x^-1 = (ab)^j, x not in <ab>.  Candidates x are
  // visited by syllable count, then lexicographically; infinite-factor
  // syllable exponents range over +-1..+-max_exponent.
  ConjugateSeparationReport
  conjugate_separation_search(CyclicFactorSpec const&          spec,
                              Word const&                      a,
                              Word const&                      b,
                              ConjugateSeparationBounds const& bounds);

  struct FreenessReport {
    bool        free_up_to_bound = true;
    std::size_t max_length       = 0;
    std::size_t words_checked    = 0;
    // Reduced word over u, v (written with symbols "u", "v") mapping to e.
    std::optional<Word> relation;
  };

  // Bounded ping-pong certificate: every nonempty reduced word of length
  // <= max_length in u, v has nontrivial image.  Evidence, not a proof.
  FreenessReport ping_pong_free_check(CyclicFactorSpec const& spec,
                                      Word const&             u,
                                      Word const&             v,
                                      std::size_t             max_length);

}  // namespace torlen
