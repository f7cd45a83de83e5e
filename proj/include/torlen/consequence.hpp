#pragma once

// Bounded search for an expression of a word as a product of conjugates of
// relators.  Used for morphism certificates and torsion certificates.

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <vector>

#include "torlen/word.hpp"

namespace torlen {

  struct ConjugateFactor {
    Word        conjugator;
    std::size_t relator = 0;  // index into the relator list searched
    int         sign    = 1;

    bool operator==(ConjugateFactor const&) const = default;
  };

  // target = prod_i conjugator_i * relator_i^sign_i * conjugator_i^-1
  struct ConsequenceProof {
    std::vector<ConjugateFactor> factors;
  };

  struct ConsequenceBudget {
    // Maximum number of conjugates in the product.
    std::size_t max_conjugates = 8;
    // Maximum number of distinct intermediate words visited per target.
    std::size_t max_states = 4096;
  };

  // The product of conjugates a proof describes, freely reduced.
  Word expand(ConsequenceProof const& proof, std::vector<Word> const& relators);

  // Re-checks a proof by pure free reduction.
  bool verify(ConsequenceProof const& proof,
              std::vector<Word> const& relators,
              Word const&              target);

  // Breadth-first search over freely reduced words.  A move inserts a cyclic
  // permutation of a relator (or its inverse) at some position such that at
  // least half of the inserted letters cancel, so intermediate words never
  // grow.  The first proof found uses the fewest conjugates among moves of
  // this kind.
  class ConsequenceSearch {
   public:
    ConsequenceSearch(Alphabet alphabet, std::vector<Word> relators);

    std::optional<ConsequenceProof> prove(Word const&              target,
                                          ConsequenceBudget const& budget) const;

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }

   private:
    struct Insertion {
      Code        letters;       // rotated, oriented, cyclically reduced relator
      Code        rotation_head; // u[:s] where letters = u[s:] u[:s]
      std::size_t relator;
      int         sign;
    };

    Alphabet               _alphabet;
    std::vector<Word>      _relators;
    std::vector<Code>      _core_conjugators;  // r = d * core * d^-1
    std::vector<Insertion> _insertions;
    // insertion indices by first / last letter, slot 2*label + (letter < 0)
    std::vector<std::vector<std::size_t>> _by_first;
    std::vector<std::vector<std::size_t>> _by_last;

    std::vector<std::size_t>& bucket(std::vector<std::vector<std::size_t>>& b, int letter) {
      return b[slot(letter)];
    }
    std::vector<std::size_t> const& bucket(std::vector<std::vector<std::size_t>> const& b,
                                           int letter) const {
      return b[slot(letter)];
    }
    static std::size_t slot(int letter) {
      return 2 * static_cast<std::size_t>(std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
    }
  };

}  // namespace torlen
