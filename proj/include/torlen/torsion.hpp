#pragma once

// Torsion quotients, torsion length and bounded torsion certificates.

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "torlen/consequence.hpp"
#include "torlen/presentation.hpp"

namespace torlen {

  // Membership in the class where killing the visible torsion generators
  // computes the quotient by tor_1.  After canonicalization, connected
  // components (generators linked through shared relators) must each be
  //  - one generator whose relators are all powers of it, or
  //  - a binary tree of link relators u v w^-e (u, v children of w, e >= 1)
  //    with power relators only on leaves, each leaf power gcd >= 2.
  struct ClassVerdict {
    bool        certified = false;
    std::string reason;  // why not, when not certified
  };

  ClassVerdict certified_class(Presentation const& p);

  // Generators g with a relator whose cyclic core is a power of g.
  std::set<std::string> visible_torsion_generators(Presentation const& p);

  // gcd of the exponents of g's power relators; 0 if it has none.
  long power_gcd(Presentation const& p, std::string const& g);

  struct QuotientStep {
    Presentation          presentation;
    std::set<std::string> killed;
    bool                  sound = false;
  };

  QuotientStep torsion_quotient_step(Presentation const& p);

  struct TorsionTraceEntry {
    Presentation          before;
    std::set<std::string> killed;
    Presentation          after;
    bool                  sound = false;
  };

  struct TorsionLengthReport {
    std::size_t value = 0;
    bool        exact = false;  // false: value is a lower bound
    bool        sound = false;  // every step inside the certified class
    bool        fixed_point = false;
    std::size_t max_iter    = 0;
    std::size_t iterations  = 0;
    // One entry per step that killed an element of nontrivial order; steps
    // killing only trivial generators are merged into the following entry.
    std::vector<TorsionTraceEntry> trace;
    Presentation                   final_presentation;
  };

  constexpr std::size_t default_max_iter = 64;

  TorsionLengthReport torsion_length(Presentation const& p,
                                     std::size_t         max_iter = default_max_iter);

  struct CertificateBudgets {
    std::size_t word_bound         = 6;
    std::size_t exponent_bound     = 6;
    std::size_t consequence_budget = 8;
    std::size_t max_states         = 2048;  // per (word, exponent) search
  };

  struct TorsionCertificate {
    Word        word;
    long        exponent = 1;
    std::size_t level    = 1;
    // word^exponent = product of conjugates of `relators`, which are p's
    // relators followed by the words of `adjoined`.
    ConsequenceProof                                        proof;
    std::vector<Word>                                       relators;
    std::shared_ptr<std::vector<TorsionCertificate> const> adjoined;
  };

  // All words up to the bounds certified at levels 1..level, each with its
  // lowest level.  Words are cyclically reduced, not proper powers, and
  // taken up to rotation and inversion, in length-lexicographic order.
  std::vector<TorsionCertificate>
  torsion_certificate_search(Presentation const&       p,
                             std::size_t               level,
                             CertificateBudgets const& budgets = {});

  // Re-checks a certificate (and, recursively, what it adjoins) by free
  // reduction of the expanded product.
  bool verify_certificate(Presentation const& p, TorsionCertificate const& c);

}  // namespace torlen
