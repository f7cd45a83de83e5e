#pragma once

// Builders for the presentation families and embeddings.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "torlen/presentation.hpp"

namespace torlen {

  // <x, y, z | x^j, y^k, x y z^-l>; throws Error if any parameter < 2.
  Presentation build_pjkl(long j, long k, long l);

  // Generator for the binary string `bits`: "x_" + bits.
  std::string pn_generator(std::string const& bits);

  // Generators x_eta for |eta| <= n-1 in shortlex order.  Relators:
  // x_eta^exponent for |eta| = n-1, then x_eta0 x_eta1 x_eta^-exponent for
  // |eta| <= n-2, both in shortlex order of eta.
  Presentation build_pn(std::size_t n, long exponent = 3);

  struct TgenResult {
    Presentation presentation;  // generators exactly a, t
    Presentation intermediate;  // before eliminations: |R| + n + 1 relators
    Substitution images;        // original generator -> word over a, t
    std::map<std::string, std::string> renamed;  // clashes with a, b, t
  };

  // 2-generator presentation via an HNN extension of p * <a, b>.  Finite
  // presentations only.
  TgenResult build_tgen(Presentation const& p);

  struct LnResult {
    Presentation      presentation;
    std::size_t       rank = 0;  // rank of the subgroup generated by the relators
    std::vector<Word> basis;     // free basis of that subgroup
    bool              degenerate = false;  // no relators: plain free product
    std::map<std::string, std::string> renamed;  // clashes with x, y
  };

  // <gens(p), x, y | x^2, y^3, t_i (b^-i a b^i)^-1> for a free basis t_i
  // of the subgroup generated by p's relators, a = yxy, b = xyxyx.
  LnResult build_ln(Presentation const& p);

  // Iterates build_ln n-1 times from <z | z^2>.
  Presentation build_qn(std::size_t n);

  // Free product of build_pn(0..m); factor i has generator prefix "f<i>.".
  Presentation build_chain(std::size_t m);

}  // namespace torlen
