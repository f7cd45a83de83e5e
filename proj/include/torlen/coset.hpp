#pragma once

// Todd-Coxeter coset enumeration (HLT strategy, union-find coincidences).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "torlen/presentation.hpp"

namespace torlen {

  enum class CosetStatus { complete, bound_exceeded };

  struct CosetTable {
    CosetStatus status = CosetStatus::bound_exceeded;
    std::size_t index  = 0;  // coset count when complete
    std::size_t limit  = 0;  // max_cosets
    // Compacted action when complete: rows[c][2g] = c.g, rows[c][2g+1] = c.g^-1.
    std::vector<std::vector<std::size_t>> rows;
    std::string                           digest;  // FNV-1a of rows, hex

    bool complete() const noexcept {
      return status == CosetStatus::complete;
    }
  };

  constexpr std::size_t default_max_cosets = 10000;

  // Index of the subgroup generated by `subgroup` in the group presented by
  // p.  Exceeding max_cosets live cosets means "not certified finite".
  CosetTable todd_coxeter(Presentation const&      p,
                          std::vector<Word> const& subgroup   = {},
                          std::size_t              max_cosets = default_max_cosets);

}  // namespace torlen
