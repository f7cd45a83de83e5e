#pragma once

// Normal forms in a free product of cyclic groups by exhaustive rewriting:
// merge two adjacent letters of one factor, reduce an exponent modulo the
// factor order, delete a zero exponent.  Repeats until nothing applies.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

  // (factor, exponent) pairs
  using Syllables = std::vector<std::pair<std::size_t, std::int64_t>>;

  inline Syllables rewrite_normal_form(Syllables w,
                                       std::vector<std::optional<std::int64_t>> const& orders) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < w.size() && !changed; ++i) {
        auto& [f, e] = w[i];
        if (e == 0) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        } else if (orders[f] && (e < 1 || e >= *orders[f])) {
          e       = ((e % *orders[f]) + *orders[f]) % *orders[f];
          changed = true;
        } else if (i + 1 < w.size() && w[i + 1].first == f) {
          e += w[i + 1].second;
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i + 1));
          changed = true;
        }
      }
    }
    return w;
  }

}  // namespace oracle
