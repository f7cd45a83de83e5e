#include <algorithm>
#include <utility>

#include "torlen/presentation.hpp"

namespace torlen {

  IntMatrix exponent_matrix(Presentation const& p) {
    Alphabet  alphabet = p.alphabet();
    IntMatrix m;
    for (auto const& r : p.relators()) {
      std::vector<BigInt> row(alphabet.size(), 0);
      for (auto const& l : r.letters()) {
        row[alphabet.index(l.symbol)] += l.sign;
      }
      m.push_back(std::move(row));
    }
    return m;
  }

  std::vector<BigInt> smith_diagonal(IntMatrix m) {
    std::size_t const rows = m.size();
    std::size_t const cols = rows == 0 ? 0 : m[0].size();
    std::vector<BigInt> diag;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      while (true) {
        // pivot: smallest nonzero |entry| in the trailing block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (m[i][j] != 0
                && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
              pr = i;
              pc = j;
            }
          }
        }
        if (pr == rows) {
          return diag;
        }
        std::swap(m[t], m[pr]);
        for (auto& row : m) {
          std::swap(row[t], row[pc]);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          BigInt q = m[i][t] / m[t][t];
          if (q != 0) {
            for (std::size_t j = t; j < cols; ++j) {
              m[i][j] -= q * m[t][j];
            }
          }
          clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          BigInt q = m[t][j] / m[t][t];
          if (q != 0) {
            for (std::size_t i = t; i < rows; ++i) {
              m[i][j] -= q * m[i][t];
            }
          }
          clean = clean && m[t][j] == 0;
        }
        if (!clean) {
          continue;
        }
        // divisibility: fold an offending row into row t and retry
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t c = t; c < cols; ++c) {
                m[t][c] += m[i][c];
              }
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          break;
        }
      }
      diag.push_back(abs(m[t][t]));
    }
    return diag;
  }

  AbelianInvariants abelianization(Presentation const& p) {
    auto              diag = smith_diagonal(exponent_matrix(p));
    AbelianInvariants out;
    for (auto const& d : diag) {
      if (d > 1) {
        out.torsion.push_back(d);
      }
    }
    out.free_rank = p.generators().size() - diag.size();
    return out;
  }

}  // namespace torlen
