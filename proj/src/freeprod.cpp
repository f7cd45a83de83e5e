#include "torlen/freeprod.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "torlen/error.hpp"

namespace torlen {

  CyclicFactorSpec::CyclicFactorSpec(std::vector<CyclicFactor> factors)
      : _factors(std::move(factors)) {
    std::set<std::string> seen;
    for (auto const& f : _factors) {
      if (!is_valid_symbol(f.generator)) {
        throw Error("invalid factor generator '" + f.generator + "'");
      }
      if (!seen.insert(f.generator).second) {
        throw Error("duplicate factor generator '" + f.generator + "'");
      }
      if (f.order && *f.order < 2) {
        throw Error("factor order must be >= 2 or inf");
      }
    }
  }

  CyclicFactorSpec CyclicFactorSpec::parse(std::string_view text) {
    std::istringstream        in{std::string(text)};
    std::string               tok;
    std::vector<CyclicFactor> factors;
    bool                      first = true;
    while (in >> tok) {
      if (first && tok == "factors:") {
        first = false;
        continue;
      }
      first    = false;
      auto pos = tok.rfind(':');
      if (pos == std::string::npos || pos == 0 || pos + 1 == tok.size()) {
        throw Error("bad factor token '" + tok + "', expected name:order");
      }
      CyclicFactor f{tok.substr(0, pos), std::nullopt};
      std::string  order = tok.substr(pos + 1);
      if (order != "inf") {
        try {
          std::size_t used = 0;
          f.order          = std::stoll(order, &used);
          if (used != order.size()) {
            throw Error("");
          }
        } catch (std::exception const&) {
          throw Error("bad factor order '" + order + "'");
        }
      }
      factors.push_back(std::move(f));
    }
    return CyclicFactorSpec(std::move(factors));
  }

  std::string CyclicFactorSpec::str() const {
    std::string out;
    for (auto const& f : _factors) {
      if (!out.empty()) {
        out += ' ';
      }
      out += f.generator + ":" + (f.order ? std::to_string(*f.order) : "inf");
    }
    return out;
  }

  std::size_t CyclicFactorSpec::index(std::string_view generator) const {
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      if (_factors[i].generator == generator) {
        return i;
      }
    }
    throw Error("generator '" + std::string(generator) + "' is not a factor");
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::int64_t normalize(CyclicFactorSpec const& spec, std::size_t f, std::int64_t e) {
      if (auto order = spec[f].order) {
        e %= *order;
        if (e < 0) {
          e += *order;
        }
      }
      return e;
    }
  }  // namespace

  void NormalFormBuilder::push(std::size_t factor, std::int64_t exponent) {
    exponent = normalize(*_spec, factor, exponent);
    if (exponent == 0) {
      return;
    }
    auto& s = _nf.syllables;
    if (!s.empty() && s.back().factor == factor) {
      std::int64_t e = normalize(*_spec, factor, s.back().exponent + exponent);
      if (e == 0) {
        s.pop_back();
      } else {
        s.back().exponent = e;
      }
    } else {
      s.push_back({factor, exponent});
    }
  }

  void NormalFormBuilder::push(NormalForm const& nf) {
    for (auto const& s : nf.syllables) {
      push(s.factor, s.exponent);
    }
  }

  NormalForm normal_form(CyclicFactorSpec const& spec, Word const& w) {
    NormalFormBuilder b(spec);
    for (auto const& l : w.letters()) {
      b.push(spec.index(l.symbol), l.sign);
    }
    return b.result();
  }

  NormalForm multiply(CyclicFactorSpec const& spec, NormalForm const& a, NormalForm const& b) {
    NormalFormBuilder out(spec);
    out.push(a);
    out.push(b);
    return out.result();
  }

  NormalForm inverse(CyclicFactorSpec const& spec, NormalForm const& a) {
    NormalFormBuilder out(spec);
    for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) {
      out.push(it->factor, -it->exponent);
    }
    return out.result();
  }

  NormalForm power(CyclicFactorSpec const& spec, NormalForm const& a, std::int64_t n) {
    NormalForm base = n < 0 ? inverse(spec, a) : a;
    NormalFormBuilder out(spec);
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) {
      out.push(base);
    }
    return out.result();
  }

  Word to_word(CyclicFactorSpec const& spec, NormalForm const& nf) {
    Word w;
    for (auto const& s : nf.syllables) {
      w *= Word::generator(spec[s.factor].generator, s.exponent);
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Torsion
  ////////////////////////////////////////////////////////////////////////

  TorsionVerdict is_torsion(CyclicFactorSpec const& spec, Word const& w) {
    NormalForm core = normal_form(spec, w);
    NormalFormBuilder conj(spec);
    // While the ends lie in the same factor, conjugate the first syllable
    // around: s1 m sn = s1 (m sn s1) s1^-1.
    while (core.syllables.size() >= 2
           && core.syllables.front().factor == core.syllables.back().factor) {
      Syllable first = core.syllables.front();
      conj.push(first.factor, first.exponent);
      NormalFormBuilder rest(spec);
      for (std::size_t i = 1; i < core.syllables.size(); ++i) {
        rest.push(core.syllables[i].factor, core.syllables[i].exponent);
      }
      rest.push(first.factor, first.exponent);
      core = rest.result();
    }
    TorsionVerdict v;
    bool           single_finite =
        core.syllables.size() == 1 && spec.is_finite(core.syllables.front().factor);
    if (core.empty() || single_finite) {
      v.torsion = true;
      v.witness = TorsionWitness{conj.result(), core};
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugate separation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Exponents a syllable of this factor may carry, in canonical order.
    std::vector<std::int64_t> exponent_choices(CyclicFactorSpec const& spec,
                                               std::size_t             f,
                                               std::int64_t            max_exponent) {
      std::vector<std::int64_t> out;
      if (auto order = spec[f].order) {
        for (std::int64_t e = 1; e < *order; ++e) {
          out.push_back(e);
        }
      } else {
        for (std::int64_t e = 1; e <= max_exponent; ++e) {
          out.push_back(e);
          out.push_back(-e);
        }
      }
      return out;
    }

    std::vector<std::int64_t> signed_range(std::int64_t n) {
      std::vector<std::int64_t> out;
      for (std::int64_t e = 1; e <= n; ++e) {
        out.push_back(e);
        out.push_back(-e);
      }
      return out;
    }
  }  // namespace

  ConjugateSeparationReport
  conjugate_separation_search(CyclicFactorSpec const&          spec,
                              Word const&                      a,
                              Word const&                      b,
                              ConjugateSeparationBounds const& bounds) {
    NormalForm na = normal_form(spec, a);
    NormalForm nb = normal_form(spec, b);
    if (na.syllables.size() != 1 || nb.syllables.size() != 1) {
      throw Error("a and b must be nontrivial elements of single factors");
    }
    if (na.syllables[0].factor == nb.syllables[0].factor) {
      throw Error("a and b lie in the same factor");
    }
    NormalForm ab = multiply(spec, na, nb);

    ConjugateSeparationReport report;
    report.bounds = bounds;

    std::int64_t const maxe = bounds.max_exponent;
    std::vector<NormalForm> ab_powers;  // index m + maxe -> (ab)^m
    for (std::int64_t m = -maxe; m <= maxe; ++m) {
      ab_powers.push_back(power(spec, ab, m));
    }
    auto ab_power = [&](std::int64_t m) -> NormalForm const& {
      return ab_powers[static_cast<std::size_t>(m + maxe)];
    };
    auto in_cyclic = [&](NormalForm const& x) {
      auto s = static_cast<std::int64_t>(x.syllables.size());
      for (std::int64_t m = -s; m <= s; ++m) {
        if (power(spec, ab, m) == x) {
          return true;
        }
      }
      return false;
    };
    auto const exps = signed_range(maxe);

    auto test = [&](NormalForm const& x) -> std::optional<SeparationWitness> {
      ++report.candidates_checked;
      if (in_cyclic(x)) {
        return std::nullopt;
      }
      NormalForm xinv = inverse(spec, x);
      for (std::int64_t i : exps) {
        NormalForm lhs = multiply(spec, multiply(spec, x, ab_power(i)), xinv);
        for (std::int64_t j : exps) {
          if (lhs == ab_power(j)) {
            return SeparationWitness{x, i, j};
          }
        }
      }
      return std::nullopt;
    };

    // Length-lexicographic enumeration of normal forms.
    std::optional<SeparationWitness> found;
    NormalForm                       current;
    std::function<bool(std::size_t)> extend = [&](std::size_t remaining) -> bool {
      if (remaining == 0) {
        if ((found = test(current))) {
          return true;
        }
        return false;
      }
      for (std::size_t f = 0; f < spec.size(); ++f) {
        if (!current.syllables.empty() && current.syllables.back().factor == f) {
          continue;
        }
        for (std::int64_t e : exponent_choices(spec, f, maxe)) {
          current.syllables.push_back({f, e});
          bool done = extend(remaining - 1);
          current.syllables.pop_back();
          if (done) {
            return true;
          }
        }
      }
      return false;
    };
    for (std::size_t len = 0; len <= bounds.max_syllables; ++len) {
      if (extend(len)) {
        break;
      }
    }
    report.witness = found;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ping-pong
  ////////////////////////////////////////////////////////////////////////

  FreenessReport ping_pong_free_check(CyclicFactorSpec const& spec,
                                      Word const&             u,
                                      Word const&             v,
                                      std::size_t             max_length) {
    // letters 0:u 1:U 2:v 3:V
    std::array<NormalForm, 4> images;
    images[0] = normal_form(spec, u);
    images[1] = inverse(spec, images[0]);
    images[2] = normal_form(spec, v);
    images[3] = inverse(spec, images[2]);

    FreenessReport report;
    report.max_length = max_length;
    std::vector<int> stack;

    std::function<bool(NormalForm const&)> dfs = [&](NormalForm const& value) -> bool {
      if (!stack.empty()) {
        ++report.words_checked;
        if (value.empty()) {
          std::vector<Letter> letters;
          for (int x : stack) {
            letters.push_back({x < 2 ? "u" : "v", x % 2 == 0 ? 1 : -1});
          }
          report.relation         = Word(std::move(letters));
          report.free_up_to_bound = false;
          return true;
        }
      }
      if (stack.size() == max_length) {
        return false;
      }
      for (int x = 0; x < 4; ++x) {
        if (!stack.empty() && (stack.back() ^ 1) == x) {
          continue;  // not reduced
        }
        stack.push_back(x);
        bool hit = dfs(multiply(spec, value, images[static_cast<std::size_t>(x)]));
        stack.pop_back();
        if (hit) {
          return true;
        }
      }
      return false;
    };
    dfs(NormalForm{});
    return report;
  }

}  // namespace torlen
