// Acceptance gates.  One PASS/FAIL line per criterion; a criterion passes
// when its check holds and it finishes within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles/closure_oracle.hpp"
#include "oracles/snf_oracle.hpp"
#include "torlen/constructions.hpp"
#include "torlen/coset.hpp"
#include "torlen/freeprod.hpp"
#include "torlen/stallings.hpp"
#include "torlen/torsion.hpp"

using namespace torlen;

namespace {

  Word w(char const* text) {
    return Word::parse(text);
  }

  // Collects the first few failure descriptions.
  struct Outcome {
    bool               ok = true;
    std::ostringstream detail;
    int                notes = 0;

    void require(bool cond, std::string const& what) {
      if (!cond) {
        ok = false;
        if (notes++ < 3) {
          detail << (notes > 1 ? "; " : "") << what;
        }
      }
    }
  };

  struct Criterion {
    int                           id;
    std::string                   name;
    double                        limit_s;
    std::function<void(Outcome&)> run;
  };

  void family_shape(Outcome& out) {
    for (std::size_t n = 0; n <= 10; ++n) {
      auto        p    = build_pn(n);
      std::size_t want = (std::size_t{1} << n) - 1;
      out.require(p.generators().size() == want && p.relators().size() == want,
                  "P_" + std::to_string(n) + " counts");
      for (auto const& r : p.relators()) {
        out.require(r.size() == 3 || r.size() == 5, "P_" + std::to_string(n) + " relator length");
      }
    }
  }

  void torsion_length_exact(Outcome& out) {
    for (std::size_t n = 0; n <= 6; ++n) {
      auto r = torsion_length(build_pn(n));
      out.require(r.value == n && r.sound && r.exact, "torlen(P_" + std::to_string(n) + ")");
    }
    for (long j = 2; j <= 5; ++j) {
      for (long k = 2; k <= 5; ++k) {
        for (long l = 2; l <= 5; ++l) {
          auto r = torsion_length(build_pjkl(j, k, l));
          out.require(r.value == 2 && r.exact,
                      "torlen(P_" + std::to_string(j) + std::to_string(k) + std::to_string(l) + ")");
        }
      }
    }
    auto r = torsion_length(build_pjkl(2, 2, 2));
    out.require(r.value == 2 && r.exact, "torlen(P_222)");
  }

  void quotient_step(Outcome& out) {
    for (std::size_t n = 1; n <= 8; ++n) {
      out.require(canonicalize(torsion_quotient_step(build_pn(n)).presentation)
                      == canonicalize(build_pn(n - 1)),
                  "step(P_" + std::to_string(n) + ")");
    }
  }

  void finite_quotients(Outcome& out) {
    auto p1 = todd_coxeter(build_pn(1));
    out.require(p1.complete() && p1.index == 3, "P_1 index");
    for (long j = 2; j <= 6; ++j) {
      for (long k = 2; k <= 6; ++k) {
        for (long l = 2; l <= 6; ++l) {
          auto t = todd_coxeter(adjoin_relators(build_pjkl(j, k, l), {w("x"), w("y")}));
          out.require(t.complete() && t.index == static_cast<std::size_t>(l),
                      "Q index for l=" + std::to_string(l));
        }
      }
    }
  }

  void conjugate_separation(Outcome& out) {
    auto c22 = CyclicFactorSpec::parse("x:2 y:2");
    auto r   = conjugate_separation_search(c22, w("x"), w("y"), {6, 4});
    out.require(r.witness && to_word(c22, r.witness->x) == w("x") && r.witness->i == 1
                    && r.witness->j == -1,
                "C2*C2 witness");
    for (auto const* text : {"a:3 b:3", "a:2 b:3"}) {
      auto spec = CyclicFactorSpec::parse(text);
      out.require(!conjugate_separation_search(spec, w("a"), w("b"), {6, 4}).witness,
                  std::string("witness in ") + text);
    }
  }

  void free_subgroup(Outcome& out) {
    // u = y x z, v = x y x z x
    auto c32 = CyclicFactorSpec::parse("g:3 x:2");
    out.require(ping_pong_free_check(c32, w("g x g"), w("x g x g x"), 8).free_up_to_bound,
                "C3*C2");
    auto c42 = CyclicFactorSpec::parse("g:4 x:2");
    out.require(ping_pong_free_check(c42, w("g x g g"), w("x g x g g x"), 8).free_up_to_bound,
                "C4*C2");
  }

  void dihedral(Outcome& out) {
    auto       spec = CyclicFactorSpec::parse("x:2 y:2");
    NormalForm xy   = normal_form(spec, w("x y"));
    NormalForm x    = normal_form(spec, w("x"));
    for (std::size_t len = 0; len <= 8; ++len) {
      for (std::size_t first = 0; first < 2; ++first) {
        NormalForm nf;
        for (std::size_t i = 0; i < len; ++i) {
          nf.syllables.push_back({(first + i) % 2, 1});
        }
        bool found = false;
        for (std::int64_t k = -5; k <= 5 && !found; ++k) {
          NormalForm p = power(spec, xy, k);
          found        = p == nf || multiply(spec, p, x) == nf;
        }
        out.require(found, "form of length " + std::to_string(len));
      }
    }
    out.require(normal_form(spec, w("x x y x")) == inverse(spec, xy), "x.xy.x");
  }

  void stallings_oracle(Outcome& out) {
    Alphabet                       al({"a", "b"});
    std::mt19937_64                rng(20260101);
    std::vector<std::vector<Word>> cases{{w("b^-1 a b"), w("b^-1 b^-1 a b b")},
                                         {w("a a"), w("a a a")}};
    for (int s = 0; s < 200; ++s) {
      std::vector<Word> gens;
      for (std::size_t k = 1 + rng() % 3; k > 0; --k) {
        Code c;
        for (std::size_t len = 1 + rng() % 4; c.size() < len;) {
          int x = static_cast<int>(rng() % 2) + 1;
          x     = rng() % 2 ? x : -x;
          if (c.empty() || c.back() != -x) {
            c.push_back(x);
          }
        }
        gens.push_back(al.decode(c));
      }
      cases.push_back(std::move(gens));
    }
    auto words = oracle::reduced_words(2, 8);
    for (auto const& gens : cases) {
      std::vector<oracle::Letters> codes;
      for (auto const& g : gens) {
        codes.push_back(al.encode(g));
      }
      auto ball  = oracle::subgroup_ball(codes, 2, 8);
      auto graph = build_subgroup_graph(al.symbols(), gens);
      for (auto const& t : words) {
        out.require(membership(graph, al.decode(t)) == (ball.count(t) != 0),
                    "membership of " + al.decode(t).str());
      }
      out.require(rank(graph) + graph.vertex_count() == graph.edges().size() + 1, "rank formula");
      out.require(free_basis(graph).size() == rank(graph), "basis size");
    }
    out.require(rank(build_subgroup_graph(al.symbols(), cases[0])) == 2, "rank of conjugates");
    auto cyc = build_subgroup_graph({"a"}, {w("a a"), w("a a a")});
    out.require(rank(cyc) == 1 && free_basis(cyc) == std::vector<Word>{w("a")}, "basis {a}");
  }

  void leary_nucinkis(Outcome& out) {
    for (auto const& p : {Presentation({"z"}, {w("z z")}), build_pn(1), build_pjkl(2, 2, 2)}) {
      out.require(canonicalize(kill_generators(build_ln(p).presentation, {"x", "y"}))
                      == canonicalize(p),
                  "round trip");
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      auto q = build_qn(n);
      out.require(q.generators().size() == 2 * n - 1 && q.relators().size() <= 2 * n - 1,
                  "Q_" + std::to_string(n) + " counts");
    }
  }

  void non_hopf(Outcome& out) {
    for (std::size_t m = 1; m <= 5; ++m) {
      out.require(canonicalize(torsion_quotient_step(build_chain(m)).presentation)
                      == canonicalize(build_chain(m - 1)),
                  "chain " + std::to_string(m));
    }
  }

  void tgen_structure(Outcome& out) {
    for (auto const& p : {build_pn(1), build_pjkl(2, 2, 2)}) {
      auto res = build_tgen(p);
      out.require(res.intermediate.relators().size()
                      == p.relators().size() + p.generators().size() + 1,
                  "intermediate relators");
      out.require(res.presentation.generators() == std::vector<std::string>{"a", "t"},
                  "generators a, t");
      for (auto const& g : p.generators()) {
        auto before = build_tgen(adjoin_relators(p, {Word::generator(g)})).presentation;
        auto after  = adjoin_relators(res.presentation, {res.images.at(g)});
        out.require(canonicalize(before) == canonicalize(after), "commutation for " + g);
      }
    }
  }

  void certificates(Outcome& out) {
    Presentation p = build_pjkl(2, 2, 2);
    auto         has = [](std::vector<TorsionCertificate> const& cs, char const* g) {
      return std::any_of(cs.begin(), cs.end(),
                         [&](TorsionCertificate const& c) { return c.word == w(g); });
    };
    auto level1 = torsion_certificate_search(p, 1);
    out.require(has(level1, "x") && has(level1, "y"), "level 1 certifies x, y");
    out.require(!has(level1, "z"), "level 1 certifies z");
    auto level2 = torsion_certificate_search(p, 2);
    out.require(has(level2, "z"), "level 2 certifies z");
    for (auto const* certs : {&level1, &level2}) {
      for (auto const& c : *certs) {
        out.require(verify_certificate(p, c), "certificate for " + c.word.str());
      }
    }
  }

  void product_compatibility(Outcome& out) {
    std::mt19937_64 rng(424242);
    struct Member {
      Presentation p;
      std::size_t  torlen;
    };
    auto draw = [&]() {
      if (rng() % 2 == 0) {
        std::size_t n = rng() % 6;
        return Member{build_pn(n), n};
      }
      long j = 2 + static_cast<long>(rng() % 4), k = 2 + static_cast<long>(rng() % 4),
           l = 2 + static_cast<long>(rng() % 4);
      return Member{build_pjkl(j, k, l), 2};
    };
    for (int trial = 0; trial < 24; ++trial) {
      Member a = draw(), b = draw();
      auto   prod = free_product(a.p, b.p).presentation;
      auto   step = torsion_quotient_step(prod).presentation;
      auto   sep  = free_product(torsion_quotient_step(a.p).presentation,
                                 torsion_quotient_step(b.p).presentation)
                     .presentation;
      out.require(canonicalize(step) == canonicalize(sep), "step commutation");
      auto t = torsion_length(prod);
      out.require(t.exact && t.value == std::max(a.torlen, b.torlen), "torlen of product");
    }
  }

  void abelian_oracle(Outcome& out) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t         rows = 1 + rng() % 4, cols = 1 + rng() % 4;
      oracle::SmallMatrix m(rows, std::vector<std::int64_t>(cols));
      IntMatrix           big(rows, std::vector<BigInt>(cols));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          m[i][j]   = static_cast<std::int64_t>(rng() % 11) - 5;
          big[i][j] = m[i][j];
        }
      }
      std::vector<BigInt> expect;
      for (auto d : oracle::invariant_factors(m)) {
        expect.emplace_back(d);
      }
      out.require(smith_diagonal(big) == expect, "random matrix");
    }
    out.require(abelianization(build_pn(1)) == AbelianInvariants{{3}, 0}, "ab(P_1)");
  }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "family shape of P_n, n = 0..10", 1, family_shape},
      {2, "torsion length exactness", 5, torsion_length_exact},
      {3, "quotient step P_n -> P_{n-1}", 1, quotient_step},
      {4, "finite quotients by coset enumeration", 2, finite_quotients},
      {5, "conjugate separation", 5, conjugate_separation},
      {6, "free subgroup certificate", 10, free_subgroup},
      {7, "dihedral normal forms", 1, dihedral},
      {8, "Stallings membership vs closure oracle", 60, stallings_oracle},
      {9, "Leary-Nucinkis round trip and Q_n counts", 5, leary_nucinkis},
      {10, "non-Hopf chain ladder", 2, non_hopf},
      {11, "tgen structure and commutation", 2, tgen_structure},
      {12, "torsion certificates on P_{2,2,2}", 30, certificates},
      {13, "free product compatibility", 10, product_compatibility},
      {14, "Smith normal form oracle", 10, abelian_oracle},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    Outcome    out;
    auto const start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (std::exception const& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_s) {
      out.require(false, "time limit exceeded");
    }
    failures += out.ok ? 0 : 1;
    std::printf("%s criterion %2d: %s (%.3f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.limit_s, out.ok ? "" : ": ", out.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
