#include <doctest.h>

#include <algorithm>
#include <random>

#include "torlen/constructions.hpp"
#include "torlen/coset.hpp"

using namespace torlen;

namespace {
  Word w(char const* text) {
    return Word::parse(text);
  }

  // Every relator closes up at every coset; subgroup generators at coset 0.
  bool consistent(Presentation const& p, CosetTable const& t, std::vector<Word> const& sub) {
    Alphabet al = p.alphabet();
    auto     trace = [&](std::size_t c, Word const& word) {
      for (int x : al.encode(word)) {
        std::size_t col = 2 * static_cast<std::size_t>(std::abs(x) - 1) + (x < 0 ? 1 : 0);
        c               = t.rows[c][col];
      }
      return c;
    };
    for (std::size_t c = 0; c < t.index; ++c) {
      for (auto const& r : p.relators()) {
        if (trace(c, r) != c) {
          return false;
        }
      }
    }
    return std::all_of(sub.begin(), sub.end(), [&](Word const& s) { return trace(0, s) == 0; });
  }
}  // namespace

TEST_CASE("coset enumeration examples") {
  auto p1 = todd_coxeter(build_pn(1), {}, 100);
  CHECK(p1.complete());
  CHECK(p1.index == 3);
  auto q = todd_coxeter(adjoin_relators(build_pjkl(2, 3, 4), {w("x"), w("y")}), {}, 100);
  CHECK(q.index == 4);
  auto dih = todd_coxeter(Presentation({"x", "y"}, {w("x x"), w("y y")}), {}, 500);
  CHECK(dih.status == CosetStatus::bound_exceeded);
  CHECK(dih.limit == 500);
}

TEST_CASE("subgroups") {
  Presentation s3({"a", "b"}, {w("a a"), w("b b b"), w("a b a b")});
  CHECK(todd_coxeter(s3).index == 6);
  auto t = todd_coxeter(s3, {w("a")});
  CHECK(t.index == 3);
  CHECK(consistent(s3, t, {w("a")}));
  CHECK(todd_coxeter(s3, {w("b")}).index == 2);
  CHECK(todd_coxeter(s3, {w("a"), w("b")}).index == 1);
}

TEST_CASE("property: cyclic groups") {
  for (long k = 2; k <= 50; ++k) {
    Presentation p({"x"}, {Word::generator("x", k)});
    auto         t = todd_coxeter(p);
    REQUIRE(t.complete());
    CHECK(t.index == static_cast<std::size_t>(k));
    CHECK(consistent(p, t, {}));
    CHECK(abelianization(p).torsion == std::vector<BigInt>{k});
  }
}

TEST_CASE("property: relator order and inversion do not matter") {
  std::mt19937_64           rng(1);
  std::vector<Presentation> samples{
      build_pn(1), Presentation({"a", "b"}, {w("a a"), w("b b b"), w("a b a b")}),
      Presentation({"a", "b"}, {w("a a a a"), w("b b"), w("a b a b")}),
      adjoin_relators(build_pjkl(3, 2, 5), {w("x"), w("y")})};
  for (auto const& p : samples) {
    auto base = todd_coxeter(p);
    REQUIRE(base.complete());
    CHECK(consistent(p, base, {}));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Word> rels = p.relators();
      std::shuffle(rels.begin(), rels.end(), rng);
      for (auto& r : rels) {
        if (rng() % 2) {
          r = r.inverse();
        }
      }
      auto t = todd_coxeter(Presentation(p.generators(), rels));
      CHECK(t.index == base.index);
    }
  }
}

TEST_CASE("property: quotients of P_{j,k,l} by x, y") {
  for (long j = 2; j <= 6; ++j) {
    for (long k = 2; k <= 6; ++k) {
      for (long l = 2; l <= 6; ++l) {
        auto t = todd_coxeter(adjoin_relators(build_pjkl(j, k, l), {w("x"), w("y")}));
        CHECK(t.index == static_cast<std::size_t>(l));
      }
    }
  }
}

TEST_CASE("determinism") {
  auto p = Presentation({"a", "b"}, {w("a a"), w("b b b"), w("a b a b")});
  CHECK(todd_coxeter(p).digest == todd_coxeter(p).digest);
  CHECK(todd_coxeter(p).rows == todd_coxeter(p).rows);
}
