#include <doctest.h>

#include <random>

#include "oracles/closure_oracle.hpp"
#include "torlen/stallings.hpp"

using namespace torlen;

namespace {
  Word w(char const* text) {
    return Word::parse(text);
  }

  std::vector<Word> random_gens(std::mt19937_64& rng, Alphabet const& al) {
    std::vector<Word> out;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) {
      Code c;
      for (std::size_t len = 1 + rng() % 4; c.size() < len;) {
        int g = static_cast<int>(rng() % al.size()) + 1;
        int x = rng() % 2 ? g : -g;
        if (c.empty() || c.back() != -x) {
          c.push_back(x);
        }
      }
      out.push_back(al.decode(c));
    }
    return out;
  }
}  // namespace

TEST_CASE("rank and basis examples") {
  auto loop = build_subgroup_graph({"a", "b"}, {w("a")});
  CHECK(rank(loop) == 1);
  CHECK(free_basis(loop) == std::vector<Word>{w("a")});
  CHECK(membership(loop, w("a a a a a")));
  CHECK_FALSE(membership(loop, w("b")));

  auto conj = build_subgroup_graph({"a", "b"}, {w("b^-1 a b"), w("b^-1 b^-1 a b b")});
  CHECK(rank(conj) == 2);
  auto basis = free_basis(conj);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] != basis[1]);
  for (auto const& b : basis) {
    CHECK(membership(conj, b));
  }
  CHECK(membership(conj, w("b^-1 a b")));
  CHECK(membership(conj, w("b^-1 b^-1 a b b")));

  auto cyc = build_subgroup_graph({"a"}, {w("a a"), w("a a a")});
  CHECK(rank(cyc) == 1);
  CHECK(free_basis(cyc) == std::vector<Word>{w("a")});
  CHECK(membership(cyc, w("a")));

  CHECK(membership(build_subgroup_graph({"a", "b"}, {w("b^-1 a b")}), w("b^-1 a a b")));
}

TEST_CASE("closure oracle on a cyclic subgroup") {
  auto ball = oracle::subgroup_ball({{1, 1}, {1, 1, 1}}, 1, 6);
  CHECK(ball.size() == 13);  // a^-6 .. a^6
}

TEST_CASE("property: folding is confluent") {
  std::mt19937_64 rng(5);
  Alphabet        al({"a", "b", "c"});
  for (int trial = 0; trial < 100; ++trial) {
    auto gens = random_gens(rng, al);
    auto g    = build_subgroup_graph(al.symbols(), gens);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CHECK(build_subgroup_graph_random_order(al.symbols(), gens, seed * 31 + trial) == g);
    }
  }
}

TEST_CASE("property: full ambient group has full rank") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::string> syms;
    std::vector<Word>        gens;
    for (std::size_t i = 0; i < n; ++i) {
      syms.push_back("s" + std::to_string(i));
      gens.push_back(Word::generator(syms.back()));
    }
    CHECK(rank(build_subgroup_graph(syms, gens)) == n);
  }
}

TEST_CASE("property: short products are members; basis regenerates") {
  std::mt19937_64 rng(11);
  Alphabet        al({"a", "b"});
  for (int trial = 0; trial < 100; ++trial) {
    auto gens = random_gens(rng, al);
    auto g    = build_subgroup_graph(al.symbols(), gens);
    std::vector<Word> moves;
    for (auto const& x : gens) {
      moves.push_back(x);
      moves.push_back(x.inverse());
    }
    for (auto const& x : moves) {
      for (auto const& y : moves) {
        for (auto const& z : moves) {
          CHECK(membership(g, x * y * z));
        }
      }
    }
    auto basis = free_basis(g);
    CHECK(basis.size() == rank(g));
    CHECK(rank(build_subgroup_graph(al.symbols(), basis)) == rank(g));
    CHECK(build_subgroup_graph(al.symbols(), basis) == g);
  }
}

TEST_CASE("property: membership agrees with the closure oracle (sample)") {
  std::mt19937_64 rng(3);
  Alphabet        al({"a", "b"});
  auto            words = oracle::reduced_words(2, 8);
  for (int trial = 0; trial < 30; ++trial) {
    auto                         gens = random_gens(rng, al);
    std::vector<oracle::Letters> codes;
    for (auto const& x : gens) {
      codes.push_back(al.encode(x));
    }
    auto ball = oracle::subgroup_ball(codes, 2, 8);
    auto g    = build_subgroup_graph(al.symbols(), gens);
    std::size_t bad = 0;
    for (auto const& t : words) {
      bad += membership(g, al.decode(t)) != (ball.count(t) != 0);
    }
    CHECK(bad == 0);
    CHECK(rank(g) == g.edges().size() + 1 - g.vertex_count());
  }
}
