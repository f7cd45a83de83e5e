#include <doctest.h>

#include "torlen/constructions.hpp"
#include "torlen/error.hpp"
#include "torlen/stallings.hpp"

using namespace torlen;

namespace {
  Word w(char const* text) {
    return Word::parse(text);
  }
}  // namespace

TEST_CASE("P_{j,k,l}") {
  CHECK(build_pjkl(2, 2, 2) == Presentation({"x", "y", "z"}, {w("x x"), w("y y"), w("x y z^-1 z^-1")}));
  auto p = build_pjkl(2, 3, 5);
  CHECK(p.relators()[0].size() == 2);
  CHECK(p.relators()[1].size() == 3);
  CHECK(p.relators()[2].size() == 7);
  CHECK_THROWS_AS(build_pjkl(1, 2, 2), Error);
}

TEST_CASE("P_n") {
  CHECK(build_pn(0) == Presentation());
  CHECK(build_pn(1) == Presentation({"x_"}, {w("x_ x_ x_")}));
  CHECK(build_pn(2)
        == Presentation({"x_", "x_0", "x_1"},
                        {w("x_0 x_0 x_0"), w("x_1 x_1 x_1"), w("x_0 x_1 x_^-1 x_^-1 x_^-1")}));
  auto p4 = build_pn(4);
  CHECK(p4.generators().size() == 15);
  CHECK(p4.relators().size() == 15);
  auto p2 = build_pn(3, 2);
  for (auto const& r : p2.relators()) {
    CHECK((r.size() == 2 || r.size() == 4));
  }
  CHECK_THROWS_AS(build_pn(2, 1), Error);
}

TEST_CASE("property: P_n shape") {
  for (std::size_t n = 0; n <= 10; ++n) {
    auto        p    = build_pn(n);
    std::size_t want = (std::size_t{1} << n) - 1;
    CHECK(p.generators().size() == want);
    CHECK(p.relators().size() == want);
    for (auto const& r : p.relators()) {
      CHECK((r.size() == 3 || r.size() == 5));
    }
  }
}

TEST_CASE("tgen") {
  Presentation p({"x_1"}, {w("x_1 x_1 x_1")});
  auto         res = build_tgen(p);
  CHECK(res.intermediate.generators().size() == 4);
  CHECK(res.intermediate.relators().size() == 3);
  CHECK(res.presentation.generators() == std::vector<std::string>{"a", "t"});
  CHECK(res.presentation.relators().size() == 1);
  CHECK(res.presentation.relators()[0] == free_reduce(res.images.at("x_1").power(3)));

  for (auto const& q : {build_pn(1), build_pn(2), build_pjkl(2, 2, 2), build_pjkl(2, 3, 4)}) {
    auto r = build_tgen(q);
    CHECK(r.intermediate.relators().size() == q.relators().size() + q.generators().size() + 1);
    CHECK(r.presentation.generators() == std::vector<std::string>{"a", "t"});
    CHECK(r.presentation.relators().size() == q.relators().size());
  }

  auto clash = build_tgen(Presentation({"a", "q"}, {w("a a q^-1")}));
  CHECK(clash.renamed.at("a") == "a#1");
  CHECK(clash.images.count("a") == 1);
}

TEST_CASE("property: adjoining before or after tgen") {
  for (auto const& p : {build_pn(1), build_pjkl(2, 2, 2), build_pn(2)}) {
    auto full = build_tgen(p);
    for (auto const& g : p.generators()) {
      Word gw     = Word::generator(g);
      auto before = build_tgen(adjoin_relators(p, {gw})).presentation;
      auto after  = adjoin_relators(full.presentation, {full.images.at(g)});
      CHECK(canonicalize(before) == canonicalize(after));
    }
  }
}

TEST_CASE("Leary-Nucinkis construction") {
  auto res = build_ln(Presentation({"z"}, {w("z z")}));
  CHECK(res.rank == 1);
  CHECK(res.presentation.generators() == std::vector<std::string>{"z", "x", "y"});
  REQUIRE(res.presentation.relators().size() == 3);
  Word a     = w("y x y");
  Word b     = w("x y x y x");
  Word third = free_reduce(w("z z") * (b.inverse() * a * b).inverse());
  CHECK(res.presentation.relators()[2] == third);

  for (auto const& p : {Presentation({"z"}, {w("z z")}), build_pn(1), build_pjkl(2, 2, 2)}) {
    auto ln = build_ln(p);
    CHECK(canonicalize(kill_generators(ln.presentation, {"x", "y"})) == canonicalize(p));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    auto q = build_qn(n);
    CHECK(q.generators().size() == 2 * n - 1);
    CHECK(q.relators().size() <= 2 * n - 1);
  }
  CHECK(build_qn(1) == Presentation({"z"}, {w("z z")}));
  CHECK_THROWS_AS(build_qn(0), Error);

  auto free_case = build_ln(Presentation({"u"}, {}));
  CHECK(free_case.degenerate);
  CHECK(free_case.presentation.relators().size() == 2);

  auto clash = build_ln(Presentation({"x"}, {w("x x x")}));
  CHECK(clash.renamed.at("x") == "x#1");
}

TEST_CASE("chains") {
  CHECK(build_chain(0) == Presentation());
  CHECK(canonicalize(build_chain(1)) == canonicalize(build_pn(1)));
  auto c2 = build_chain(2);
  CHECK(c2.generators().size() == 4);
  CHECK(c2.relators().size() == 4);
  CHECK(c2.generators().front() == "f1.x_");
}
