#include <doctest.h>

#include <random>

#include "torlen/error.hpp"
#include "torlen/word.hpp"

using namespace torlen;

namespace {
  Word w(char const* text) {
    return Word::parse(text);
  }
}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(w("x x^-1")).empty());
  CHECK(free_reduce(w("x y y^-1 x")) == w("x x"));
  CHECK(free_reduce(w("a a b a")) == w("a a b a"));
}

TEST_CASE("cyclic reduction") {
  auto r = cyclic_reduce(w("b^-1 a b"));
  CHECK(r.core == w("a"));
  CHECK(r.conjugator == w("b^-1"));
  r = cyclic_reduce(w("x y"));
  CHECK(r.core == w("x y"));
  CHECK(r.conjugator.empty());
  r = cyclic_reduce(w("t^-1 x x t"));
  CHECK(r.core == w("x x"));
  CHECK(r.conjugator == w("t^-1"));
}

TEST_CASE("substitution") {
  CHECK(substitute(w("b^-1 a b"), {{"b", w("t^-1 a t")}}) == w("t^-1 a^-1 t a t^-1 a t"));
  CHECK(substitute(w("x y"), {{"x", Word()}}) == w("y"));
  CHECK(substitute(w("a b a"), {}) == w("a b a"));
}

TEST_CASE("parsing and printing") {
  CHECK(w("a b^-1 c").str() == "a b^-1 c");
  CHECK(Word::generator("x", -3) == w("x^-1 x^-1 x^-1"));
  CHECK_THROWS_AS(Word::parse("a^2"), Error);
  CHECK_THROWS_AS(Word::parse("a^"), Error);
  CHECK_THROWS_AS(Word::parse("a-b"), Error);
  CHECK(Word::parse("a#1 f0.x").size() == 2);
}

TEST_CASE("minimal cyclic form identifies rotations and inverses") {
  CHECK(minimal_cyclic_form(w("b a a")) == minimal_cyclic_form(w("a^-1 a^-1 b^-1")));
  CHECK(minimal_cyclic_form(w("c^-1 a b c")) == minimal_cyclic_form(w("b a")));
  CHECK(minimal_cyclic_form(w("a b")) != minimal_cyclic_form(w("a b^-1")));
}

TEST_CASE("property: reduction agrees between words and codes") {
  std::mt19937_64 rng(7);
  Alphabet        al({"a", "b", "c"});
  for (int trial = 0; trial < 500; ++trial) {
    Code c;
    for (std::size_t i = rng() % 12; i > 0; --i) {
      int g = static_cast<int>(rng() % 3) + 1;
      c.push_back(rng() % 2 ? g : -g);
    }
    Word word = al.decode(c);
    Word red  = free_reduce(word);
    CHECK(al.encode(red) == code::reduce(c));
    CHECK(red.is_freely_reduced());
    CHECK(free_reduce(red * red.inverse()).empty());
    auto cr = cyclic_reduce(red);
    CHECK(cr.core.is_cyclically_reduced());
    CHECK(free_reduce(cr.conjugator * cr.core * cr.conjugator.inverse()) == red);
    Code x = code::reduce(c);
    CHECK(code::multiply(x, code::inverse(x)).empty());
  }
}
