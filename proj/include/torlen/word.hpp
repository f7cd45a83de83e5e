#pragma once

// Words over signed generator symbols, free and cyclic reduction, and
// substitution.  Everything else in the library is built on these.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace torlen {

  // Generator names are identifiers over [A-Za-z0-9_] for user input.  Names
  // produced by the library may additionally contain '.' (factor tags) and
  // '#' (clash renaming, never in first position).  The inverse marker '^'
  // is never allowed.
  bool is_user_symbol(std::string_view name);
  bool is_valid_symbol(std::string_view name);

  struct Letter {
    std::string symbol;
    int         sign = 1;

    Letter inverse() const {
      return {symbol, -sign};
    }
    bool is_inverse_of(Letter const& other) const {
      return symbol == other.symbol && sign == -other.sign;
    }
    auto operator<=>(Letter const&) const = default;
  };

  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    // A single generator, or the power g^e.
    static Word generator(std::string const& symbol, long exponent = 1);

    // Whitespace separated tokens, each `name` or `name^-1`.
    static Word parse(std::string_view text);

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    // Reversed sequence with flipped signs.  Not reduced.
    Word inverse() const;
    // Plain concatenation.  Not reduced.
    Word operator*(Word const& other) const;
    Word& operator*=(Word const& other);
    // w^n for any integer n, concatenated without reduction.
    Word power(long n) const;
    // Rotation starting at letter `start`.
    Word rotation(std::size_t start) const;

    bool is_freely_reduced() const;
    bool is_cyclically_reduced() const;
    bool mentions(std::string_view symbol) const;

    std::string str() const;

    auto operator<=>(Word const&) const = default;
    bool operator==(Word const&) const  = default;

   private:
    std::vector<Letter> _letters;
  };

  std::string token(Letter const& letter);

  Word free_reduce(Word const& w);

  struct CyclicReduction {
    Word core;
    Word conjugator;
  };

  // w freely equals conjugator * core * conjugator^-1, core cyclically
  // reduced.
  CyclicReduction cyclic_reduce(Word const& w);

  // Least rotation of the cyclically reduced core of w or of its inverse.
  // Two words share it iff they are cyclic permutations of each other up to
  // inversion (after cyclic reduction).
  Word minimal_cyclic_form(Word const& w);

  using Substitution = std::map<std::string, Word, std::less<>>;

  // Replaces g by mapping[g] and g^-1 by its inverse, then reduces.
  // Images must not mention symbols that are themselves being replaced.
  Word substitute(Word const& w, Substitution const& mapping);

  // Integer encoding used by the search engines: generator i is +(i+1), its
  // inverse is -(i+1).
  using Code = std::vector<int>;

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept {
      return _symbols.size();
    }
    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }
    std::string const& symbol(std::size_t i) const {
      return _symbols.at(i);
    }
    bool contains(std::string_view name) const;
    // Throws Error for unknown names.
    std::size_t index(std::string_view name) const;

    Code encode(Word const& w) const;
    Word decode(Code const& code) const;

    bool operator==(Alphabet const& other) const {
      return _symbols == other._symbols;
    }

   private:
    std::vector<std::string>                     _symbols;
    std::unordered_map<std::string, std::size_t> _index;
  };

  namespace code {
    void reduce_in_place(Code& c);
    Code reduce(Code c);
    Code inverse(Code const& c);
    // Freely reduced product a*b, assuming both are reduced.
    Code multiply(Code const& a, Code const& b);

    struct CodeHash {
      std::size_t operator()(Code const& c) const noexcept;
    };
  }  // namespace code

}  // namespace torlen
