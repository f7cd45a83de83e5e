#include "torlen/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "torlen/error.hpp"

namespace torlen {

  namespace {
    bool is_identifier_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    constexpr std::string_view inverse_suffix = "^-1";
  }  // namespace

  bool is_user_symbol(std::string_view name) {
    return !name.empty()
           && std::all_of(name.begin(), name.end(), is_identifier_char);
  }

  bool is_valid_symbol(std::string_view name) {
    if (name.empty() || name.front() == '#') {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return is_identifier_char(c) || c == '.' || c == '#';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::vector<Letter> letters) : _letters(std::move(letters)) {
    for (auto const& l : _letters) {
      if (!is_valid_symbol(l.symbol)) {
        throw Error("invalid generator symbol '" + l.symbol + "'");
      }
      if (l.sign != 1 && l.sign != -1) {
        throw Error("letter sign must be +1 or -1");
      }
    }
  }

  Word Word::generator(std::string const& symbol, long exponent) {
    Letter l{symbol, exponent < 0 ? -1 : 1};
    return Word(std::vector<Letter>(static_cast<std::size_t>(std::labs(exponent)),
                                    l));
  }

  Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    std::istringstream  in{std::string(text)};
    std::string         tok;
    while (in >> tok) {
      int sign = 1;
      if (tok.size() > inverse_suffix.size()
          && std::string_view(tok).substr(tok.size() - inverse_suffix.size())
                 == inverse_suffix) {
        sign = -1;
        tok.resize(tok.size() - inverse_suffix.size());
      }
      if (!is_valid_symbol(tok)) {
        throw Error("invalid word token '" + tok + "'");
      }
      letters.push_back({tok, sign});
    }
    return Word(std::move(letters));
  }

  Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      out.push_back(it->inverse());
    }
    Word w;
    w._letters = std::move(out);
    return w;
  }

  Word Word::operator*(Word const& other) const {
    Word w = *this;
    w *= other;
    return w;
  }

  Word& Word::operator*=(Word const& other) {
    _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
    return *this;
  }

  Word Word::power(long n) const {
    Word base = n < 0 ? inverse() : *this;
    Word out;
    for (long i = 0; i < std::labs(n); ++i) {
      out *= base;
    }
    return out;
  }

  Word Word::rotation(std::size_t start) const {
    if (_letters.empty()) {
      return *this;
    }
    start %= _letters.size();
    Word w;
    w._letters.reserve(_letters.size());
    w._letters.insert(w._letters.end(), _letters.begin() + start, _letters.end());
    w._letters.insert(w._letters.end(), _letters.begin(), _letters.begin() + start);
    return w;
  }

  bool Word::is_freely_reduced() const {
    for (std::size_t i = 1; i < _letters.size(); ++i) {
      if (_letters[i].is_inverse_of(_letters[i - 1])) {
        return false;
      }
    }
    return true;
  }

  bool Word::is_cyclically_reduced() const {
    return is_freely_reduced()
           && (_letters.size() < 2
               || !_letters.front().is_inverse_of(_letters.back()));
  }

  bool Word::mentions(std::string_view symbol) const {
    return std::any_of(_letters.begin(), _letters.end(), [&](Letter const& l) {
      return l.symbol == symbol;
    });
  }

  std::string token(Letter const& letter) {
    return letter.sign < 0 ? letter.symbol + std::string(inverse_suffix)
                           : letter.symbol;
  }

  std::string Word::str() const {
    std::string out;
    for (auto const& l : _letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += token(l);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction and substitution
  ////////////////////////////////////////////////////////////////////////

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto const& l : w.letters()) {
      if (!stack.empty() && stack.back().is_inverse_of(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  CyclicReduction cyclic_reduce(Word const& w) {
    Word        reduced = free_reduce(w);
    auto        letters = reduced.letters();
    std::size_t lo = 0, hi = letters.size();
    while (hi - lo >= 2 && letters[lo].is_inverse_of(letters[hi - 1])) {
      ++lo;
      --hi;
    }
    return {Word({letters.begin() + lo, letters.begin() + hi}),
            Word({letters.begin(), letters.begin() + lo})};
  }

  Word minimal_cyclic_form(Word const& w) {
    Word core = cyclic_reduce(w).core;
    if (core.empty()) {
      return core;
    }
    Word best = core;
    for (Word const& base : {core, core.inverse()}) {
      for (std::size_t s = 0; s < base.size(); ++s) {
        Word r = base.rotation(s);
        if (r < best) {
          best = std::move(r);
        }
      }
    }
    return best;
  }

  Word substitute(Word const& w, Substitution const& mapping) {
    Word out;
    for (auto const& l : w.letters()) {
      auto it = mapping.find(l.symbol);
      if (it == mapping.end()) {
        out *= Word({l});
      } else if (l.sign > 0) {
        out *= it->second;
      } else {
        out *= it->second.inverse();
      }
    }
    return free_reduce(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet / Code
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> symbols)
      : _symbols(std::move(symbols)) {
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      if (!_index.emplace(_symbols[i], i).second) {
        throw Error("duplicate generator '" + _symbols[i] + "'");
      }
    }
  }

  bool Alphabet::contains(std::string_view name) const {
    return _index.count(std::string(name)) > 0;
  }

  std::size_t Alphabet::index(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      throw Error("undeclared generator '" + std::string(name) + "'");
    }
    return it->second;
  }

  Code Alphabet::encode(Word const& w) const {
    Code c;
    c.reserve(w.size());
    for (auto const& l : w.letters()) {
      c.push_back(l.sign * static_cast<int>(index(l.symbol) + 1));
    }
    return c;
  }

  Word Alphabet::decode(Code const& code) const {
    std::vector<Letter> letters;
    letters.reserve(code.size());
    for (int x : code) {
      letters.push_back({_symbols.at(static_cast<std::size_t>(std::abs(x) - 1)),
                         x < 0 ? -1 : 1});
    }
    return Word(std::move(letters));
  }

  namespace code {
    void reduce_in_place(Code& c) {
      std::size_t top = 0;
      for (int x : c) {
        if (top > 0 && c[top - 1] == -x) {
          --top;
        } else {
          c[top++] = x;
        }
      }
      c.resize(top);
    }

    Code reduce(Code c) {
      reduce_in_place(c);
      return c;
    }

    Code inverse(Code const& c) {
      Code out(c.rbegin(), c.rend());
      for (int& x : out) {
        x = -x;
      }
      return out;
    }

    Code multiply(Code const& a, Code const& b) {
      std::size_t k = 0;
      while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == -b[k]) {
        ++k;
      }
      Code out;
      out.reserve(a.size() + b.size() - 2 * k);
      out.insert(out.end(), a.begin(), a.end() - static_cast<long>(k));
      out.insert(out.end(), b.begin() + static_cast<long>(k), b.end());
      return out;
    }

    std::size_t CodeHash::operator()(Code const& c) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (int x : c) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  }  // namespace code

}  // namespace torlen
