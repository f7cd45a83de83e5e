#include <cctype>
#include <optional>
#include <set>

#include "torlen/error.hpp"
#include "torlen/presentation.hpp"

namespace torlen {

  namespace {

    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    // Splits a line on whitespace; a token beginning with '#' starts a
    // comment.  Generator names may contain '#' after their first character.
    std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i >= line.size() || line[i] == '#') {
          break;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
      }
      return out;
    }

    constexpr std::string_view inverse_suffix = "^-1";

  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    std::optional<std::vector<std::string>> gens;
    std::set<std::string>                   declared;
    std::vector<Word>                       rels;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      ++line_no;
      pos = end + 1;

      auto tokens = tokenize(line);
      if (tokens.empty()) {
        continue;
      }
      auto const& head = tokens.front();
      if (head.text == "gens:") {
        if (gens) {
          throw ParseError("second 'gens:' line", line_no, head.column);
        }
        gens.emplace();
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          auto const& tok = tokens[i];
          if (!is_valid_symbol(tok.text)) {
            throw ParseError("invalid generator name '" + tok.text + "'", line_no,
                             tok.column);
          }
          if (!declared.insert(tok.text).second) {
            throw ParseError("duplicate generator '" + tok.text + "'", line_no,
                             tok.column);
          }
          gens->push_back(tok.text);
        }
      } else if (head.text == "rel:") {
        if (!gens) {
          throw ParseError("'rel:' before 'gens:'", line_no, head.column);
        }
        std::vector<Letter> letters;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          auto        tok  = tokens[i];
          int         sign = 1;
          std::string name = tok.text;
          if (name.size() > inverse_suffix.size()
              && std::string_view(name).substr(name.size() - inverse_suffix.size())
                     == inverse_suffix) {
            sign = -1;
            name.resize(name.size() - inverse_suffix.size());
          }
          if (!is_valid_symbol(name)) {
            throw ParseError("invalid token '" + tok.text + "'", line_no, tok.column);
          }
          if (declared.count(name) == 0) {
            throw ParseError("undeclared generator '" + name + "'", line_no,
                             tok.column);
          }
          letters.push_back({name, sign});
        }
        rels.emplace_back(std::move(letters));
      } else {
        throw ParseError("expected 'gens:' or 'rel:', found '" + head.text + "'",
                         line_no, head.column);
      }
    }
    if (!gens) {
      throw ParseError("missing 'gens:' line", line_no, 1);
    }
    return Presentation(std::move(*gens), std::move(rels));
  }

  std::string serialize(Presentation const& p) {
    std::string out = "gens:";
    for (auto const& g : p.generators()) {
      out += ' ';
      out += g;
    }
    out += '\n';
    for (auto const& r : p.relators()) {
      out += "rel:";
      for (auto const& l : r.letters()) {
        out += ' ';
        out += token(l);
      }
      out += '\n';
    }
    return out;
  }

}  // namespace torlen
