#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "metonym/caseframe.hpp"
#include "metonym/errors.hpp"
#include "metonym/text_util.hpp"

namespace metonym {

enum class TokenTag { Noun, Verb, Particle, Other };

// One pre-tokenized, POS-tagged corpus token. Stands in for analyzer
// output; the engine never segments raw text.
struct Token {
  std::string surface;
  TokenTag tag = TokenTag::Other;
  std::string particle;  // set iff tag == Particle

  static Token noun(std::string s) { return {std::move(s), TokenTag::Noun, {}}; }
  static Token verb(std::string s) { return {std::move(s), TokenTag::Verb, {}}; }
  static Token part(std::string s, std::string p) {
    return {std::move(s), TokenTag::Particle, std::move(p)};
  }
  static Token other(std::string s) { return {std::move(s), TokenTag::Other, {}}; }

  bool is_noun() const { return tag == TokenTag::Noun; }
  bool is_verb() const { return tag == TokenTag::Verb; }
  bool is_particle(std::string_view p) const {
    return tag == TokenTag::Particle && particle == p;
  }
};

inline bool is_corpus_particle(std::string_view p) {
  return p == "no" || is_case_particle(p);
}

// `surface/TAG` with TAG in {N, V, O, P:<particle>}. The surface may itself
// contain '/'; the tag starts at the last one.
inline Token parse_token(std::string_view text, std::size_t line_no, std::size_t position) {
  const auto slash = text.rfind('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size()) {
    throw MalformedTokenError(line_no, position, "expected `surface/TAG`: " + std::string(text));
  }
  const std::string surface(text.substr(0, slash));
  const std::string_view tag = text.substr(slash + 1);
  if (tag == "N") return Token::noun(surface);
  if (tag == "V") return Token::verb(surface);
  if (tag == "O") return Token::other(surface);
  if (tag.size() > 2 && tag.substr(0, 2) == "P:") {
    const std::string particle(tag.substr(2));
    if (!is_corpus_particle(particle)) {
      throw MalformedTokenError(line_no, position, "unknown particle: " + particle);
    }
    return Token::part(surface, particle);
  }
  throw MalformedTokenError(line_no, position, "unknown tag: " + std::string(tag));
}

// One sentence: space-separated `surface/TAG` tokens.
inline std::vector<Token> parse_sentence(std::string_view line, std::size_t line_no = 0) {
  std::vector<Token> tokens;
  std::size_t position = 0;
  for (const auto piece : split(line, ' ')) {
    const auto t = trim(piece);
    if (t.empty()) continue;
    tokens.push_back(parse_token(t, line_no, ++position));
  }
  return tokens;
}

// Extracts the clause structure from a tagged token line: every noun
// immediately followed by a particle becomes an argument, and the last verb
// token is the predicative verb.
inline InputClause parse_clause(std::string_view line, std::size_t line_no = 0) {
  std::vector<Token> tokens;
  try {
    tokens = parse_sentence(line, line_no);
  } catch (const MalformedTokenError& e) {
    throw ClauseParseError(e.what());
  }
  InputClause clause;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].is_noun() && tokens[i + 1].tag == TokenTag::Particle) {
      clause.arguments.push_back({tokens[i].surface, tokens[i + 1].particle});
    }
  }
  for (const auto& t : tokens) {
    if (t.is_verb()) clause.verb = t.surface;
  }
  if (clause.verb.empty()) throw ClauseParseError("clause has no verb token");
  if (clause.arguments.empty()) throw ClauseParseError("clause has no `noun particle` argument");
  return clause;
}

}  // namespace metonym
