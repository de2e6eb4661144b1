#include "acewiki/token.hpp"

#include <sstream>

#include "acewiki/error.hpp"

namespace acewiki {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::X: return "X";
    case Var::Y: return "Y";
    case Var::Z: return "Z";
  }
  return "?";
}

std::optional<Var> var_from_name(std::string_view name) {
  if (name == "X") return Var::X;
  if (name == "Y") return Var::Y;
  if (name == "Z") return Var::Z;
  return std::nullopt;
}

Token Token::function(std::string_view surface) {
  return Token{TokenKind::FunctionWord, std::string(surface), std::nullopt, std::nullopt};
}

Token Token::lex(const Word& word) {
  return Token{TokenKind::LexWord, word.surface, word, std::nullopt};
}

Token Token::variable(Var v, bool reference) {
  return Token{reference ? TokenKind::VarRef : TokenKind::Variable, std::string(var_name(v)),
               std::nullopt, v};
}

Token Token::period() { return Token{TokenKind::Period, ".", std::nullopt, std::nullopt}; }

TokenList tokenize(std::span<const std::string> words, const Lexicon& lexicon) {
  TokenList out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w == ".") {
      out.push_back(Token::period());
    } else if (auto v = var_from_name(w)) {
      out.push_back(Token::variable(*v));
    } else if (is_reserved(w)) {
      out.push_back(Token::function(w));
    } else if (auto word = lexicon.lookup(w)) {
      out.push_back(Token::lex(*word));
    } else {
      throw Error(ErrorCode::LexicalError, "unknown word '" + w + "'", i);
    }
  }
  return out;
}

std::vector<std::string> split_words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

TokenList tokenize_text(std::string_view text, const Lexicon& lexicon) {
  auto words = split_words(text);
  return tokenize(words, lexicon);
}

std::vector<std::string> surfaces(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::string render(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

}  // namespace acewiki
