#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acewiki/lexicon.hpp"

namespace acewiki {

enum class Var : std::uint8_t { X, Y, Z };

inline constexpr Var kAllVars[] = {Var::X, Var::Y, Var::Z};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

enum class TokenKind : std::uint8_t { FunctionWord, LexWord, Variable, VarRef, Period };

// One word of a sentence. Variables coming from the tokenizer are always
// `Variable`; whether a variable token introduces or references a name is
// decided by the parser, and verbalize() emits the precise kind.
struct Token {
  TokenKind kind = TokenKind::FunctionWord;
  std::string surface;
  std::optional<Word> word;  // LexWord only
  std::optional<Var> var;    // Variable / VarRef only

  static Token function(std::string_view surface);
  static Token lex(const Word& word);
  static Token variable(Var v, bool reference = false);
  static Token period();

  bool is_variable() const { return kind == TokenKind::Variable || kind == TokenKind::VarRef; }

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenList = std::vector<Token>;

// Resolves wire strings against the lexicon. Unknown strings raise
// LexicalError with the token index.
TokenList tokenize(std::span<const std::string> words, const Lexicon& lexicon);
// Splits on whitespace first ("Zurich is a city ." style text).
TokenList tokenize_text(std::string_view text, const Lexicon& lexicon);
std::vector<std::string> split_words(std::string_view text);

std::vector<std::string> surfaces(std::span<const Token> tokens);
// Space-separated surface form; of-constructs are two tokens already.
std::string render(std::span<const Token> tokens);

}  // namespace acewiki
