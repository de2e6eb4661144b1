#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "acewiki/lexicon.hpp"

namespace acewiki::testing {

// Brute-force enumerator of the controlled-English grammar, written
// directly from the grammar rules with its own variable scoping (DRS
// accessibility). It shares no code with the recognizer.
class SentenceGenerator {
 public:
  explicit SentenceGenerator(const Lexicon& lexicon);

  // Every sentence of at most `max_tokens` tokens (period included).
  void for_each(std::size_t max_tokens, const std::function<void(const std::vector<std::string>&)>& f) const;

  // Whether some sentence of at most `max_tokens` tokens starts with `prefix`.
  bool completable(const std::vector<std::string>& prefix, std::size_t max_tokens) const;

  // Tokens that follow `prefix` in some sentence of at most `max_tokens`
  // tokens. Tokens in `known` are taken as given and not searched again.
  std::set<std::string> next_tokens(const std::vector<std::string>& prefix, std::size_t max_tokens,
                                    std::set<std::string> known = {}) const;

  // Shortest sentence length starting with `prefix`, searching up to `limit`.
  std::size_t shortest_completion(const std::vector<std::string>& prefix, std::size_t limit) const;

 private:
  std::vector<std::string> names_, nouns_, verbs_, ofs_;
};

}  // namespace acewiki::testing
