#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acewiki {

enum class WordCategory : std::uint8_t { ProperName, Noun, TransitiveVerb, OfConstruct };

inline constexpr WordCategory kAllCategories[] = {
    WordCategory::ProperName, WordCategory::Noun, WordCategory::TransitiveVerb,
    WordCategory::OfConstruct};

// Short codes used by the lexicon/wiki file format and the HTTP API: pn, noun, tv, of.
std::string_view category_code(WordCategory category);
std::optional<WordCategory> category_from_code(std::string_view code);

struct WordId {
  std::uint32_t value = 0;
  friend auto operator<=>(const WordId&, const WordId&) = default;
};

struct Word {
  WordId id;
  WordCategory category = WordCategory::Noun;
  std::string surface;

  // Name of the logical symbol: the surface, except that of-constructs
  // denote the role "<surface>-of".
  std::string symbol() const;
  // Surface as shown to users ("part of" for of-constructs).
  std::string display() const;

  friend bool operator==(const Word&, const Word&) = default;
};

// Function words and composite phrases of the controlled language.
bool is_reserved(std::string_view surface);
const std::vector<std::string>& reserved_words();

// Token syntax: non-empty, ASCII letters, digits, hyphens (bytes >= 0x80 are
// accepted so UTF-8 names work).
bool is_valid_surface(std::string_view surface);

// True iff "an" is the article for this word (initial a, e, i, o, u).
bool takes_an(std::string_view surface);

// ASCII case-insensitive less-than used for every alphabetical menu.
bool alphabetical_less(std::string_view a, std::string_view b);

class Lexicon {
 public:
  Word add_word(WordCategory category, std::string_view surface);
  std::optional<Word> lookup(std::string_view surface) const;
  std::optional<Word> find(WordId id) const;
  void remove_word(WordId id);

  // Words of `category` whose surface starts with `prefix`, alphabetical.
  std::vector<Word> complete_prefix(std::string_view prefix, WordCategory category) const;

  // All words in creation order.
  std::vector<Word> words() const;
  std::size_t size() const { return by_id_.size(); }
  bool empty() const { return by_id_.empty(); }

  // Lexicon text format: one `word <pn|noun|tv|of> <surface>` entry per line.
  std::string to_text() const;
  static Lexicon from_text(std::string_view text);

 private:
  std::map<std::uint32_t, Word> by_id_;
  std::map<std::string, std::uint32_t, std::less<>> index_;
  std::uint32_t next_id_ = 1;
};

}  // namespace acewiki
