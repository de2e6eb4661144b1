#include "acewiki/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "acewiki/error.hpp"

namespace acewiki {

std::string_view category_code(WordCategory category) {
  switch (category) {
    case WordCategory::ProperName: return "pn";
    case WordCategory::Noun: return "noun";
    case WordCategory::TransitiveVerb: return "tv";
    case WordCategory::OfConstruct: return "of";
  }
  return "?";
}

std::optional<WordCategory> category_from_code(std::string_view code) {
  for (WordCategory c : kAllCategories) {
    if (category_code(c) == code) return c;
  }
  return std::nullopt;
}

std::string Word::symbol() const {
  return category == WordCategory::OfConstruct ? surface + "-of" : surface;
}

std::string Word::display() const {
  return category == WordCategory::OfConstruct ? surface + " of" : surface;
}

const std::vector<std::string>& reserved_words() {
  static const std::vector<std::string> kReserved = {
      "every", "no",  "a",  "an",   "something", "everything", "is",
      "not",   "does", "if", "then", "and",       "or",         "it",
      "false", "that", "who", "of",  "X",         "Y",          "Z",
      "."};
  return kReserved;
}

bool is_reserved(std::string_view surface) {
  const auto& r = reserved_words();
  return std::find(r.begin(), r.end(), surface) != r.end();
}

bool is_valid_surface(std::string_view surface) {
  if (surface.empty()) return false;
  return std::all_of(surface.begin(), surface.end(), [](char ch) {
    auto u = static_cast<unsigned char>(ch);
    return u >= 0x80 || std::isalnum(u) || ch == '-';
  });
}

bool takes_an(std::string_view surface) {
  if (surface.empty()) return false;
  switch (std::tolower(static_cast<unsigned char>(surface.front()))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

bool alphabetical_less(std::string_view a, std::string_view b) {
  auto lower = [](char ch) { return static_cast<char>(std::tolower(static_cast<unsigned char>(ch))); };
  bool less = std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                           [&](char x, char y) { return lower(x) < lower(y); });
  if (less) return true;
  bool greater = std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(),
                                              [&](char x, char y) { return lower(x) < lower(y); });
  // Case-insensitive ties fall back to byte order so the order stays total.
  return !greater && a < b;
}

Word Lexicon::add_word(WordCategory category, std::string_view surface) {
  if (!is_valid_surface(surface)) {
    throw Error(ErrorCode::InvalidSurface, "invalid word surface '" + std::string(surface) + "'");
  }
  if (is_reserved(surface)) {
    throw Error(ErrorCode::ReservedWord, "'" + std::string(surface) + "' is a function word");
  }
  if (index_.count(surface)) {
    throw Error(ErrorCode::DuplicateSurface, "'" + std::string(surface) + "' is already defined");
  }
  // A verb "x-of" and an of-construct "x" would denote the same role.
  if (category == WordCategory::TransitiveVerb && surface.size() > 3 &&
      surface.substr(surface.size() - 3) == "-of") {
    auto other = lookup(surface.substr(0, surface.size() - 3));
    if (other && other->category == WordCategory::OfConstruct) {
      throw Error(ErrorCode::DuplicateSurface,
                  "'" + std::string(surface) + "' clashes with of-construct '" + other->display() + "'");
    }
  }
  if (category == WordCategory::OfConstruct) {
    auto other = lookup(std::string(surface) + "-of");
    if (other && other->category == WordCategory::TransitiveVerb) {
      throw Error(ErrorCode::DuplicateSurface,
                  "'" + std::string(surface) + " of' clashes with verb '" + other->surface + "'");
    }
  }
  Word word{WordId{next_id_++}, category, std::string(surface)};
  by_id_.emplace(word.id.value, word);
  index_.emplace(word.surface, word.id.value);
  return word;
}

std::optional<Word> Lexicon::lookup(std::string_view surface) const {
  auto it = index_.find(surface);
  if (it == index_.end()) return std::nullopt;
  return by_id_.at(it->second);
}

std::optional<Word> Lexicon::find(WordId id) const {
  auto it = by_id_.find(id.value);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

void Lexicon::remove_word(WordId id) {
  auto it = by_id_.find(id.value);
  if (it == by_id_.end()) {
    throw Error(ErrorCode::UnknownWord, "unknown word id " + std::to_string(id.value));
  }
  index_.erase(it->second.surface);
  by_id_.erase(it);
}

std::vector<Word> Lexicon::complete_prefix(std::string_view prefix, WordCategory category) const {
  std::vector<Word> out;
  for (const auto& [id, word] : by_id_) {
    if (word.category == category && std::string_view(word.surface).substr(0, prefix.size()) == prefix) {
      out.push_back(word);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return alphabetical_less(a.surface, b.surface); });
  return out;
}

std::vector<Word> Lexicon::words() const {
  std::vector<Word> out;
  out.reserve(by_id_.size());
  for (const auto& [id, word] : by_id_) out.push_back(word);
  return out;
}

std::string Lexicon::to_text() const {
  std::string out;
  for (const auto& [id, word] : by_id_) {
    out += "word ";
    out += category_code(word.category);
    out += ' ';
    out += word.surface;
    out += '\n';
  }
  return out;
}

Lexicon Lexicon::from_text(std::string_view text) {
  Lexicon lexicon;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string keyword, code, surface, extra;
    fields >> keyword >> code >> surface;
    auto category = category_from_code(code);
    if (keyword != "word" || !category || surface.empty() || (fields >> extra)) {
      throw Error(ErrorCode::FormatError, "malformed lexicon entry", std::nullopt, number);
    }
    try {
      lexicon.add_word(*category, surface);
    } catch (const Error& e) {
      throw Error(ErrorCode::FormatError, e.what(), std::nullopt, number);
    }
  }
  return lexicon;
}

}  // namespace acewiki
