#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acewiki/ast.hpp"
#include "acewiki/grammar.hpp"
#include "acewiki/lexicon.hpp"
#include "acewiki/logic.hpp"
#include "acewiki/reasoner.hpp"

namespace acewiki {

using SentenceId = std::uint64_t;

struct Sentence {
  SentenceId id = 0;
  TokenList tokens;
  SentenceAst ast;
  Axiom axiom;
  SentencePattern pattern = SentencePattern::Other;
  std::uint64_t version = 1;

  std::string text() const { return render(tokens); }
};

// Informal text attached to an article, rendered in italics, never parsed.
struct Note {
  std::string word;
  std::string text;

  friend bool operator==(const Note&, const Note&) = default;
};

struct Article {
  Word word;
  std::map<Box, std::vector<Sentence>> boxes;  // all boxes present
  std::vector<Sentence> unrestricted;          // creation order
  std::vector<std::string> comments;
};

struct StatsReport {
  std::size_t sentences = 0;
  std::map<SentencePattern, std::size_t> pattern_counts;  // every pattern present
  std::size_t neg_or_impl = 0;
  double neg_or_impl_fraction = 0.0;
  // Present only when annotations are given.
  std::optional<std::size_t> s, s_plus, s_minus;
  std::optional<double> ratio;
};

// Correctness judgments keyed by sentence id.
using Annotations = std::map<SentenceId, bool>;

// The wiki state. Every mutating call either succeeds completely or throws
// and leaves the object unchanged.
class Wiki {
 public:
  const Lexicon& lexicon() const { return lexicon_; }
  const KnowledgeBase& kb() const { return kb_; }
  std::uint64_t revision() const { return revision_; }
  const std::map<SentenceId, Sentence>& sentences() const { return sentences_; }
  const std::vector<Note>& notes() const { return notes_; }

  Word add_word(WordCategory category, std::string_view surface);
  // Throws UnknownWord, or WordInUse while a sentence mentions the word.
  // Notes on the word's article go with it.
  void remove_word(std::string_view surface);

  // Throws ParseFailed (with the token position), or StaleRevision when
  // `expected_revision` is given and differs from revision().
  const Sentence& create_sentence(std::span<const std::string> tokens, const Grammar& grammar = {},
                                  std::optional<std::uint64_t> expected_revision = std::nullopt);
  // Throws UnknownSentence, VersionConflict, ParseFailed.
  const Sentence& edit_sentence(SentenceId id, std::uint64_t expected_version, std::span<const std::string> tokens,
                                const Grammar& grammar = {});
  // Throws UnknownSentence, VersionConflict.
  void delete_sentence(SentenceId id, std::uint64_t expected_version);
  const Sentence& sentence(SentenceId id) const;

  void add_note(std::string_view word, std::string_view text);

  Article article(std::string_view surface) const;

  // Grammar prediction with proper-name and noun menus ranked by the
  // reasoner when the prefix ends in an object position of a role.
  Prediction predict(std::span<const std::string> prefix, const Grammar& grammar = {}) const;

  // Wiki file format. ids are not stored; import numbers sentences 1, 2, ...
  std::string export_text() const;
  // Throws FormatError(line) or UnknownWordInSentence(line).
  static Wiki import_text(std::string_view text);

  // Throws AnnotationForUnknownSentence.
  StatsReport stats(const Annotations* annotations = nullptr) const;

  // Replaces the whole state, keeping the revision counter increasing.
  void replace_with(Wiki other);

 private:
  Sentence derive(std::span<const std::string> tokens, const Grammar& grammar) const;
  void kb_add(const Axiom& a);
  void kb_remove(const Axiom& a);
  bool mentions(const Sentence& s, WordId id) const;

  Lexicon lexicon_;
  std::map<SentenceId, Sentence> sentences_;
  std::vector<Note> notes_;
  KnowledgeBase kb_;
  std::map<std::string, std::size_t> axiom_refs_;  // duplicate sentences share an axiom
  SentenceId next_id_ = 1;
  std::uint64_t revision_ = 0;
};

// Annotation file: one `<sentence-id> <true|false>` pair per line, '#'
// comments allowed. Throws FormatError(line).
Annotations parse_annotations(std::string_view text);

}  // namespace acewiki
