#include "acewiki/wiki.hpp"

#include <algorithm>
#include <charconv>

#include "acewiki/error.hpp"

namespace acewiki {

namespace {

constexpr std::string_view kHeader = "# acewiki wiki file";

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

// Splits "keyword rest" at the first space.
std::pair<std::string_view, std::string_view> head_rest(std::string_view line) {
  auto sp = line.find(' ');
  if (sp == std::string_view::npos) return {line, {}};
  return {line.substr(0, sp), line.substr(sp + 1)};
}

bool is_article(const Token& t) { return t.kind == TokenKind::FunctionWord && (t.surface == "a" || t.surface == "an"); }

}  // namespace

Word Wiki::add_word(WordCategory category, std::string_view surface) {
  Word w = lexicon_.add_word(category, surface);
  ++revision_;
  return w;
}

bool Wiki::mentions(const Sentence& s, WordId id) const {
  return std::any_of(s.tokens.begin(), s.tokens.end(),
                     [&](const Token& t) { return t.kind == TokenKind::LexWord && t.word->id == id; });
}

void Wiki::remove_word(std::string_view surface) {
  auto w = lexicon_.lookup(surface);
  if (!w) throw Error(ErrorCode::UnknownWord, "unknown word '" + std::string(surface) + "'");
  for (const auto& [id, s] : sentences_) {
    if (mentions(s, w->id)) {
      throw Error(ErrorCode::WordInUse, "word '" + w->surface + "' is used by sentence " + std::to_string(id));
    }
  }
  lexicon_.remove_word(w->id);
  std::erase_if(notes_, [&](const Note& n) { return n.word == w->surface; });
  ++revision_;
}

Sentence Wiki::derive(std::span<const std::string> words, const Grammar& grammar) const {
  Sentence s;
  try {
    s.tokens = tokenize(words, lexicon_);
    s.ast = parse(s.tokens, grammar, lexicon_);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseFailed, std::string(to_string(e.code())) + ": " + e.what(), e.position());
  }
  // Store the parser's view of the tokens (variables split into
  // introductions and references).
  s.tokens = verbalize(s.ast);
  s.axiom = classify(ast_to_drs(s.ast));
  s.pattern = pattern_of(s.ast);
  return s;
}

void Wiki::kb_add(const Axiom& a) {
  if (!a.owl_compatible()) return;
  if (axiom_refs_[to_string(a)]++ == 0) kb_.assert_axiom(a);
}

void Wiki::kb_remove(const Axiom& a) {
  if (!a.owl_compatible()) return;
  auto it = axiom_refs_.find(to_string(a));
  if (--it->second == 0) {
    axiom_refs_.erase(it);
    kb_.retract_axiom(a);
  }
}

const Sentence& Wiki::create_sentence(std::span<const std::string> tokens, const Grammar& grammar,
                                      std::optional<std::uint64_t> expected_revision) {
  if (expected_revision && *expected_revision != revision_) {
    throw Error(ErrorCode::StaleRevision, "expected revision " + std::to_string(*expected_revision) +
                                              ", wiki is at " + std::to_string(revision_));
  }
  Sentence s = derive(tokens, grammar);
  s.id = next_id_++;
  kb_add(s.axiom);
  ++revision_;
  return sentences_[s.id] = std::move(s);
}

const Sentence& Wiki::sentence(SentenceId id) const {
  auto it = sentences_.find(id);
  if (it == sentences_.end()) throw Error(ErrorCode::UnknownSentence, "unknown sentence " + std::to_string(id));
  return it->second;
}

const Sentence& Wiki::edit_sentence(SentenceId id, std::uint64_t expected_version, std::span<const std::string> tokens,
                                    const Grammar& grammar) {
  const Sentence& old = sentence(id);
  if (old.version != expected_version) {
    throw Error(ErrorCode::VersionConflict, "sentence " + std::to_string(id) + " is at version " +
                                                std::to_string(old.version));
  }
  Sentence s = derive(tokens, grammar);
  s.id = id;
  s.version = old.version + 1;
  kb_remove(old.axiom);
  kb_add(s.axiom);
  ++revision_;
  return sentences_[id] = std::move(s);
}

void Wiki::delete_sentence(SentenceId id, std::uint64_t expected_version) {
  const Sentence& old = sentence(id);
  if (old.version != expected_version) {
    throw Error(ErrorCode::VersionConflict, "sentence " + std::to_string(id) + " is at version " +
                                                std::to_string(old.version));
  }
  kb_remove(old.axiom);
  sentences_.erase(id);
  ++revision_;
}

void Wiki::add_note(std::string_view word, std::string_view text) {
  if (!lexicon_.lookup(word)) throw Error(ErrorCode::UnknownWord, "unknown word '" + std::string(word) + "'");
  if (text.empty() || text.find('\n') != std::string_view::npos) {
    throw Error(ErrorCode::BadRequest, "a note is one non-empty line of text");
  }
  notes_.push_back({std::string(word), std::string(text)});
  ++revision_;
}

Article Wiki::article(std::string_view surface) const {
  auto w = lexicon_.lookup(surface);
  if (!w) throw Error(ErrorCode::UnknownWord, "unknown word '" + std::string(surface) + "'");
  Article a;
  a.word = *w;
  for (Box b : kAllBoxes) a.boxes[b];
  for (const auto& [id, s] : sentences_) {
    if (!mentions(s, w->id)) continue;
    if (auto box = box_of(s.pattern)) {
      a.boxes[*box].push_back(s);
    } else {
      a.unrestricted.push_back(s);
    }
  }
  for (const auto& n : notes_) {
    if (n.word == w->surface) a.comments.push_back(n.text);
  }
  return a;
}

Prediction Wiki::predict(std::span<const std::string> prefix, const Grammar& grammar) const {
  TokenList tokens = tokenize(prefix, lexicon_);
  Prediction p = acewiki::predict(tokens, grammar, lexicon_);

  // Object position of a role: "... TV", "... TV a", "... OF of", "... OF of a".
  std::size_t n = tokens.size();
  bool after_article = n > 0 && is_article(tokens[n - 1]);
  std::size_t end = after_article ? n - 1 : n;
  std::optional<Word> role;
  if (end >= 1 && tokens[end - 1].kind == TokenKind::LexWord &&
      tokens[end - 1].word->category == WordCategory::TransitiveVerb) {
    role = tokens[end - 1].word;
  } else if (end >= 2 && tokens[end - 1].kind == TokenKind::FunctionWord && tokens[end - 1].surface == "of" &&
             tokens[end - 2].kind == TokenKind::LexWord) {
    role = tokens[end - 2].word;
  }
  if (role) {
    auto& names = p.category_menus[WordCategory::ProperName];
    names = kb_.rank_individuals(role->symbol(), Position::Object, std::move(names));
    auto& nouns = p.category_menus[WordCategory::Noun];
    nouns = kb_.rank_concepts(role->symbol(), Position::Object, std::move(nouns));
  }
  return p;
}

std::string Wiki::export_text() const {
  std::string out(kHeader);
  out += '\n';
  out += lexicon_.to_text();
  for (const auto& [id, s] : sentences_) out += "sentence " + s.text() + "\n";
  for (const auto& n : notes_) out += "note " + n.word + " " + n.text + "\n";
  return out;
}

Wiki Wiki::import_text(std::string_view text) {
  Wiki w;
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(text)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto [kw, rest] = head_rest(line);
    auto format_error = [&](const std::string& why) {
      return Error(ErrorCode::FormatError, why, std::nullopt, line_no);
    };
    if (kw == "word") {
      auto [code, surface] = head_rest(rest);
      auto cat = category_from_code(code);
      if (!cat) throw format_error("unknown word category '" + std::string(code) + "'");
      try {
        w.lexicon_.add_word(*cat, surface);
      } catch (const Error& e) {
        throw format_error(e.what());
      }
    } else if (kw == "sentence") {
      std::vector<std::string> words = split_words(rest);
      try {
        tokenize(words, w.lexicon_);
      } catch (const Error& e) {
        throw Error(ErrorCode::UnknownWordInSentence, e.what(),
                    e.position(), line_no);
      }
      try {
        w.create_sentence(words);
      } catch (const Error& e) {
        throw Error(ErrorCode::FormatError, e.what(), e.position(), line_no);
      }
    } else if (kw == "note") {
      auto [word, note] = head_rest(rest);
      try {
        w.add_note(word, note);
      } catch (const Error& e) {
        throw format_error(e.what());
      }
    } else {
      throw format_error("unknown line type '" + std::string(kw) + "'");
    }
  }
  w.revision_ = 0;
  return w;
}

void Wiki::replace_with(Wiki other) {
  std::uint64_t rev = revision_ + 1;
  *this = std::move(other);
  revision_ = rev;
}

StatsReport Wiki::stats(const Annotations* annotations) const {
  StatsReport r;
  for (SentencePattern p : kAllPatterns) r.pattern_counts[p] = 0;
  for (const auto& [id, s] : sentences_) {
    ++r.sentences;
    ++r.pattern_counts[s.pattern];
    NegImpl ni = contains_neg_or_impl(s.ast);
    if (ni.has_negation || ni.has_implication) ++r.neg_or_impl;
  }
  r.neg_or_impl_fraction = r.sentences ? static_cast<double>(r.neg_or_impl) / static_cast<double>(r.sentences) : 0.0;
  if (annotations) {
    std::size_t plus = 0;
    for (const auto& [id, ok] : *annotations) {
      if (!sentences_.count(id)) {
        throw Error(ErrorCode::AnnotationForUnknownSentence, "annotation for unknown sentence " + std::to_string(id));
      }
      if (ok) ++plus;
    }
    r.s = r.sentences;
    r.s_plus = plus;
    r.s_minus = r.sentences - plus;
    r.ratio = r.sentences ? static_cast<double>(plus) / static_cast<double>(r.sentences) : 0.0;
  }
  return r;
}

Annotations parse_annotations(std::string_view text) {
  Annotations out;
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(text)) {
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;
    SentenceId id = 0;
    const auto& w0 = words[0];
    auto [ptr, ec] = std::from_chars(w0.data(), w0.data() + w0.size(), id);
    bool ok_id = ec == std::errc() && ptr == w0.data() + w0.size();
    if (!ok_id || words.size() != 2 || (words[1] != "true" && words[1] != "false")) {
      throw Error(ErrorCode::FormatError, "expected '<sentence-id> true|false'",
                  std::nullopt, line_no);
    }
    out[id] = words[1] == "true";
  }
  return out;
}

}  // namespace acewiki
