#include <algorithm>
#include <sstream>

#include "acewiki/error.hpp"
#include "acewiki/grammar.hpp"
#include "grammar/engine.hpp"

namespace acewiki {

using engine::Cls;
using engine::Config;
using engine::Lit;
using engine::Step;

Grammar restrict(const Grammar& grammar, const PatternSet& patterns) {
  if (patterns.empty()) throw Error(ErrorCode::EmptyPatternSet, "pattern set is empty");
  PatternSet active = patterns;
  if (grammar.patterns_) {
    PatternSet both;
    for (auto p : patterns) {
      if (grammar.patterns_->count(p)) both.insert(p);
    }
    if (both.empty()) throw Error(ErrorCode::EmptyPatternSet, "restriction leaves no pattern");
    active = std::move(both);
  }
  Grammar out;
  if (active.size() < std::size(kAllPatterns)) out.patterns_ = std::move(active);
  return out;
}

std::string Grammar::describe() {
  std::ostringstream out;
  engine::Nt last = engine::Nt::Count;
  for (const auto& p : engine::productions()) {
    std::string lhs = engine::symbol_text({engine::Symbol::Kind::Nt, static_cast<std::uint8_t>(p.lhs)});
    out << (p.lhs == last ? std::string(lhs.size(), ' ') + " | " : lhs + " := ");
    last = p.lhs;
    bool any = false;
    for (const auto& s : p.rhs) {
      std::string text = engine::symbol_text(s);
      if (text.empty()) continue;
      out << (any ? " " : "") << text;
      any = true;
    }
    if (!any) out << "(empty)";
    out << '\n';
  }
  return out.str();
}

const std::vector<std::string>& composite_phrases() {
  static const std::vector<std::string> kPhrases = {"it is false that", "is a", "is an", "is not a", "is not an",
                                                    "does not"};
  return kPhrases;
}

bool Prediction::empty() const {
  bool words = std::all_of(category_menus.begin(), category_menus.end(),
                           [](const auto& kv) { return kv.second.empty(); });
  return words && function_menu.empty() && var_ref_menu.empty() && var_intro_menu.empty() && !can_finish;
}

namespace {

// Words that never stand alone in a menu because a composite phrase always
// follows them.
bool phrase_head_only(Lit lit) { return lit == Lit::It || lit == Lit::Is || lit == Lit::Does; }

// Function words of each composite phrase, in composite_phrases() order.
const std::vector<std::vector<Lit>>& phrase_lits() {
  static const auto table = [] {
    std::vector<std::vector<Lit>> out;
    for (const auto& p : composite_phrases()) {
      out.emplace_back();
      std::istringstream in(p);
      std::string w;
      while (in >> w) out.back().push_back(*engine::lit_from_text(w));
    }
    return out;
  }();
  return table;
}

}  // namespace

Prediction predict(std::span<const Token> prefix, const Grammar& grammar, const Lexicon& lexicon) {
  engine::Options options{engine::available_classes(lexicon), false, grammar.restricted()};
  engine::Viability viability(options, grammar.patterns());

  auto configs = engine::initial(options);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const Token& t = prefix[i];
    if (t.kind == TokenKind::LexWord) {
      auto live = lexicon.lookup(t.surface);
      if (!live || live->category != t.word->category) {
        throw Error(ErrorCode::LexicalError, "word '" + t.surface + "' is not in the lexicon", i);
      }
    } else if (t.kind == TokenKind::FunctionWord && !engine::lit_from_text(t.surface)) {
      throw Error(ErrorCode::LexicalError, "'" + t.surface + "' is not a function word", i);
    }
    configs = engine::advance(configs, Step::from_token(t), options);
    if (configs.empty()) throw Error(ErrorCode::DeadPrefix, "no sentence starts like this", i);
  }
  if (!viability.viable(configs)) {
    throw Error(ErrorCode::DeadPrefix, "no sentence of the allowed patterns starts like this",
                prefix.empty() ? 0 : prefix.size() - 1);
  }

  Prediction out;
  for (WordCategory c : kAllCategories) out.category_menus[c];

  std::vector<bool> class_ok(static_cast<std::size_t>(Cls::Count), false);
  std::vector<Lit> lits;
  for (const Step& s : engine::next_steps(configs, options)) {
    auto next = engine::advance(configs, s, options);
    if (s.kind == Step::Kind::Lit && s.id == static_cast<std::uint8_t>(Lit::Period)) {
      out.can_finish = viability.accepting(next);
      continue;
    }
    if (!viability.viable(next)) continue;
    switch (s.kind) {
      case Step::Kind::Lit: lits.push_back(static_cast<Lit>(s.id)); break;
      case Step::Kind::Cls: class_ok[s.id] = true; break;
      case Step::Kind::Var: {
        Var v = static_cast<Var>(s.id);
        // A variable token introduces a name or refers to one, depending on
        // what the configurations expect.
        for (const Config& c : configs) {
          if (c.stack.empty() || !engine::matches(c, s)) continue;
          auto kind = c.stack.back().kind;
          auto& menu = kind == engine::Symbol::Kind::VarRef ? out.var_ref_menu : out.var_intro_menu;
          // Restricted grammars need a per-kind viability check.
          if (grammar.restricted() && !viability.viable(engine::advance({c}, s, options))) continue;
          if (std::find(menu.begin(), menu.end(), v) == menu.end()) menu.push_back(v);
        }
        break;
      }
    }
  }
  std::sort(out.var_ref_menu.begin(), out.var_ref_menu.end());
  std::sort(out.var_intro_menu.begin(), out.var_intro_menu.end());
  out.var_intro_allowed = !out.var_intro_menu.empty();

  for (const Word& w : lexicon.words()) {
    if (class_ok[static_cast<std::size_t>(engine::class_of(w))]) out.category_menus[w.category].push_back(w);
  }
  for (auto& [cat, menu] : out.category_menus) {
    std::sort(menu.begin(), menu.end(),
              [](const Word& a, const Word& b) { return alphabetical_less(a.surface, b.surface); });
  }

  // Function menu: composite phrases first where they apply, then single
  // words, each group in the fixed function-word order.
  std::sort(lits.begin(), lits.end());
  std::vector<std::size_t> phrases;  // indices into composite_phrases()
  for (std::size_t pi = 0; pi < composite_phrases().size(); ++pi) {
    const auto& words = phrase_lits()[pi];
    if (std::find(lits.begin(), lits.end(), words.front()) == lits.end()) continue;
    auto walk = configs;
    bool ok = true;
    for (Lit l : words) {
      walk = engine::advance(walk, {Step::Kind::Lit, static_cast<std::uint8_t>(l)}, options);
      if (walk.empty() || !viability.viable(walk)) {
        ok = false;
        break;
      }
    }
    if (ok) phrases.push_back(pi);
  }
  for (Lit l : lits) {
    bool covered = phrase_head_only(l) &&
                   std::any_of(phrases.begin(), phrases.end(), [&](std::size_t p) {
                     return phrase_lits()[p].front() == l;
                   });
    if (!covered) out.function_menu.emplace_back(engine::lit_text(l));
  }
  // Phrases go in front of the single words, in menu order of their head.
  std::vector<std::string> merged;
  for (Lit l = Lit::It; l != Lit::Count; l = static_cast<Lit>(static_cast<int>(l) + 1)) {
    for (std::size_t p : phrases) {
      if (phrase_lits()[p].front() == l) merged.push_back(composite_phrases()[p]);
    }
    auto single = std::find(out.function_menu.begin(), out.function_menu.end(), engine::lit_text(l));
    if (single != out.function_menu.end()) merged.push_back(*single);
  }
  out.function_menu = std::move(merged);
  return out;
}

}  // namespace acewiki
