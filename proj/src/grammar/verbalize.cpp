#include <algorithm>

#include "acewiki/grammar.hpp"

namespace acewiki {

namespace {

class Verbalizer {
 public:
  TokenList run(const SentenceAst& ast) {
    std::visit([this](const auto& s) { sentence(s); }, ast);
    out_.push_back(Token::period());
    return std::move(out_);
  }

 private:
  void fw(std::string_view w) { out_.push_back(Token::function(w)); }
  void lex(const Word& w) { out_.push_back(Token::lex(w)); }
  void intro(const std::optional<Var>& v) {
    if (v) out_.push_back(Token::variable(*v));
  }
  void ref(Var v) { out_.push_back(Token::variable(v, true)); }
  void article(const Word& w) {
    fw(takes_an(w.surface) ? "an" : "a");
    lex(w);
  }

  void sentence(const SimpleSentence& s) { simple(s); }
  void sentence(const NegatedSentence& s) {
    for (auto w : {"it", "is", "false", "that"}) fw(w);
    simple(s.inner);
  }
  void sentence(const Conditional& c) {
    fw("if");
    for (std::size_t i = 0; i < c.if_clauses.size(); ++i) {
      if (i > 0) fw("and");
      clause(c.if_clauses[i]);
    }
    fw("then");
    clause(c.then_clause);
  }

  void clause(const Clause& c) {
    switch (c.subject.kind) {
      case ClauseSubject::Kind::Something:
        fw("something");
        intro(c.subject.var);
        break;
      case ClauseSubject::Kind::Indefinite:
        article(*c.subject.noun);
        intro(c.subject.var);
        break;
      case ClauseSubject::Kind::VarRef: ref(*c.subject.var); break;
    }
    preds(c.predicates);
  }

  void simple(const SimpleSentence& s) {
    const SubjectNp& subj = s.subject;
    switch (subj.kind) {
      case SubjectNp::Kind::ProperName: lex(*subj.word); break;
      case SubjectNp::Kind::Every:
      case SubjectNp::Kind::No:
        fw(subj.kind == SubjectNp::Kind::Every ? "every" : "no");
        lex(*subj.word);
        break;
      case SubjectNp::Kind::Indefinite: article(*subj.word); break;
      case SubjectNp::Kind::Something:
        fw("something");
        intro(subj.var);
        break;
      case SubjectNp::Kind::Everything: fw("everything"); break;
    }
    if (subj.rel) {
      fw(subj.rel->marker == RelClause::Marker::Who ? "who" : "that");
      lex(subj.rel->verb);
      object(subj.rel->object);
    }
    preds(s.predicates);
  }

  void preds(const PredicateList& list) {
    for (std::size_t i = 0; i < list.preds.size(); ++i) {
      if (i > 0) fw(list.connectives[i - 1] == Connective::And ? "and" : "or");
      pred(list.preds[i]);
    }
  }

  void pred(const Predicate& p) {
    switch (p.kind) {
      case Predicate::Kind::IsA:
        fw("is");
        article(p.head);
        break;
      case Predicate::Kind::IsNotA:
        fw("is");
        fw("not");
        article(p.head);
        break;
      case Predicate::Kind::IsRoleOf:
      case Predicate::Kind::IsNotRoleOf:
        fw("is");
        if (p.kind == Predicate::Kind::IsNotRoleOf) fw("not");
        article(p.head);
        fw("of");
        object(*p.object);
        break;
      case Predicate::Kind::Verb:
        lex(p.head);
        object(*p.object);
        break;
      case Predicate::Kind::DoesNotVerb:
        fw("does");
        fw("not");
        lex(p.head);
        object(*p.object);
        break;
    }
  }

  void object(const ObjectNp& o) {
    switch (o.kind) {
      case ObjectNp::Kind::ProperName: lex(*o.word); break;
      case ObjectNp::Kind::Indefinite:
        article(*o.word);
        intro(o.var);
        break;
      case ObjectNp::Kind::Something:
        fw("something");
        intro(o.var);
        break;
      case ObjectNp::Kind::Everything: fw("everything"); break;
      case ObjectNp::Kind::VarRef: ref(*o.var); break;
    }
  }

  TokenList out_;
};

}  // namespace

TokenList verbalize(const SentenceAst& ast) { return Verbalizer().run(ast); }

std::vector<Word> mentioned_words(const SentenceAst& ast) {
  std::vector<Word> out;
  for (const Token& t : verbalize(ast)) {
    if (t.kind != TokenKind::LexWord) continue;
    if (std::find(out.begin(), out.end(), *t.word) == out.end()) out.push_back(*t.word);
  }
  return out;
}

}  // namespace acewiki
