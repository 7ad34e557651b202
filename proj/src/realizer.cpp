// Copyright 2026 The lsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsi/realizer.h"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace lsi {

namespace {

std::string capitalize(std::string s) {
  for (char& c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
  }
  return s;
}

bool is_pronoun_word(const std::string& word) {
  static const std::set<std::string> kPronouns = {"I",   "we", "you", "he",
                                                  "she", "it", "they"};
  return kPronouns.count(word) > 0;
}

// Person and number a tag pronoun agrees with; "they" takes plural
// agreement even when used as singular they.
std::pair<GramPerson, GramNumber> pronoun_features(const std::string& pron) {
  if (pron == "I") return {GramPerson::kFirst, GramNumber::kSingular};
  if (pron == "we") return {GramPerson::kFirst, GramNumber::kPlural};
  if (pron == "you") return {GramPerson::kSecond, GramNumber::kSingular};
  if (pron == "they") return {GramPerson::kThird, GramNumber::kPlural};
  return {GramPerson::kThird, GramNumber::kSingular};
}

std::string be_form(PredTense tense, GramPerson person, GramNumber number) {
  if (tense == PredTense::kPast) {
    bool was = number == GramNumber::kSingular && person != GramPerson::kSecond;
    return was ? "was" : "were";
  }
  if (number == GramNumber::kSingular) {
    if (person == GramPerson::kFirst) return "am";
    if (person == GramPerson::kThird) return "is";
  }
  return "are";
}

std::string do_form(PredTense tense, GramPerson person, GramNumber number) {
  if (tense == PredTense::kPast) return "did";
  bool third_singular =
      person == GramPerson::kThird && number == GramNumber::kSingular;
  return third_singular ? "does" : "do";
}

std::string have_form(GramPerson person, GramNumber number) {
  bool third_singular =
      person == GramPerson::kThird && number == GramNumber::kSingular;
  return third_singular ? "has" : "have";
}

std::string negate_aux(const std::string& aux, bool contractions) {
  if (contractions) {
    static const std::map<std::string, std::string> kContracted = {
        {"would", "wouldn't"}, {"could", "couldn't"}, {"must", "mustn't"},
        {"will", "won't"},     {"can", "can't"},      {"do", "don't"},
        {"does", "doesn't"},   {"did", "didn't"},     {"has", "hasn't"},
        {"have", "haven't"},   {"is", "isn't"},       {"are", "aren't"},
        {"was", "wasn't"},     {"were", "weren't"},
    };
    auto it = kContracted.find(aux);
    if (it != kContracted.end()) return it->second;
    return aux + " not";  // *amn't
  }
  if (aux == "can") return "cannot";
  return aux + " not";
}

const VerbForms& verb_forms(const Lexicon& lexicon, const std::string& lemma) {
  const LexEntry& entry = lexicon.require(lemma);
  if (entry.category != LexCategory::kVerb || !entry.verb) {
    throw Error(ErrorCategory::kLexicon, "'" + lemma + "' is not a verb lexeme");
  }
  return *entry.verb;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& word : words) {
    if (word.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

SubjectInfo subject_info_for(const Term& term, const Perspective& perspective,
                             const Lexicon& lexicon) {
  SubjectInfo info;
  switch (term.kind) {
    case Term::Kind::kAgent:
      if (term.id == perspective.speaker) {
        info = {GramPerson::kFirst, GramNumber::kSingular, "I"};
      } else if (term.id == perspective.hearer) {
        info = {GramPerson::kSecond, GramNumber::kSingular, "you"};
      } else {
        info = {GramPerson::kThird, GramNumber::kSingular, "they"};
      }
      break;
    case Term::Kind::kGroup: {
      bool has_speaker = false;
      bool has_hearer = false;
      for (const std::string& member : term.members) {
        has_speaker |= member == perspective.speaker;
        has_hearer |= member == perspective.hearer;
      }
      if (has_speaker) {
        info = {GramPerson::kFirst, GramNumber::kPlural, "we"};
      } else if (has_hearer) {
        info = {GramPerson::kSecond, GramNumber::kSingular, "you"};
      } else {
        info = {GramPerson::kThird, GramNumber::kPlural, "they"};
      }
      break;
    }
    case Term::Kind::kSomeone:
      info = {GramPerson::kThird, GramNumber::kSingular, "they"};
      break;
    case Term::Kind::kPhrase: {
      GramNumber number = lexicon.require(term.id).number;
      info = {GramPerson::kThird, number,
              number == GramNumber::kPlural ? "they" : "it"};
      break;
    }
    case Term::Kind::kAction:
      info = {GramPerson::kThird, GramNumber::kSingular, "it"};
      break;
  }
  return info;
}

std::string render_np(const Term& term, const Perspective& perspective,
                      PronCase pron_case, const Lexicon& lexicon) {
  std::string base = pronominalize(term, perspective, pron_case, lexicon);
  if (term.prep.empty()) return base;
  return term.prep + " " + base;
}

// Base verb phrase of an action proposition: "bring us two cointreaux".
// The agent role is left out; callers bind it to the matrix subject.
std::string action_vp(const Proposition& action, const Perspective& perspective,
                      const Lexicon& lexicon) {
  const PredicateInfo& info = lexicon.require_predicate(action.predicate());
  std::vector<std::string> words;
  words.push_back(info.verb == "be" ? "be" : verb_forms(lexicon, info.verb).base);
  for (const RoleArg& arg : action.args()) {
    if (arg.role == "agent") continue;
    words.push_back(render_np(arg.term, perspective, PronCase::kObject, lexicon));
  }
  return join(words);
}

}  // namespace

std::string pronominalize(const Term& referent, const Perspective& perspective,
                          PronCase pron_case, const Lexicon& lexicon) {
  switch (referent.kind) {
    case Term::Kind::kSomeone:
      return "someone";
    case Term::Kind::kAgent: {
      if (referent.id == perspective.speaker) {
        return pron_case == PronCase::kSubject ? "I" : "me";
      }
      if (referent.id == perspective.hearer) return "you";
      auto it = perspective.display_names.find(referent.id);
      if (it != perspective.display_names.end()) return it->second;
      throw Error(ErrorCategory::kReference,
                  "cannot resolve referent '" + referent.id + "'");
    }
    case Term::Kind::kGroup: {
      bool has_speaker = false;
      bool has_hearer = false;
      for (const std::string& member : referent.members) {
        has_speaker |= member == perspective.speaker;
        has_hearer |= member == perspective.hearer;
      }
      if (has_speaker) return pron_case == PronCase::kSubject ? "we" : "us";
      if (has_hearer) return "you";
      std::string names;
      for (const std::string& member : referent.members) {
        auto it = perspective.display_names.find(member);
        if (it == perspective.display_names.end()) {
          throw Error(ErrorCategory::kReference,
                      "cannot resolve group member '" + member + "'");
        }
        if (!names.empty()) names += " and ";
        names += it->second;
      }
      if (names.empty()) {
        throw Error(ErrorCategory::kReference, "empty group '" + referent.id + "'");
      }
      return names;
    }
    case Term::Kind::kPhrase: {
      const LexEntry& entry = lexicon.require(referent.id);
      return entry.surface.empty() ? referent.id : entry.surface;
    }
    case Term::Kind::kAction:
      throw Error(ErrorCategory::kConstraint,
                  "an action cannot be rendered as a noun phrase");
  }
  throw Error(ErrorCategory::kReference, "unresolvable referent");
}

Clause build_clause(const SemanticSpec& spec, const Lexicon& lexicon) {
  const Proposition& p = spec.content;
  const Perspective& perspective = spec.perspective;
  if (p.args().empty()) {
    throw Error(ErrorCategory::kConstraint,
                "proposition " + p.predicate() + " has no arguments");
  }
  const Term& subject_term = p.args().front().term;

  Clause clause;
  clause.subject_info = subject_info_for(subject_term, perspective, lexicon);
  if (spec.form != SyntacticForm::kImperative) {
    clause.subject =
        pronominalize(subject_term, perspective, PronCase::kSubject, lexicon);
  }
  clause.negated = !p.positive();
  clause.perfect = spec.perfect;
  clause.modal = spec.modal;

  for (const Decoration& d : spec.decorations) {
    if (d.kind == DecorationKind::kHedge && d.verbal) clause.verbal_hedge = d.text;
  }

  std::string lemma;

  if (p.predicate() == "cando") {
    // Ability over a nested action: modal + the action's verb phrase.
    const Term* action = p.find("action");
    if (action == nullptr || !action->action) {
      throw Error(ErrorCategory::kConstraint, "cando needs a nested action");
    }
    if (clause.modal.empty()) clause.modal = "can";
    const Proposition& inner = *action->action;
    lemma = lexicon.require_predicate(inner.predicate()).verb;
    for (const RoleArg& arg : inner.args()) {
      if (arg.role == "agent") continue;
      clause.complements.push_back(
          render_np(arg.term, perspective, PronCase::kObject, lexicon));
    }
  } else if (p.predicate() == "want") {
    // Desire: the positive conditional surfaces as "would like", the negated
    // one as "would not want".
    lemma = clause.modal == "would" && p.positive() ? "like" : "want";
    if (p.args().size() > 1) {
      const Term& object = p.args()[1].term;
      if (object.kind == Term::Kind::kAction && object.action) {
        const Proposition& inner = *object.action;
        std::string vp = action_vp(inner, perspective, lexicon);
        const Term* inner_agent = inner.find("agent");
        if (inner_agent != nullptr && !(*inner_agent == subject_term)) {
          clause.complements.push_back(
              pronominalize(*inner_agent, perspective, PronCase::kObject,
                            lexicon) +
              " to " + vp);
        } else {
          clause.complements.push_back("to " + vp);
        }
      } else {
        clause.complements.push_back(
            render_np(object, perspective, PronCase::kObject, lexicon));
      }
    }
  } else if (p.predicate() == "know") {
    const Term* content = p.find("content");
    if (content == nullptr || !content->action) {
      throw Error(ErrorCategory::kConstraint, "know needs nested content");
    }
    lemma = "know";
    SemanticSpec embedded(*content->action);
    embedded.perspective = perspective;
    clause.complements.push_back(
        "that " + clause_text(build_clause(embedded, lexicon)));
  } else {
    const PredicateInfo& info = lexicon.require_predicate(p.predicate());
    lemma = info.verb;
    clause.copula = info.verb == "be";
    clause.tense = spec.tense.value_or(info.tense);
    for (std::size_t i = 1; i < p.args().size(); ++i) {
      clause.complements.push_back(
          render_np(p.args()[i].term, perspective, PronCase::kObject, lexicon));
    }
  }

  if (!clause.copula) {
    const VerbForms& forms = verb_forms(lexicon, lemma);
    clause.verb_rest = clause.perfect ? forms.past_participle : forms.base;
    if (clause.tense == PredTense::kPast) {
      clause.verb_finite = forms.past;
    } else {
      bool third_singular =
          clause.subject_info.person == GramPerson::kThird &&
          clause.subject_info.number == GramNumber::kSingular;
      clause.verb_finite = third_singular ? forms.third : forms.base;
    }
  }
  return clause;
}

namespace {

struct FiniteChain {
  std::string aux;   // finite auxiliary, negation folded in; may be empty
  std::string rest;  // remaining verb material; may be empty for a copula
};

FiniteChain finite_chain(const Clause& clause, const RenderOptions& options) {
  const GramPerson person = clause.subject_info.person;
  const GramNumber number = clause.subject_info.number;
  FiniteChain chain;
  if (!clause.modal.empty()) {
    chain.aux = clause.negated ? negate_aux(clause.modal, options.contractions)
                               : clause.modal;
    chain.rest = clause.copula ? "be" : clause.verb_rest;
  } else if (clause.perfect) {
    std::string have = have_form(person, number);
    chain.aux = clause.negated ? negate_aux(have, options.contractions) : have;
    chain.rest = clause.verb_rest;
  } else if (clause.copula) {
    std::string be = be_form(clause.tense, person, number);
    chain.aux = clause.negated ? negate_aux(be, options.contractions) : be;
  } else if (clause.negated) {
    chain.aux =
        negate_aux(do_form(clause.tense, person, number), options.contractions);
    chain.rest = clause.verb_rest;
  } else {
    chain.rest = clause.verb_finite;
  }
  return chain;
}

std::string tag_body(const Clause& clause, const RenderOptions& options) {
  const std::string& pron = clause.subject_info.tag_pronoun;
  auto [person, number] = pronoun_features(pron);
  std::string aux;
  if (!clause.modal.empty()) {
    aux = clause.modal;
  } else if (clause.perfect) {
    aux = have_form(person, number);
  } else if (clause.copula) {
    aux = be_form(clause.tense, person, number);
  } else {
    aux = do_form(clause.tense, person, number);
  }
  bool negative_tag = !clause.negated;  // reversed polarity
  if (!negative_tag) return aux + " " + pron;
  if (options.contractions) return negate_aux(aux, true) + " " + pron;
  return aux + " " + pron + " not";
}

std::string question_words(const Clause& clause, const RenderOptions& options) {
  FiniteChain chain = finite_chain(clause, options);
  if (chain.aux.empty()) {
    // Do-support for plain verbs.
    chain.aux = do_form(clause.tense, clause.subject_info.person,
                        clause.subject_info.number);
    chain.rest = clause.verb_rest;
  }
  std::vector<std::string> words;
  words.push_back(chain.aux);
  words.push_back(clause.subject);
  if (!clause.verbal_hedge.empty()) words.push_back(clause.verbal_hedge);
  words.push_back(chain.rest);
  for (const std::string& complement : clause.complements) {
    words.push_back(complement);
  }
  return join(words);
}

}  // namespace

std::string clause_text(const Clause& clause, const RenderOptions& options) {
  std::vector<std::string> words;
  if (clause.subject.empty()) {
    // Imperative.
    if (clause.negated) words.push_back(options.contractions ? "don't" : "do not");
    if (!clause.verbal_hedge.empty()) words.push_back(clause.verbal_hedge);
    words.push_back(clause.copula ? "be" : clause.verb_rest);
  } else {
    FiniteChain chain = finite_chain(clause, options);
    std::string subject = clause.subject;
    // "You'd like", "We'd like": the positive conditional contracts onto a
    // pronoun subject.
    if (options.contractions && clause.modal == "would" && !clause.negated &&
        is_pronoun_word(subject)) {
      subject += "'d";
      chain.aux.clear();
    }
    words.push_back(subject);
    words.push_back(chain.aux);
    if (!clause.verbal_hedge.empty()) words.push_back(clause.verbal_hedge);
    words.push_back(chain.rest);
  }
  for (const std::string& complement : clause.complements) {
    words.push_back(complement);
  }
  return join(words);
}

std::string invert_question(const Clause& clause, const RenderOptions& options) {
  return capitalize(question_words(clause, options)) + "?";
}

std::string tag_question(const Clause& clause, const RenderOptions& options) {
  return ", " + tag_body(clause, options) + "?";
}

std::string render(const SemanticSpec& spec, const Lexicon& lexicon,
                   const RenderOptions& options) {
  if (spec.has_decoration(DecorationKind::kTagQuestion) &&
      spec.form != SyntacticForm::kDeclarative) {
    throw Error(ErrorCategory::kConstraint,
                "tag questions attach to declaratives only");
  }
  if (spec.has_decoration(DecorationKind::kObligation) &&
      spec.form == SyntacticForm::kImperative) {
    throw Error(ErrorCategory::kConstraint,
                "obligation forces a declarative clause");
  }

  if (spec.form == SyntacticForm::kFragment) {
    std::string text = spec.fragment_text.empty() ? "Okay." : spec.fragment_text;
    if (!options.contractions) {
      static const std::vector<std::pair<std::string, std::string>> kExpansions =
          {{"I'd", "I would"},
           {"I'm", "I am"},
           {"It's", "It is"},
           {"can't", "cannot"}};
      for (const auto& [from, to] : kExpansions) {
        std::size_t at = 0;
        while ((at = text.find(from, at)) != std::string::npos) {
          text.replace(at, from.size(), to);
          at += to.size();
        }
      }
    }
    return text;
  }

  std::string core;
  bool question = false;
  std::optional<Clause> clause;

  if (spec.let_form) {
    const Term* owner = spec.content.find("owner");
    const Term* theme = spec.content.find("theme");
    if (owner == nullptr || theme == nullptr) {
      throw Error(ErrorCategory::kConstraint,
                  "let-form needs an owner and a theme");
    }
    core = "let " +
           pronominalize(*owner, spec.perspective, PronCase::kObject, lexicon) +
           " have " +
           render_np(*theme, spec.perspective, PronCase::kObject, lexicon);
  } else {
    clause = build_clause(spec, lexicon);
    if (spec.form == SyntacticForm::kYesNoQuestion) {
      core = question_words(*clause, options);
      question = true;
    } else {
      core = clause_text(*clause, options);
    }
  }

  // Decorations in fixed order.
  std::string prefix;
  for (const Decoration& d : spec.decorations) {
    if (d.kind == DecorationKind::kAddressForm) prefix += d.text + " ";
  }
  for (const Decoration& d : spec.decorations) {
    if (d.kind == DecorationKind::kHedge && !d.verbal) prefix += d.text + " ";
  }
  std::string text = prefix + core;
  for (const Decoration& d : spec.decorations) {
    if (d.kind == DecorationKind::kTemporalMarker) text += " " + d.text;
  }
  for (const Decoration& d : spec.decorations) {
    if (d.kind == DecorationKind::kUrgency) text += ", " + d.text;
  }
  if (spec.has_decoration(DecorationKind::kTagQuestion)) {
    text += ", " + tag_body(*clause, options);
    question = true;
  }
  for (const Decoration& d : spec.decorations) {
    if (d.kind == DecorationKind::kPolitenessMarker) text += ", " + d.text;
  }

  text = capitalize(std::move(text));
  text += question ? "?" : ".";
  return text;
}

}  // namespace lsi
