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

#ifndef LSI_LEXICON_H_
#define LSI_LEXICON_H_

#include <map>
#include <optional>
#include <string>

#include "lsi/error.h"

namespace lsi {

enum class LexCategory {
  kVerb,
  kNounPhrase,
  kProperNoun,
  kPronoun,
  kModifier,
  kFunction,
};

const char* to_string(LexCategory category);
std::optional<LexCategory> lex_category_from_string(const std::string& s);

enum class GramNumber { kSingular, kPlural };

struct VerbForms {
  std::string base;
  std::string third;            // third person singular present
  std::string past;
  std::string past_participle;
  std::string progressive;
};

struct LexEntry {
  std::string id;
  LexCategory category = LexCategory::kNounPhrase;
  std::string surface;          // rendered form for non-verb entries
  GramNumber number = GramNumber::kSingular;
  std::optional<VerbForms> verb;  // all five forms, verbs only
};

// Default tense a predicate surfaces with ("reserved" is inherently past).
enum class PredTense { kPresent, kPast };

struct PredicateInfo {
  std::string verb;  // lexeme id of the verb realizing the predicate
  PredTense tense = PredTense::kPresent;
};

// Lexical inventory driving both realization and prosodic annotation.
// Besides the id-keyed entries it maintains a surface-word index so the
// annotator can tag individual words of the rendered text.
class Lexicon {
 public:
  struct WordInfo {
    std::string pos;    // category string, e.g. "verb"
    std::string lemma;  // decay key: verb base or entry id
  };

  void add(LexEntry entry);  // throws Error(kLexicon) on bad verb arity
  void set_predicate(const std::string& name, PredicateInfo info);
  void set_accent(const std::string& pos, double likelihood);

  const LexEntry* find(const std::string& id) const;
  const LexEntry& require(const std::string& id) const;  // Error(kLexicon)
  const PredicateInfo* predicate(const std::string& name) const;
  const PredicateInfo& require_predicate(const std::string& name) const;

  // Lowercased single word -> tagging info; null when unknown.
  const WordInfo* lookup_word(const std::string& word) const;

  // Accent likelihood for a POS string; 0.5 for unknown categories.
  double accent_for(const std::string& pos) const;

  const std::map<std::string, LexEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, LexEntry> entries_;
  std::map<std::string, PredicateInfo> predicates_;
  std::map<std::string, WordInfo> word_index_;          // explicit single words
  std::map<std::string, WordInfo> derived_word_index_;  // words of multiword surfaces
  std::map<std::string, double> accent_;
};

}  // namespace lsi

#endif  // LSI_LEXICON_H_
