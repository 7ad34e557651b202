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

#include "lsi/lexicon.h"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace lsi {

const char* to_string(LexCategory category) {
  switch (category) {
    case LexCategory::kVerb: return "verb";
    case LexCategory::kNounPhrase: return "noun-phrase";
    case LexCategory::kProperNoun: return "proper-noun";
    case LexCategory::kPronoun: return "pronoun";
    case LexCategory::kModifier: return "modifier";
    case LexCategory::kFunction: return "function";
  }
  return "unknown";
}

std::optional<LexCategory> lex_category_from_string(const std::string& s) {
  for (LexCategory c : {LexCategory::kVerb, LexCategory::kNounPhrase,
                        LexCategory::kProperNoun, LexCategory::kPronoun,
                        LexCategory::kModifier, LexCategory::kFunction}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::istringstream in(s);
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

}  // namespace

void Lexicon::add(LexEntry entry) {
  if (entry.id.empty()) {
    throw Error(ErrorCategory::kLexicon, "lexicon entry with empty id");
  }
  if (entry.category == LexCategory::kVerb) {
    if (!entry.verb || entry.verb->base.empty() || entry.verb->third.empty() ||
        entry.verb->past.empty() || entry.verb->past_participle.empty() ||
        entry.verb->progressive.empty()) {
      throw Error(ErrorCategory::kLexicon,
                  "verb '" + entry.id + "' must define all five forms");
    }
    for (const std::string& form :
         {entry.verb->base, entry.verb->third, entry.verb->past,
          entry.verb->past_participle, entry.verb->progressive}) {
      word_index_[lower(form)] = WordInfo{"verb", entry.verb->base};
    }
  } else {
    const std::string& surface = entry.surface.empty() ? entry.id : entry.surface;
    std::vector<std::string> words = split_words(surface);
    if (words.size() == 1) {
      word_index_[lower(words.front())] =
          WordInfo{to_string(entry.category), lower(entry.id)};
    } else {
      // Words of a multiword surface are indexed at lower precedence so a
      // dedicated word entry (e.g. a determiner) can override them.
      for (const std::string& word : words) {
        derived_word_index_.emplace(lower(word),
                                    WordInfo{to_string(entry.category), lower(word)});
      }
    }
  }
  entries_[entry.id] = std::move(entry);
}

void Lexicon::set_predicate(const std::string& name, PredicateInfo info) {
  predicates_[name] = std::move(info);
}

void Lexicon::set_accent(const std::string& pos, double likelihood) {
  if (likelihood < 0.0 || likelihood > 1.0) {
    throw Error(ErrorCategory::kRange,
                "accent likelihood for '" + pos + "' outside [0,1]");
  }
  accent_[pos] = likelihood;
}

const LexEntry* Lexicon::find(const std::string& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry& Lexicon::require(const std::string& id) const {
  const LexEntry* entry = find(id);
  if (entry == nullptr) {
    throw Error(ErrorCategory::kLexicon, "missing lexeme '" + id + "'");
  }
  return *entry;
}

const PredicateInfo* Lexicon::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

const PredicateInfo& Lexicon::require_predicate(const std::string& name) const {
  const PredicateInfo* info = predicate(name);
  if (info == nullptr) {
    throw Error(ErrorCategory::kLexicon, "no verb mapping for predicate '" + name + "'");
  }
  return *info;
}

const Lexicon::WordInfo* Lexicon::lookup_word(const std::string& word) const {
  auto it = word_index_.find(lower(word));
  if (it != word_index_.end()) return &it->second;
  it = derived_word_index_.find(lower(word));
  if (it != derived_word_index_.end()) return &it->second;
  return nullptr;
}

double Lexicon::accent_for(const std::string& pos) const {
  auto it = accent_.find(pos);
  if (it != accent_.end()) return it->second;
  // Shipped content/function heuristic; a lexicon may override per category.
  if (pos == "verb") return 0.8;
  if (pos == "noun-phrase") return 0.9;
  if (pos == "proper-noun") return 0.9;
  if (pos == "pronoun") return 0.2;
  if (pos == "modifier") return 0.7;
  if (pos == "function") return 0.2;
  return 0.5;
}

}  // namespace lsi
