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

#ifndef LSI_REALIZER_H_
#define LSI_REALIZER_H_

#include <string>
#include <vector>

#include "lsi/lexicon.h"
#include "lsi/speech_act.h"
#include "lsi/strategy.h"

namespace lsi {

struct RenderOptions {
  bool contractions = true;  // "You'd", "don't"; off for debugging
};

enum class GramPerson { kFirst, kSecond, kThird };

struct SubjectInfo {
  GramPerson person = GramPerson::kThird;
  GramNumber number = GramNumber::kSingular;
  std::string tag_pronoun = "it";
};

// Flat clause skeleton with morphology already resolved, so the string
// operations below are pure. A yes/no question needs an auxiliary
// (do-support fills one in); an imperative has no subject.
struct Clause {
  std::string subject;  // rendered; empty for an imperative
  SubjectInfo subject_info;
  std::string modal;    // "", "must", "will", "can", "could", "would"
  PredTense tense = PredTense::kPresent;
  bool perfect = false;
  bool negated = false;
  bool copula = false;  // main verb is "be"; carries its own inflection

  // Non-finite verb material used after an auxiliary: the base form, or the
  // past participle under perfect aspect. Empty for a bare copula.
  std::string verb_rest;
  // Inflected finite verb for the simple positive case ("brings", "reserved").
  std::string verb_finite;

  std::vector<std::string> complements;  // rendered, in order
  std::string verbal_hedge;  // adverb hedge inserted into the verb phrase
};

enum class PronCase { kSubject, kObject };

// Maps a referent onto its surface form from the given viewpoint: the
// speaker's party becomes we/us, the speaker I/me, the hearer you, the
// existential placeholder someone, anyone else their proper name.
std::string pronominalize(const Term& referent, const Perspective& perspective,
                          PronCase pron_case, const Lexicon& lexicon);

// Builds the clause skeleton for a semantic spec's content proposition.
Clause build_clause(const SemanticSpec& spec, const Lexicon& lexicon);

// Subject-verb-complements string, no terminal punctuation.
std::string clause_text(const Clause& clause, const RenderOptions& options = {});

// Auxiliary-fronted question, capitalized and terminated with "?".
std::string invert_question(const Clause& clause, const RenderOptions& options = {});

// Reversed-polarity tag (", wouldn't you?"), including the comma and mark.
std::string tag_question(const Clause& clause, const RenderOptions& options = {});

// One capitalized, punctuated sentence for the spec. Decorations apply in
// fixed order: address form, hedge, clause, temporal marker, urgency, tag,
// politeness marker.
std::string render(const SemanticSpec& spec, const Lexicon& lexicon,
                   const RenderOptions& options = {});

}  // namespace lsi

#endif  // LSI_REALIZER_H_
