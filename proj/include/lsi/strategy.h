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

#ifndef LSI_STRATEGY_H_
#define LSI_STRATEGY_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsi/lexicon.h"
#include "lsi/rng.h"
#include "lsi/social.h"
#include "lsi/speech_act.h"

namespace lsi {

enum class SyntacticForm { kImperative, kDeclarative, kYesNoQuestion, kFragment };

const char* to_string(SyntacticForm form);

enum class DecorationKind {
  kTagQuestion,
  kHedge,
  kAddressForm,
  kUrgency,
  kObligation,
  kPolitenessMarker,
  kTemporalMarker,
  kGladnessFormula,
  kReluctanceFormula,
  kApologyFormula,
};

struct Decoration {
  DecorationKind kind = DecorationKind::kTagQuestion;
  std::string text;
  bool verbal = false;  // hedges only: verb-phrase hedge vs pre-sentential
};

// Which plan field the selected content came from.
enum class ContentSource {
  kActDecomposition,
  kWantPrecondition,
  kCandoPrecondition,
  kWantEffect,
  kDomainPrecondition,
  kDomainDecomposition,
  kDomainEffect,
};

const char* to_string(ContentSource source);

// The realization plan for one utterance: a content proposition, a syntactic
// form, clause-level verb directives and the decorations to wrap around it.
struct SemanticSpec {
  explicit SemanticSpec(Proposition content_prop) : content(std::move(content_prop)) {}

  Proposition content;
  SyntacticForm form = SyntacticForm::kDeclarative;
  std::vector<Decoration> decorations;
  Perspective perspective;
  ContentSource source = ContentSource::kActDecomposition;

  std::string modal;        // "", "must", "will", "can", "could", "would"
  bool perfect = false;     // present-perfect aspect
  std::optional<PredTense> tense;  // overrides the predicate default
  bool let_form = false;    // render as "Let <pronoun> have <theme>"
  std::string fragment_text;  // fragments: the full canned surface

  bool has_decoration(DecorationKind kind) const;
};

// The named realization strategies, each registered with exactly one band.
enum class StrategyId {
  kRealizeDirect,
  kPowerDirectUrgency,
  kPowerDirectObligation,
  kOptimismApproval,
  kGroupApproval,
  kGladAcceptApproval,
  kSorryRejectApproval,
  kNegateEffectAutonomy,
  kQueryAbilityAutonomy,
  kAssertWantPreconditionAutonomy,
  kImpersonalizeActorAutonomy,
  kHedgeInform,
  kAssertNegationDomainEffect,
  kAssertDomainPreconditionHolds,
  kAbstractAgentAndNegateEffect,
  kReluctantDirectAccept,
};

inline constexpr int kStrategyCount = 16;

struct StrategyInfo {
  StrategyId id;
  const char* name;
  StrategyBand band;
  // Band-position window the strategy is eligible in; entries with higher
  // priority displace lower-priority ones when their window matches.
  double window_lo;
  double window_hi;
  int priority;
  const char* summary;
};

// All strategies in band order; within a band the order runs from the lower
// end of the threat scale to the upper end.
const std::vector<StrategyInfo>& strategy_registry();
const StrategyInfo& strategy_info(StrategyId id);
const char* to_string(StrategyId id);

// Act types the strategy is declared for (ignores structural requirements).
bool strategy_covers(StrategyId id, SpeechActType type);

// Declared for the act type and structurally satisfiable on this instance.
bool strategy_applies(StrategyId id, const SpeechActInstance& act);

// Ordered candidates for an act in a band, lower-end strategies first.
// Never empty: a band without strategies of its own falls back (off-record
// to autonomy first, then any band to the direct set).
std::vector<StrategyId> applicable_strategies(const SpeechActInstance& act,
                                              StrategyBand band);

// What selection actually draws from: `primary` after position-window and
// priority filtering, plus the autonomy substitutes when the off-record
// band has both available.
struct CandidateSets {
  std::vector<StrategyId> primary;
  std::vector<StrategyId> substitutes;
};

CandidateSets selection_candidates(const SpeechActInstance& act, StrategyBand band,
                                   double position);

// Picks a candidate with weights favouring the list position closest to the
// requested band position. A single candidate is returned without drawing.
StrategyId choose_strategy(std::span<const StrategyId> candidates, double position,
                           Rng& rng);

struct StrategyContext {
  Perspective perspective;
  double threat_fraction = 0.0;     // theta / 150
  std::string address_form = "my man";
  Rng* rng = nullptr;               // hedges and response formulas
};

SemanticSpec apply_strategy(const SpeechActInstance& act, StrategyId id,
                            const StrategyContext& ctx);

// Band-checked entry points; Error(kConstraint) when the strategy is not in
// the band or does not apply to the act.
SemanticSpec apply_direct(const SpeechActInstance& act, StrategyId id,
                          const StrategyContext& ctx);
SemanticSpec apply_approval(const SpeechActInstance& act, StrategyId id,
                            const StrategyContext& ctx);
SemanticSpec apply_autonomy(const SpeechActInstance& act, StrategyId id,
                            const StrategyContext& ctx);
SemanticSpec apply_offrecord(const SpeechActInstance& act, StrategyId id,
                             const StrategyContext& ctx);

struct HedgeEntry {
  std::string text;
  bool verbal;
};

const std::vector<HedgeEntry>& hedge_lexicon();
const std::vector<std::string>& gladness_formulas();
const std::vector<std::string>& reluctance_formulas();
const std::vector<std::string>& address_forms();

}  // namespace lsi

#endif  // LSI_STRATEGY_H_
