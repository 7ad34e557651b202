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

#include "lsi/strategy.h"

#include <algorithm>
#include <cmath>

namespace lsi {

const char* to_string(SyntacticForm form) {
  switch (form) {
    case SyntacticForm::kImperative: return "imperative";
    case SyntacticForm::kDeclarative: return "declarative";
    case SyntacticForm::kYesNoQuestion: return "yesno-question";
    case SyntacticForm::kFragment: return "fragment";
  }
  return "unknown";
}

const char* to_string(ContentSource source) {
  switch (source) {
    case ContentSource::kActDecomposition: return "act-decomposition";
    case ContentSource::kWantPrecondition: return "want-precondition";
    case ContentSource::kCandoPrecondition: return "cando-precondition";
    case ContentSource::kWantEffect: return "want-effect";
    case ContentSource::kDomainPrecondition: return "domain-precondition";
    case ContentSource::kDomainDecomposition: return "domain-decomposition";
    case ContentSource::kDomainEffect: return "domain-effect";
  }
  return "unknown";
}

bool SemanticSpec::has_decoration(DecorationKind kind) const {
  for (const Decoration& d : decorations) {
    if (d.kind == kind) return true;
  }
  return false;
}

const std::vector<StrategyInfo>& strategy_registry() {
  // Within each band, entries run from the lower end of the threat scale to
  // the upper end.
  static const std::vector<StrategyInfo> kRegistry = {
      {StrategyId::kReluctantDirectAccept, "reluctant-direct-accept",
       StrategyBand::kDirect, 0.0, 0.2, 1,
       "accept grudgingly with a reluctance formula"},
      {StrategyId::kRealizeDirect, "realize-direct", StrategyBand::kDirect, 0.0,
       1.0, 0, "realize the decomposition with the act's default form"},
      {StrategyId::kPowerDirectUrgency, "power-direct-urgency",
       StrategyBand::kDirect, 0.0, 1.0, 0, "direct form plus 'right away'"},
      {StrategyId::kPowerDirectObligation, "power-direct-obligation",
       StrategyBand::kDirect, 0.0, 1.0, 0, "direct content under 'you must'"},

      {StrategyId::kGroupApproval, "group-approval", StrategyBand::kApproval, 0.0,
       1.0, 0, "prefix an in-group address form to the direct realization"},
      {StrategyId::kOptimismApproval, "optimism-approval", StrategyBand::kApproval,
       0.0, 1.0, 0, "assert the want effect with a tag question"},
      {StrategyId::kGladAcceptApproval, "glad-accept-approval",
       StrategyBand::kApproval, 0.0, 1.0, 0, "accept with a gladness formula"},
      {StrategyId::kSorryRejectApproval, "sorry-reject-approval",
       StrategyBand::kApproval, 0.0, 1.0, 0,
       "reject while affirming the relationship"},

      {StrategyId::kNegateEffectAutonomy, "negate-effect-autonomy",
       StrategyBand::kAutonomy, 0.0, 1.0, 0,
       "state pessimistically that the want effect does not hold"},
      {StrategyId::kQueryAbilityAutonomy, "query-ability-autonomy",
       StrategyBand::kAutonomy, 0.0, 1.0, 0, "query the ability precondition"},
      {StrategyId::kAssertWantPreconditionAutonomy,
       "assert-want-precondition-autonomy", StrategyBand::kAutonomy, 0.0, 1.0, 0,
       "assert that the want precondition holds"},
      {StrategyId::kImpersonalizeActorAutonomy, "impersonalize-actor-autonomy",
       StrategyBand::kAutonomy, 0.0, 1.0, 0,
       "propose the domain effect with no actor"},
      {StrategyId::kHedgeInform, "hedge-inform", StrategyBand::kAutonomy, 0.0, 1.0,
       0, "soften an inform with a pre-sentential or verbal hedge"},

      {StrategyId::kAssertNegationDomainEffect, "assert-negation-domain-effect",
       StrategyBand::kOffRecord, 0.0, 1.0, 0,
       "hint by asserting the domain effect does not hold yet"},
      {StrategyId::kAssertDomainPreconditionHolds,
       "assert-domain-precondition-holds", StrategyBand::kOffRecord, 0.0, 1.0, 0,
       "hint by asserting the domain precondition"},
      {StrategyId::kAbstractAgentAndNegateEffect,
       "abstract-agent-and-negate-effect", StrategyBand::kOffRecord, 0.0, 1.0, 0,
       "negate the decomposition with the agent abstracted away"},
  };
  return kRegistry;
}

const StrategyInfo& strategy_info(StrategyId id) {
  for (const StrategyInfo& info : strategy_registry()) {
    if (info.id == id) return info;
  }
  throw Error(ErrorCategory::kReference, "unregistered strategy");
}

const char* to_string(StrategyId id) { return strategy_info(id).name; }

bool strategy_covers(StrategyId id, SpeechActType type) {
  switch (id) {
    case StrategyId::kRealizeDirect:
      return true;
    case StrategyId::kPowerDirectUrgency:
    case StrategyId::kPowerDirectObligation:
    case StrategyId::kOptimismApproval:
    case StrategyId::kNegateEffectAutonomy:
    case StrategyId::kAssertWantPreconditionAutonomy:
    case StrategyId::kImpersonalizeActorAutonomy:
      return type == SpeechActType::kRequestAct;
    case StrategyId::kGroupApproval:
      return is_initiating(type);
    case StrategyId::kGladAcceptApproval:
      return type == SpeechActType::kAcceptOffer ||
             type == SpeechActType::kAcceptRequest;
    case StrategyId::kSorryRejectApproval:
      return type == SpeechActType::kRejectInform ||
             type == SpeechActType::kRejectOffer ||
             type == SpeechActType::kRejectRequest;
    case StrategyId::kReluctantDirectAccept:
      return type == SpeechActType::kAcceptInform ||
             type == SpeechActType::kAcceptOffer ||
             type == SpeechActType::kAcceptRequest;
    case StrategyId::kQueryAbilityAutonomy:
      return type == SpeechActType::kRequestAct || type == SpeechActType::kOffer;
    case StrategyId::kHedgeInform:
      return type == SpeechActType::kInform;
    case StrategyId::kAssertNegationDomainEffect:
    case StrategyId::kAssertDomainPreconditionHolds:
    case StrategyId::kAbstractAgentAndNegateEffect:
      return type == SpeechActType::kRequestAct || type == SpeechActType::kOffer;
  }
  return false;
}

bool strategy_applies(StrategyId id, const SpeechActInstance& act) {
  if (!strategy_covers(id, act.type)) return false;
  switch (id) {
    case StrategyId::kOptimismApproval:
    case StrategyId::kNegateEffectAutonomy:
      return act.want_effect.has_value();
    case StrategyId::kQueryAbilityAutonomy:
      return act.cando_precondition.has_value();
    case StrategyId::kAssertWantPreconditionAutonomy:
      return act.want_precondition.has_value();
    case StrategyId::kImpersonalizeActorAutonomy:
      return act.act && !act.act->effects.empty() &&
             act.act->effects.front().find("owner") != nullptr &&
             act.act->effects.front().find("theme") != nullptr;
    case StrategyId::kAssertNegationDomainEffect:
      return act.act && !act.act->effects.empty();
    case StrategyId::kAssertDomainPreconditionHolds:
      return act.act && !act.act->preconditions.empty();
    case StrategyId::kAbstractAgentAndNegateEffect:
      return act.act && !act.act->decomposition.empty() &&
             act.act->decomposition.front().find("agent") != nullptr;
    default:
      return true;
  }
}

namespace {

std::vector<StrategyId> band_candidates(const SpeechActInstance& act,
                                        StrategyBand band) {
  std::vector<StrategyId> out;
  for (const StrategyInfo& info : strategy_registry()) {
    if (info.band == band && strategy_applies(info.id, act)) out.push_back(info.id);
  }
  return out;
}

std::vector<StrategyId> window_filter(const std::vector<StrategyId>& ids,
                                      double position) {
  std::vector<StrategyId> matched;
  for (StrategyId id : ids) {
    const StrategyInfo& info = strategy_info(id);
    if (position >= info.window_lo && position <= info.window_hi) {
      matched.push_back(id);
    }
  }
  if (matched.empty()) matched = ids;
  int best = 0;
  for (StrategyId id : matched) best = std::max(best, strategy_info(id).priority);
  std::vector<StrategyId> out;
  for (StrategyId id : matched) {
    if (strategy_info(id).priority == best) out.push_back(id);
  }
  return out;
}

}  // namespace

std::vector<StrategyId> applicable_strategies(const SpeechActInstance& act,
                                              StrategyBand band) {
  std::vector<StrategyId> own = band_candidates(act, band);
  if (band == StrategyBand::kOffRecord) {
    std::vector<StrategyId> subs = band_candidates(act, StrategyBand::kAutonomy);
    own.insert(own.end(), subs.begin(), subs.end());
  } else if (own.empty() && band != StrategyBand::kDirect) {
    own = band_candidates(act, StrategyBand::kAutonomy);
  }
  if (own.empty()) own = band_candidates(act, StrategyBand::kDirect);
  return own;
}

CandidateSets selection_candidates(const SpeechActInstance& act, StrategyBand band,
                                   double position) {
  CandidateSets sets;
  sets.primary = band_candidates(act, band);
  if (band == StrategyBand::kOffRecord) {
    std::vector<StrategyId> subs = band_candidates(act, StrategyBand::kAutonomy);
    if (sets.primary.empty()) {
      sets.primary = std::move(subs);
    } else if (!subs.empty()) {
      sets.substitutes = window_filter(subs, position);
    }
  }
  if (sets.primary.empty()) {
    // No band-specific realization exists; fall back to the direct set at a
    // band-neutral position so low-end direct specials do not fire.
    sets.primary = window_filter(band_candidates(act, StrategyBand::kDirect), 0.5);
  } else {
    sets.primary = window_filter(sets.primary, position);
  }
  return sets;
}

StrategyId choose_strategy(std::span<const StrategyId> candidates, double position,
                           Rng& rng) {
  if (candidates.empty()) {
    throw Error(ErrorCategory::kConstraint, "no candidate strategies");
  }
  if (candidates.size() == 1) return candidates.front();
  std::vector<double> weights(candidates.size());
  const double n = static_cast<double>(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double nominal = (static_cast<double>(i) + 0.5) / n;
    weights[i] = 1.0 / (0.25 + std::abs(nominal - position));
  }
  return candidates[rng.pick_weighted(weights)];
}

const std::vector<HedgeEntry>& hedge_lexicon() {
  static const std::vector<HedgeEntry> kHedges = {
      {"I feel", false},    {"I believe", false},       {"It seems", false},
      {"As you may know,", false}, {"I think", false},  {"I heard", false},
      {"somehow", true},    {"sort of", true},          {"kind of", true},
  };
  return kHedges;
}

const std::vector<std::string>& gladness_formulas() {
  static const std::vector<std::string> kFormulas = {
      "I'd be glad to.",
      "With pleasure.",
      "It's a pleasure.",
  };
  return kFormulas;
}

const std::vector<std::string>& reluctance_formulas() {
  static const std::vector<std::string> kFormulas = {
      "Yes, if you insist.",
      "Yes, if I must.",
  };
  return kFormulas;
}

const std::vector<std::string>& address_forms() {
  static const std::vector<std::string> kForms = {"buddy", "mate", "honey", "doll",
                                                  "my man"};
  return kForms;
}

namespace {

std::size_t draw_index(const StrategyContext& ctx, std::size_t n) {
  return ctx.rng != nullptr ? ctx.rng->pick_index(n) : 0;
}

// Content a response asserts: the want effect of the initiating act when it
// has one, otherwise the bare proposition.
std::pair<Proposition, ContentSource> response_content(const SpeechActInstance& act) {
  if (act.want_effect) return {*act.want_effect, ContentSource::kWantEffect};
  return {*act.prop, ContentSource::kActDecomposition};
}

SemanticSpec direct_spec(const SpeechActInstance& act, const StrategyContext& ctx) {
  switch (act.type) {
    case SpeechActType::kRequestAct: {
      SemanticSpec spec(act.act->decomposition.front());
      spec.form = SyntacticForm::kImperative;
      spec.source = ContentSource::kActDecomposition;
      return spec;
    }
    case SpeechActType::kOffer: {
      SemanticSpec spec(act.act->decomposition.front());
      spec.form = SyntacticForm::kDeclarative;
      spec.modal = "will";
      spec.source = ContentSource::kActDecomposition;
      return spec;
    }
    case SpeechActType::kInform: {
      SemanticSpec spec(*act.prop);
      spec.form = SyntacticForm::kDeclarative;
      spec.source = ContentSource::kActDecomposition;
      return spec;
    }
    case SpeechActType::kRequestInfo: {
      SemanticSpec spec(*act.prop);
      spec.form = SyntacticForm::kYesNoQuestion;
      spec.source = ContentSource::kActDecomposition;
      return spec;
    }
    default: {
      auto [content, source] = response_content(act);
      SemanticSpec spec(std::move(content));
      spec.form = SyntacticForm::kFragment;
      spec.source = source;
      spec.fragment_text =
          act.type == SpeechActType::kAcceptInform ? "Okay."
          : act.type == SpeechActType::kAcceptOffer ||
                  act.type == SpeechActType::kAcceptRequest
              ? "Yes."
              : "No.";
      return spec;
    }
  }
  (void)ctx;
}

SemanticSpec build_spec(const SpeechActInstance& act, StrategyId id,
                        const StrategyContext& ctx) {
  switch (id) {
    case StrategyId::kRealizeDirect:
      return direct_spec(act, ctx);

    case StrategyId::kPowerDirectUrgency: {
      SemanticSpec spec = direct_spec(act, ctx);
      spec.decorations.push_back({DecorationKind::kUrgency, "right away"});
      return spec;
    }

    case StrategyId::kPowerDirectObligation: {
      SemanticSpec spec(act.act->decomposition.front());
      spec.form = SyntacticForm::kDeclarative;
      spec.modal = "must";
      spec.source = ContentSource::kActDecomposition;
      spec.decorations.push_back({DecorationKind::kObligation, "you must"});
      return spec;
    }

    case StrategyId::kGroupApproval: {
      SemanticSpec spec = direct_spec(act, ctx);
      auto it = ctx.perspective.display_names.find(act.hearer);
      std::string hearer_name =
          it != ctx.perspective.display_names.end() ? it->second : act.hearer;
      spec.decorations.push_back(
          {DecorationKind::kAddressForm,
           "Hey " + hearer_name + ", " + ctx.address_form + ","});
      return spec;
    }

    case StrategyId::kOptimismApproval: {
      SemanticSpec spec(*act.want_effect);
      spec.form = SyntacticForm::kDeclarative;
      spec.modal = "would";
      spec.source = ContentSource::kWantEffect;
      spec.decorations.push_back({DecorationKind::kTagQuestion, ""});
      return spec;
    }

    case StrategyId::kGladAcceptApproval: {
      auto [content, source] = response_content(act);
      SemanticSpec spec(std::move(content));
      spec.form = SyntacticForm::kFragment;
      spec.source = source;
      const std::string& formula =
          gladness_formulas()[draw_index(ctx, gladness_formulas().size())];
      spec.decorations.push_back({DecorationKind::kGladnessFormula, formula});
      spec.fragment_text = formula;
      return spec;
    }

    case StrategyId::kSorryRejectApproval: {
      auto [content, source] = response_content(act);
      SemanticSpec spec(std::move(content));
      spec.form = SyntacticForm::kFragment;
      spec.source = source;
      const std::string formula = "I'm sorry, I can't. Normally I'd love to.";
      spec.decorations.push_back({DecorationKind::kApologyFormula, formula});
      spec.fragment_text = formula;
      return spec;
    }

    case StrategyId::kReluctantDirectAccept: {
      auto [content, source] = response_content(act);
      SemanticSpec spec(std::move(content));
      spec.form = SyntacticForm::kFragment;
      spec.source = source;
      const std::string& formula =
          reluctance_formulas()[draw_index(ctx, reluctance_formulas().size())];
      spec.decorations.push_back({DecorationKind::kReluctanceFormula, formula});
      spec.fragment_text = formula;
      return spec;
    }

    case StrategyId::kNegateEffectAutonomy: {
      SemanticSpec spec(negate(*act.want_effect));
      spec.form = SyntacticForm::kDeclarative;
      spec.modal = "would";
      spec.source = ContentSource::kWantEffect;
      spec.decorations.push_back({DecorationKind::kTagQuestion, ""});
      return spec;
    }

    case StrategyId::kQueryAbilityAutonomy: {
      SemanticSpec spec(*act.cando_precondition);
      spec.form = SyntacticForm::kYesNoQuestion;
      // Offers upgrade to the past-form modal as an extra deference marker
      // once the overall threat passes the middle of the scale.
      spec.modal = act.type == SpeechActType::kOffer && ctx.threat_fraction > 0.5
                       ? "could"
                       : "can";
      spec.source = ContentSource::kCandoPrecondition;
      return spec;
    }

    case StrategyId::kAssertWantPreconditionAutonomy: {
      const Proposition& want = *act.want_precondition;
      if (act.act && act.act->theme) {
        // "We'd like two cointreaux." -- reduce the wanted action to its theme.
        SemanticSpec spec(Proposition(
            "want", {{"experiencer", want.args().front().term},
                     {"action", *act.act->theme}}));
        spec.form = SyntacticForm::kDeclarative;
        spec.modal = "would";
        spec.source = ContentSource::kWantPrecondition;
        return spec;
      }
      SemanticSpec spec(want);
      spec.form = SyntacticForm::kDeclarative;
      spec.modal = "would";
      spec.source = ContentSource::kWantPrecondition;
      return spec;
    }

    case StrategyId::kImpersonalizeActorAutonomy: {
      SemanticSpec spec(act.act->effects.front());
      spec.form = SyntacticForm::kImperative;
      spec.let_form = true;
      spec.source = ContentSource::kDomainEffect;
      return spec;
    }

    case StrategyId::kHedgeInform: {
      SemanticSpec spec(*act.prop);
      spec.form = SyntacticForm::kDeclarative;
      spec.source = ContentSource::kActDecomposition;
      const HedgeEntry& hedge =
          hedge_lexicon()[draw_index(ctx, hedge_lexicon().size())];
      spec.decorations.push_back(
          {DecorationKind::kHedge, hedge.text, hedge.verbal});
      return spec;
    }

    case StrategyId::kAssertNegationDomainEffect: {
      SemanticSpec spec(negate(act.act->effects.front()));
      spec.form = SyntacticForm::kDeclarative;
      spec.source = ContentSource::kDomainEffect;
      spec.decorations.push_back({DecorationKind::kTemporalMarker, "yet"});
      return spec;
    }

    case StrategyId::kAssertDomainPreconditionHolds: {
      SemanticSpec spec(act.act->preconditions.front());
      spec.form = SyntacticForm::kDeclarative;
      spec.source = ContentSource::kDomainPrecondition;
      return spec;
    }

    case StrategyId::kAbstractAgentAndNegateEffect: {
      SemanticSpec spec(negate(abstract_agent(act.act->decomposition.front())));
      spec.form = SyntacticForm::kDeclarative;
      spec.perfect = true;
      spec.source = ContentSource::kDomainDecomposition;
      return spec;
    }
  }
  throw Error(ErrorCategory::kReference, "unregistered strategy");
}

}  // namespace

SemanticSpec apply_strategy(const SpeechActInstance& act, StrategyId id,
                            const StrategyContext& ctx) {
  if (!strategy_applies(id, act)) {
    throw Error(ErrorCategory::kConstraint,
                std::string(to_string(id)) + " does not apply to " +
                    to_string(act.type));
  }
  SemanticSpec spec = build_spec(act, id, ctx);
  spec.perspective = ctx.perspective;
  return spec;
}

namespace {

SemanticSpec apply_in_band(const SpeechActInstance& act, StrategyId id,
                           const StrategyContext& ctx, StrategyBand band) {
  if (strategy_info(id).band != band) {
    throw Error(ErrorCategory::kConstraint,
                std::string(to_string(id)) + " is not a " +
                    std::string(to_string(band)) + " strategy");
  }
  return apply_strategy(act, id, ctx);
}

}  // namespace

SemanticSpec apply_direct(const SpeechActInstance& act, StrategyId id,
                          const StrategyContext& ctx) {
  return apply_in_band(act, id, ctx, StrategyBand::kDirect);
}

SemanticSpec apply_approval(const SpeechActInstance& act, StrategyId id,
                            const StrategyContext& ctx) {
  return apply_in_band(act, id, ctx, StrategyBand::kApproval);
}

SemanticSpec apply_autonomy(const SpeechActInstance& act, StrategyId id,
                            const StrategyContext& ctx) {
  return apply_in_band(act, id, ctx, StrategyBand::kAutonomy);
}

SemanticSpec apply_offrecord(const SpeechActInstance& act, StrategyId id,
                             const StrategyContext& ctx) {
  if (!act.act) {
    throw Error(ErrorCategory::kConstraint,
                "off-record strategies need a domain plan");
  }
  return apply_in_band(act, id, ctx, StrategyBand::kOffRecord);
}

}  // namespace lsi
