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

#include "lsi/engine.h"

#include <cctype>

#include "lsi/rng.h"

namespace lsi {

const AgentInfo* Script::find_agent(const std::string& id) const {
  for (const AgentInfo& agent : agents) {
    if (agent.id == id) return &agent;
  }
  return nullptr;
}

const GroupInfo* Script::find_group(const std::string& id) const {
  for (const GroupInfo& group : groups) {
    if (group.id == id) return &group;
  }
  return nullptr;
}

namespace {

std::optional<Term> party_of(const Script& script, const std::string& agent_id) {
  const AgentInfo* agent = script.find_agent(agent_id);
  if (agent == nullptr || agent->group_id.empty()) return std::nullopt;
  const GroupInfo* group = script.find_group(agent->group_id);
  if (group == nullptr) return std::nullopt;
  return Term::group(group->id, group->members);
}

Perspective make_perspective(const Script& script, const Lexicon& lexicon,
                             const std::string& speaker, const std::string& hearer) {
  Perspective perspective;
  perspective.speaker = speaker;
  perspective.hearer = hearer;
  const AgentInfo* agent = script.find_agent(speaker);
  if (agent != nullptr && !agent->group_id.empty()) {
    const GroupInfo* group = script.find_group(agent->group_id);
    if (group != nullptr) {
      perspective.speaker_group_id = group->id;
      perspective.speaker_group.insert(group->members.begin(), group->members.end());
    }
  }
  for (const AgentInfo& info : script.agents) {
    std::string name = info.id;
    if (!info.name_lexeme.empty()) {
      const LexEntry* entry = lexicon.find(info.name_lexeme);
      if (entry != nullptr && !entry->surface.empty()) name = entry->surface;
    }
    perspective.display_names[info.id] = name;
  }
  return perspective;
}

SpeechActInstance make_instance(const Script& script, const ScriptTurn& turn,
                                const ActSpec& act_spec) {
  // The initiator of the exchange owns the first-person party: the speaker
  // for initiating acts, the hearer for responses.
  const std::string& initiator =
      is_initiating(act_spec.type) ? turn.speaker : turn.hearer;
  std::optional<Term> party = party_of(script, initiator);
  const Term* party_ptr = party ? &*party : nullptr;

  if (is_plan_bearing(act_spec.type)) {
    auto it = script.domain_acts.find(act_spec.domain_act);
    if (it == script.domain_acts.end()) {
      throw Error(ErrorCategory::kReference,
                  "unknown domain act '" + act_spec.domain_act + "'");
    }
    return instantiate_act(act_spec.type, turn.speaker, turn.hearer, it->second,
                           party_ptr);
  }
  if (!act_spec.proposition) {
    throw Error(ErrorCategory::kReference,
                std::string(to_string(act_spec.type)) + " needs a proposition");
  }
  return instantiate_act(act_spec.type, turn.speaker, turn.hearer,
                         *act_spec.proposition, party_ptr);
}

std::string speaker_address_form(const Script& script, const std::string& speaker) {
  const AgentInfo* agent = script.find_agent(speaker);
  if (agent != nullptr && !agent->address_form.empty()) return agent->address_form;
  return "my man";
}

}  // namespace

std::vector<TurnOutput> run_dialogue(const Script& script,
                                     const SocialStructure& social,
                                     const Lexicon& lexicon,
                                     const DispositionPalette& palette,
                                     const RunConfig& config) {
  std::vector<Diagnostic> problems =
      validate(script, social, lexicon, &palette,
               config.imposition ? &*config.imposition : nullptr);
  if (!problems.empty()) {
    const Diagnostic& first = problems.front();
    throw Error(first.category,
                "turn " + std::to_string(first.turn) + ": " + first.message);
  }

  const ImpositionTable table = config.imposition.value_or(ImpositionTable());
  Rng rng(config.seed);
  Annotator annotator(lexicon);
  std::vector<TurnOutput> output;

  for (const ScriptTurn& turn : script.turns) {
    TurnOutput turn_out;
    if (turn.is_stage()) {
      turn_out.stage = true;
      turn_out.text = "(" + turn.stage_direction + ")";
      output.push_back(std::move(turn_out));
      continue;
    }

    const AgentInfo* speaker = script.find_agent(turn.speaker);
    turn_out.speaker = turn.speaker;
    turn_out.label = speaker != nullptr && !speaker->label.empty() ? speaker->label
                                                                   : turn.speaker;
    Perspective perspective =
        make_perspective(script, lexicon, turn.speaker, turn.hearer);

    for (const ActSpec& act_spec : turn.acts) {
      SpeechActInstance instance = make_instance(script, turn, act_spec);
      int d = social.distance(turn.speaker, turn.hearer);
      int p = social.power(turn.speaker, turn.hearer);
      int r = table.ranking(act_spec.type);
      ThreatValue theta = threat(d, p, r);
      StrategyBand band = select_band(theta);
      double position = band_position(theta);

      CandidateSets sets = selection_candidates(instance, band, position);
      std::span<const StrategyId> candidates = sets.primary;
      bool substituted = false;
      if (!sets.substitutes.empty() &&
          rng.uniform() < config.offrecord_substitution) {
        candidates = sets.substitutes;
        substituted = true;
      }
      StrategyId strategy = choose_strategy(candidates, position, rng);

      StrategyContext ctx;
      ctx.perspective = perspective;
      ctx.threat_fraction = static_cast<double>(theta.value) / 150.0;
      ctx.address_form = speaker_address_form(script, turn.speaker);
      ctx.rng = &rng;
      SemanticSpec spec = apply_strategy(instance, strategy, ctx);

      ActOutput act_out;
      act_out.text = render(spec, lexicon, RenderOptions{config.contractions});
      act_out.trace = {act_spec.type, d,       p,        r,          theta.value,
                       band,          position, strategy, substituted};
      if (config.want_prosody) {
        act_out.prosody =
            emit_record(annotator.annotate(act_out.text), turn.speaker, social,
                        palette);
      }
      if (!turn_out.text.empty()) turn_out.text += " ";
      turn_out.text += act_out.text;
      turn_out.acts.push_back(std::move(act_out));
    }
    output.push_back(std::move(turn_out));
  }
  return output;
}

namespace {

void check_proposition_lexemes(const Proposition& p, const Lexicon& lexicon,
                               int turn, std::vector<Diagnostic>& diags);

void check_term_lexemes(const Term& term, const Lexicon& lexicon, int turn,
                        std::vector<Diagnostic>& diags) {
  if (term.kind == Term::Kind::kPhrase && lexicon.find(term.id) == nullptr) {
    diags.push_back({ErrorCategory::kLexicon, turn,
                     "missing lexeme '" + term.id + "'"});
  }
  if (term.kind == Term::Kind::kAction && term.action) {
    check_proposition_lexemes(*term.action, lexicon, turn, diags);
  }
}

void check_proposition_lexemes(const Proposition& p, const Lexicon& lexicon,
                               int turn, std::vector<Diagnostic>& diags) {
  if (p.predicate() != "want" && p.predicate() != "cando" &&
      p.predicate() != "know" && lexicon.predicate(p.predicate()) == nullptr) {
    diags.push_back({ErrorCategory::kLexicon, turn,
                     "no verb mapping for predicate '" + p.predicate() + "'"});
  }
  for (const RoleArg& arg : p.args()) {
    check_term_lexemes(arg.term, lexicon, turn, diags);
  }
}

}  // namespace

std::vector<Diagnostic> validate(const Script& script, const SocialStructure& social,
                                 const Lexicon& lexicon,
                                 const DispositionPalette* palette,
                                 const ImpositionTable* imposition) {
  std::vector<Diagnostic> diags;

  for (const auto& [pair, values] : social.pairs()) {
    if (values.first < 0 || values.first > kSocialMax) {
      diags.push_back({ErrorCategory::kRange, -1,
                       "distance D(" + pair.first + "," + pair.second + ") = " +
                           std::to_string(values.first) + " outside [0," +
                           std::to_string(kSocialMax) + "]"});
    }
    if (values.second < 0 || values.second > kSocialMax) {
      diags.push_back({ErrorCategory::kRange, -1,
                       "power P(" + pair.second + "," + pair.first + ") = " +
                           std::to_string(values.second) + " outside [0," +
                           std::to_string(kSocialMax) + "]"});
    }
  }

  if (palette != nullptr) {
    try {
      palette->validate();
    } catch (const Error& e) {
      diags.push_back({e.category(), -1, e.what()});
    }
  }

  const ImpositionTable table = imposition != nullptr ? *imposition : ImpositionTable();
  for (SpeechActType type : all_speech_act_types()) {
    int r = table.ranking(type);
    if (r < 0 || r > kSocialMax) {
      diags.push_back({ErrorCategory::kRange, -1,
                       std::string("imposition ranking for ") + to_string(type) +
                           " outside [0," + std::to_string(kSocialMax) + "]"});
    }
  }

  for (const auto& [name, act] : script.domain_acts) {
    try {
      act.validate();
    } catch (const Error& e) {
      diags.push_back({e.category(), -1, e.what()});
    }
    for (const auto& props : {act.preconditions, act.decomposition, act.effects}) {
      for (const Proposition& p : props) {
        check_proposition_lexemes(p, lexicon, -1, diags);
      }
    }
  }

  for (std::size_t i = 0; i < script.turns.size(); ++i) {
    const ScriptTurn& turn = script.turns[i];
    const int turn_index = static_cast<int>(i);
    if (turn.is_stage()) continue;

    if (script.find_agent(turn.speaker) == nullptr) {
      diags.push_back({ErrorCategory::kReference, turn_index,
                       "speaker '" + turn.speaker + "' not in the roster"});
      continue;
    }
    if (script.find_agent(turn.hearer) == nullptr) {
      diags.push_back({ErrorCategory::kReference, turn_index,
                       "hearer '" + turn.hearer + "' not in the roster"});
      continue;
    }
    if (!social.has_pair(turn.speaker, turn.hearer)) {
      diags.push_back({ErrorCategory::kReference, turn_index,
                       "no social entry for pair (" + turn.speaker + ", " +
                           turn.hearer + ")"});
      continue;
    }
    if (!social.disposition(turn.speaker)) {
      diags.push_back({ErrorCategory::kReference, turn_index,
                       "speaker '" + turn.speaker + "' has no disposition"});
    }
    if (turn.acts.empty()) {
      diags.push_back({ErrorCategory::kFormat, turn_index, "turn has no acts"});
      continue;
    }

    int d = social.distance(turn.speaker, turn.hearer);
    int p = social.power(turn.speaker, turn.hearer);
    if (d < 0 || d > kSocialMax || p < 0 || p > kSocialMax) continue;

    Perspective perspective =
        make_perspective(script, lexicon, turn.speaker, turn.hearer);
    for (const ActSpec& act_spec : turn.acts) {
      SpeechActInstance instance;
      try {
        instance = make_instance(script, turn, act_spec);
      } catch (const Error& e) {
        diags.push_back({e.category(), turn_index, e.what()});
        continue;
      }

      ThreatValue theta = threat(d, p, table.ranking(act_spec.type));
      StrategyBand band = select_band(theta);
      double position = band_position(theta);
      CandidateSets sets = selection_candidates(instance, band, position);

      std::vector<StrategyId> all = sets.primary;
      all.insert(all.end(), sets.substitutes.begin(), sets.substitutes.end());
      for (StrategyId id : all) {
        try {
          StrategyContext ctx;
          ctx.perspective = perspective;
          ctx.threat_fraction = static_cast<double>(theta.value) / 150.0;
          ctx.address_form = speaker_address_form(script, turn.speaker);
          SemanticSpec spec = apply_strategy(instance, id, ctx);
          (void)render(spec, lexicon);
          (void)render(spec, lexicon, RenderOptions{false});
        } catch (const Error& e) {
          diags.push_back({e.category(), turn_index, e.what()});
        }
      }
    }
  }
  return diags;
}

std::string normalize_line(const std::string& line) {
  std::string out;
  bool pending_space = false;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  while (!out.empty() &&
         (out.back() == '.' || out.back() == '?' || out.back() == '!')) {
    out.pop_back();
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace lsi
