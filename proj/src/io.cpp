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

#include "lsi/io.h"

#include <fstream>

namespace lsi {

using nlohmann::json;

namespace {

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCategory::kFormat, "cannot open '" + path + "'");
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCategory::kFormat, path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("format_version") ||
      !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != kFormatVersion) {
    throw Error(ErrorCategory::kFormat,
                path + ": expected format_version " + std::to_string(kFormatVersion));
  }
  return doc;
}

void check_version(const json& doc, const char* what) {
  if (!doc.is_object() || doc.value("format_version", -1) != kFormatVersion) {
    throw Error(ErrorCategory::kFormat,
                std::string(what) + ": expected format_version " +
                    std::to_string(kFormatVersion));
  }
}

Term parse_term(const json& node, const Script& script) {
  Term term;
  if (node.contains("agent")) {
    term = Term::agent(node["agent"].get<std::string>());
  } else if (node.contains("group")) {
    std::string group_id = node["group"].get<std::string>();
    const GroupInfo* group = script.find_group(group_id);
    std::vector<std::string> members;
    if (group != nullptr) members = group->members;
    term = Term::group(group_id, members);
  } else if (node.contains("phrase")) {
    term = Term::phrase(node["phrase"].get<std::string>());
  } else if (node.value("someone", false)) {
    term = Term::someone();
  } else {
    throw Error(ErrorCategory::kFormat,
                "term needs one of: agent, group, phrase, someone");
  }
  term.prep = node.value("prep", "");
  return term;
}

Proposition parse_proposition(const json& node, const Script& script) {
  if (!node.contains("predicate") || !node.contains("args")) {
    throw Error(ErrorCategory::kFormat, "proposition needs predicate and args");
  }
  std::vector<RoleArg> args;
  for (const json& arg : node["args"]) {
    args.push_back({arg.value("role", ""), parse_term(arg, script)});
  }
  Polarity polarity = node.value("polarity", "positive") == std::string("negative")
                          ? Polarity::kNegative
                          : Polarity::kPositive;
  return Proposition(node["predicate"].get<std::string>(), std::move(args),
                     polarity);
}

std::vector<Proposition> parse_propositions(const json& node, const Script& script) {
  std::vector<Proposition> out;
  if (node.is_array()) {
    for (const json& p : node) out.push_back(parse_proposition(p, script));
  }
  return out;
}

}  // namespace

Script parse_script(const json& doc) {
  check_version(doc, "script");
  Script script;
  script.title = doc.value("title", "");

  for (const json& node : doc.value("groups", json::array())) {
    GroupInfo group;
    group.id = node.at("id").get<std::string>();
    for (const json& member : node.value("members", json::array())) {
      group.members.push_back(member.get<std::string>());
    }
    script.groups.push_back(std::move(group));
  }

  for (const json& node : doc.value("agents", json::array())) {
    AgentInfo agent;
    agent.id = node.at("id").get<std::string>();
    agent.label = node.value("label", "");
    agent.name_lexeme = node.value("name", "");
    agent.group_id = node.value("group", "");
    agent.address_form = node.value("address_form", "");
    script.agents.push_back(std::move(agent));
  }

  for (const json& node : doc.value("domain_acts", json::array())) {
    DomainAct act;
    act.name = node.at("name").get<std::string>();
    act.verb = node.value("verb", "");
    const json& roles = node.value("roles", json::object());
    if (roles.contains("agent")) act.agent = parse_term(roles["agent"], script);
    if (roles.contains("recipient")) {
      act.recipient = parse_term(roles["recipient"], script);
    }
    if (roles.contains("theme")) act.theme = parse_term(roles["theme"], script);
    act.preconditions = parse_propositions(node.value("preconditions", json()), script);
    act.decomposition = parse_propositions(node.value("decomposition", json()), script);
    act.effects = parse_propositions(node.value("effects", json()), script);
    script.domain_acts.emplace(act.name, std::move(act));
  }

  for (const json& node : doc.value("turns", json::array())) {
    ScriptTurn turn;
    if (node.contains("stage_direction")) {
      turn.stage_direction = node["stage_direction"].get<std::string>();
      script.turns.push_back(std::move(turn));
      continue;
    }
    turn.speaker = node.at("speaker").get<std::string>();
    turn.hearer = node.at("hearer").get<std::string>();
    for (const json& act_node : node.value("acts", json::array())) {
      ActSpec spec;
      std::string type_name = act_node.at("type").get<std::string>();
      std::optional<SpeechActType> type = speech_act_type_from_string(type_name);
      if (!type) {
        throw Error(ErrorCategory::kFormat, "unknown act type '" + type_name + "'");
      }
      spec.type = *type;
      spec.domain_act = act_node.value("domain_act", "");
      if (act_node.contains("proposition")) {
        spec.proposition = parse_proposition(act_node["proposition"], script);
      }
      turn.acts.push_back(std::move(spec));
    }
    script.turns.push_back(std::move(turn));
  }
  return script;
}

SocialStructure parse_social(const json& doc) {
  check_version(doc, "social structure");
  SocialStructure social;
  for (const json& node : doc.value("pairs", json::array())) {
    social.set_pair(node.at("speaker").get<std::string>(),
                    node.at("hearer").get<std::string>(),
                    node.at("distance").get<int>(), node.at("power").get<int>());
  }
  const json dispositions = doc.value("dispositions", json::object());
  for (const auto& [agent, name] : dispositions.items()) {
    std::optional<Disposition> d = disposition_from_string(name.get<std::string>());
    if (!d) {
      throw Error(ErrorCategory::kFormat,
                  "unknown disposition '" + name.get<std::string>() + "'");
    }
    social.set_disposition(agent, *d);
  }
  return social;
}

Lexicon parse_lexicon(const json& doc) {
  check_version(doc, "lexicon");
  Lexicon lexicon;
  for (const json& node : doc.value("entries", json::array())) {
    LexEntry entry;
    entry.id = node.at("id").get<std::string>();
    std::string category = node.value("category", "noun-phrase");
    std::optional<LexCategory> parsed = lex_category_from_string(category);
    if (!parsed) {
      throw Error(ErrorCategory::kFormat, "unknown category '" + category + "'");
    }
    entry.category = *parsed;
    entry.surface = node.value("surface", "");
    entry.number = node.value("number", "singular") == std::string("plural")
                       ? GramNumber::kPlural
                       : GramNumber::kSingular;
    if (node.contains("forms")) {
      const json& forms = node["forms"];
      entry.verb = VerbForms{
          forms.value("base", ""),           forms.value("third", ""),
          forms.value("past", ""),           forms.value("past_participle", ""),
          forms.value("progressive", ""),
      };
    }
    lexicon.add(std::move(entry));
  }
  const json predicates = doc.value("predicates", json::object());
  for (const auto& [name, node] : predicates.items()) {
    PredicateInfo info;
    info.verb = node.at("verb").get<std::string>();
    info.tense = node.value("tense", "present") == std::string("past")
                     ? PredTense::kPast
                     : PredTense::kPresent;
    lexicon.set_predicate(name, info);
  }
  const json accents = doc.value("accent", json::object());
  for (const auto& [pos, value] : accents.items()) {
    lexicon.set_accent(pos, value.get<double>());
  }
  return lexicon;
}

DispositionPalette parse_palette(const json& doc) {
  check_version(doc, "palette");
  DispositionPalette palette;
  const json& dispositions = doc.value("dispositions", json::object());
  for (const auto& [name, params] : dispositions.items()) {
    std::optional<Disposition> d = disposition_from_string(name);
    if (!d) {
      throw Error(ErrorCategory::kFormat, "unknown disposition '" + name + "'");
    }
    AffectVector vector;
    const auto& names = AffectVector::param_names();
    if (!params.is_object() || params.size() != names.size()) {
      throw Error(ErrorCategory::kFormat,
                  "disposition '" + name + "' must define exactly " +
                      std::to_string(names.size()) + " parameters");
    }
    for (int i = 0; i < AffectVector::kParamCount; ++i) {
      const std::string& param = names[static_cast<std::size_t>(i)];
      if (!params.contains(param)) {
        throw Error(ErrorCategory::kFormat,
                    "disposition '" + name + "' missing parameter '" + param + "'");
      }
      vector[i] = params[param].get<double>();
    }
    vector.check_range();
    palette.set(*d, vector);
  }
  palette.validate();
  return palette;
}

ImpositionTable parse_imposition(const json& doc) {
  check_version(doc, "imposition table");
  ImpositionTable table;
  const json rankings = doc.value("rankings", json::object());
  for (const auto& [name, value] : rankings.items()) {
    std::optional<SpeechActType> type = speech_act_type_from_string(name);
    if (!type) {
      throw Error(ErrorCategory::kFormat, "unknown act type '" + name + "'");
    }
    table.set_ranking(*type, value.get<int>());
  }
  return table;
}

Script load_script(const std::string& path) {
  return parse_script(load_document(path));
}

SocialStructure load_social(const std::string& path) {
  return parse_social(load_document(path));
}

Lexicon load_lexicon(const std::string& path) {
  return parse_lexicon(load_document(path));
}

DispositionPalette load_palette(const std::string& path) {
  return parse_palette(load_document(path));
}

ImpositionTable load_imposition(const std::string& path) {
  return parse_imposition(load_document(path));
}

json prosody_to_json(const ProsodyRecord& record) {
  json affect = json::object();
  const auto& names = AffectVector::param_names();
  for (int i = 0; i < AffectVector::kParamCount; ++i) {
    affect[names[static_cast<std::size_t>(i)]] = record.affect[i];
  }
  json tokens = json::array();
  for (const AnnotatedToken& token : record.utterance.tokens) {
    tokens.push_back({{"surface", token.surface},
                      {"pos", token.pos},
                      {"accent", token.accent}});
  }
  return json{{"speaker", record.speaker},
              {"disposition", to_string(record.disposition)},
              {"affect", affect},
              {"tokens", tokens},
              {"boundaries", record.utterance.boundaries}};
}

json trace_to_json(const ActTrace& trace) {
  return json{{"act", to_string(trace.type)},
              {"distance", trace.distance},
              {"power", trace.power},
              {"ranking", trace.ranking},
              {"theta", trace.theta},
              {"band", to_string(trace.band)},
              {"position", trace.position},
              {"strategy", to_string(trace.strategy)},
              {"substituted", trace.substituted}};
}

}  // namespace lsi
