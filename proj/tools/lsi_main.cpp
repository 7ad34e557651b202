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

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lsi/engine.h"
#include "lsi/io.h"

namespace {

struct CommonArgs {
  std::string script_path;
  std::string social_path;
  std::string lexicon_path;
  std::string palette_path;
  std::string imposition_path;
};

void add_common(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--script", args->script_path, "dialogue script file")->required();
  cmd->add_option("--social", args->social_path, "social structure file")->required();
  cmd->add_option("--lexicon", args->lexicon_path, "lexicon file")->required();
  cmd->add_option("--palette", args->palette_path, "disposition palette file");
  cmd->add_option("--imposition", args->imposition_path,
                  "imposition ranking override file");
}

int print_diagnostics(const std::vector<lsi::Diagnostic>& diags) {
  for (const lsi::Diagnostic& d : diags) {
    std::cerr << "error[" << lsi::to_string(d.category) << "]";
    if (d.turn >= 0) std::cerr << " turn " << d.turn;
    std::cerr << ": " << d.message << "\n";
  }
  return diags.empty() ? 0 : 1;
}

std::uint64_t seed_from_env_or_default() {
  if (const char* env = std::getenv("LSI_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return lsi::kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lsi - dialogue realization with socially conditioned style"};
  app.require_subcommand(1);

  CommonArgs render_args;
  std::uint64_t seed = seed_from_env_or_default();
  double substitution = 0.5;
  bool prosody = false;
  bool trace = false;
  bool no_contractions = false;

  CLI::App* render = app.add_subcommand("render", "realize a script as dialogue");
  add_common(render, &render_args);
  render->add_option("--seed", seed,
                     "random seed (falls back to LSI_SEED, then the default)");
  render->add_option("--substitution", substitution,
                     "off-record to autonomy substitution probability")
      ->check(CLI::Range(0.0, 1.0));
  render->add_flag("--prosody", prosody, "emit one prosody record per utterance");
  render->add_flag("--trace", trace, "emit one trace record per utterance");
  render->add_flag("--no-contractions", no_contractions,
                   "render without contracted auxiliaries");

  CommonArgs validate_args;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a corpus without rendering");
  add_common(validate_cmd, &validate_args);

  CLI::App* strategies_cmd =
      app.add_subcommand("strategies", "list the strategy registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (strategies_cmd->parsed()) {
      for (const lsi::StrategyInfo& info : lsi::strategy_registry()) {
        std::string acts;
        for (lsi::SpeechActType type : lsi::all_speech_act_types()) {
          if (lsi::strategy_covers(info.id, type)) {
            if (!acts.empty()) acts += ",";
            acts += lsi::to_string(type);
          }
        }
        std::cout << info.name << "\t" << lsi::to_string(info.band) << "\t" << acts
                  << "\t" << info.summary << "\n";
      }
      return 0;
    }

    const CommonArgs& args = render->parsed() ? render_args : validate_args;
    lsi::Script script = lsi::load_script(args.script_path);
    lsi::SocialStructure social = lsi::load_social(args.social_path);
    lsi::Lexicon lexicon = lsi::load_lexicon(args.lexicon_path);
    lsi::DispositionPalette palette = args.palette_path.empty()
                                          ? lsi::DispositionPalette::defaults()
                                          : lsi::load_palette(args.palette_path);
    std::optional<lsi::ImpositionTable> imposition;
    if (!args.imposition_path.empty()) {
      imposition = lsi::load_imposition(args.imposition_path);
    }

    std::vector<lsi::Diagnostic> diags =
        lsi::validate(script, social, lexicon, &palette,
                      imposition ? &*imposition : nullptr);
    if (validate_cmd->parsed()) {
      if (diags.empty()) {
        std::cout << "ok\n";
        return 0;
      }
      return print_diagnostics(diags);
    }
    if (!diags.empty()) return print_diagnostics(diags);

    lsi::RunConfig config;
    config.seed = seed;
    config.imposition = imposition;
    config.offrecord_substitution = substitution;
    config.contractions = !no_contractions;
    config.want_prosody = prosody;
    config.want_trace = trace;

    std::vector<lsi::TurnOutput> output =
        lsi::run_dialogue(script, social, lexicon, palette, config);

    bool structured = prosody || trace;
    int turn_index = 0;
    for (const lsi::TurnOutput& turn : output) {
      if (!structured) {
        if (turn.stage) {
          std::cout << turn.text << "\n";
        } else {
          std::cout << turn.label << ": " << turn.text << "\n";
        }
        ++turn_index;
        continue;
      }
      if (turn.stage) {
        std::cout << nlohmann::json{{"turn", turn_index},
                                    {"stage_direction", turn.text}}
                         .dump()
                  << "\n";
        ++turn_index;
        continue;
      }
      for (const lsi::ActOutput& act : turn.acts) {
        nlohmann::json record{{"turn", turn_index},
                              {"speaker", turn.label},
                              {"text", act.text}};
        if (trace) record["trace"] = lsi::trace_to_json(act.trace);
        if (prosody && act.prosody) {
          record["prosody"] = lsi::prosody_to_json(*act.prosody);
        }
        std::cout << record.dump() << "\n";
      }
      ++turn_index;
    }
    return 0;
  } catch (const lsi::Error& e) {
    std::cerr << "error[" << lsi::to_string(e.category()) << "]: " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
