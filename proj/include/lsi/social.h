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

#ifndef LSI_SOCIAL_H_
#define LSI_SOCIAL_H_

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lsi/affect.h"
#include "lsi/error.h"
#include "lsi/speech_act.h"

namespace lsi {

inline constexpr int kSocialMax = 50;

// Per ordered speaker/hearer pair: the social distance D(S,H) and the power
// P(H,S) the hearer holds over the speaker, both in [0,50] and not required
// to be symmetric. Also assigns each agent an emotional disposition.
class SocialStructure {
 public:
  void set_pair(const std::string& speaker, const std::string& hearer,
                int distance, int power);
  bool has_pair(const std::string& speaker, const std::string& hearer) const;

  // D(S,H); Error(kReference) when the pair is not configured.
  int distance(const std::string& speaker, const std::string& hearer) const;
  // P(H,S) as seen from the speaker's side.
  int power(const std::string& speaker, const std::string& hearer) const;

  void set_disposition(const std::string& agent, Disposition d);
  std::optional<Disposition> disposition(const std::string& agent) const;

  const std::map<std::pair<std::string, std::string>, std::pair<int, int>>& pairs()
      const {
    return pairs_;
  }
  const std::map<std::string, Disposition>& dispositions() const {
    return dispositions_;
  }

 private:
  // (speaker, hearer) -> (distance, power)
  std::map<std::pair<std::string, std::string>, std::pair<int, int>> pairs_;
  std::map<std::string, Disposition> dispositions_;
};

// Intrinsic imposition ranking per speech act type, in [0,50].
class ImpositionTable {
 public:
  ImpositionTable();  // the default ranking

  int ranking(SpeechActType type) const;
  void set_ranking(SpeechActType type, int value);  // Error(kRange)

 private:
  std::array<int, kSpeechActTypeCount> values_;
};

// Face threat of performing an act: the plain sum D + P + R, in [0,150].
struct ThreatValue {
  int value = 0;
};

ThreatValue threat(int distance, int power, int ranking);  // Error(kRange)

// The four politeness strategy bands, in increasing threat order.
enum class StrategyBand { kDirect, kApproval, kAutonomy, kOffRecord };

const char* to_string(StrategyBand band);

// Threat partition: through 50 direct, 51-80 approval, 81-120 autonomy,
// 121-150 off-record.
StrategyBand select_band(ThreatValue theta);

struct BandRange {
  int lo = 0;
  int hi = 0;
};

BandRange band_range(StrategyBand band);

// Linear position of theta within its band, 0 at the floor, 1 at the ceiling.
double band_position(ThreatValue theta);

}  // namespace lsi

#endif  // LSI_SOCIAL_H_
