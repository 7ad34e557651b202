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

#ifndef LSI_AFFECT_H_
#define LSI_AFFECT_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsi/error.h"
#include "lsi/lexicon.h"

namespace lsi {

// Character-constant emotional dispositions. Neutral is the zero point.
enum class Disposition {
  kAngry,
  kAnnoyed,
  kDisgusted,
  kDistraught,
  kGruff,
  kPleasant,
  kSad,
  kNeutral,
};

inline constexpr int kDispositionCount = 8;

const char* to_string(Disposition d);
std::optional<Disposition> disposition_from_string(const std::string& s);
const std::vector<Disposition>& all_dispositions();

// Seventeen acoustic control parameters, each an adjustment around zero in
// [-10, 10]: six pitch, five timing, five voice-quality and one
// articulation slot.
struct AffectVector {
  static constexpr int kParamCount = 17;

  std::array<double, kParamCount> values{};  // zero-initialized = neutral

  static const std::array<std::string, kParamCount>& param_names();
  static const char* group_of(int index);  // "pitch" | "timing" | ...

  double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  void check_range() const;  // Error(kRange) if any value leaves [-10,10]
};

// Named parameter sets for the seven dispositions plus Neutral. The shipped
// values are replaceable configuration; only arity and range are contractual.
class DispositionPalette {
 public:
  static DispositionPalette defaults();

  void set(Disposition d, AffectVector v);  // range-checked
  bool has(Disposition d) const;
  const AffectVector& at(Disposition d) const;  // Error(kReference)

  // All eight dispositions present, all vectors in range.
  void validate() const;

 private:
  std::map<Disposition, AffectVector> vectors_;
};

// Neutral is the zero vector regardless of the palette contents.
AffectVector disposition_vector(Disposition d, const DispositionPalette& palette);

struct AnnotatedToken {
  std::string surface;
  std::string pos;      // lexicon category, "punct", or "unknown"
  double accent = 0.0;  // likelihood of intonational stress, [0,1]
};

// Token stream with accent likelihoods and candidate phrase boundaries.
// A boundary at position g falls between tokens g-1 and g.
struct AnnotatedUtterance {
  std::vector<AnnotatedToken> tokens;
  std::vector<int> boundaries;  // strictly increasing, in [1, tokens-1]
};

// Part-of-speech and focus annotator. Repeated lemmas lose accent within a
// dialogue (given material draws less stress), so the annotator is stateful
// and one instance covers exactly one dialogue run.
class Annotator {
 public:
  explicit Annotator(const Lexicon& lexicon) : lexicon_(&lexicon) {}

  AnnotatedUtterance annotate(const std::string& text);  // Error(kFormat) if empty
  void reset() { mentions_.clear(); }

 private:
  const Lexicon* lexicon_;
  std::map<std::string, int> mentions_;
};

struct ProsodyRecord {
  std::string speaker;
  Disposition disposition = Disposition::kNeutral;
  AffectVector affect;
  AnnotatedUtterance utterance;
};

class SocialStructure;

// Pairs the annotated text with the speaker's disposition vector.
ProsodyRecord emit_record(const AnnotatedUtterance& utterance,
                          const std::string& speaker, const SocialStructure& social,
                          const DispositionPalette& palette);

}  // namespace lsi

#endif  // LSI_AFFECT_H_
