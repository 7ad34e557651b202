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

#ifndef LSI_ERROR_H_
#define LSI_ERROR_H_

#include <stdexcept>
#include <string>

namespace lsi {

// Categories shared by thrown errors and validate() diagnostics.
enum class ErrorCategory {
  kRange,       // numeric value outside its documented interval
  kReference,   // dangling agent / plan / lexeme reference
  kConstraint,  // structural constraint violated (e.g. wrong actor)
  kLexicon,     // realization blocked by a missing or malformed entry
  kFormat,      // malformed input document
};

const char* to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace lsi

#endif  // LSI_ERROR_H_
