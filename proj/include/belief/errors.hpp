/*
 * Copyright (c) 2026, the belent authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace belief {

/// Error conditions raised by the toolkit. Validation problems carry the
/// offending entry in the message; resource guards fail before allocating.
enum class Errc {
  duplicate_label,
  empty_label,
  too_many_elements,
  reserved_character,
  negative_mass,
  empty_set_mass,
  sum_not_one,
  malformed_document,
  unknown_label,
  duplicate_subset,
  invalid_distribution,
  invalid_order,
  overflow,
  tree_too_large,
  frame_too_large,
  step_invalid,
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::empty_label: return "EmptyLabel";
    case Errc::too_many_elements: return "TooManyElements";
    case Errc::reserved_character: return "ReservedCharacter";
    case Errc::negative_mass: return "NegativeMass";
    case Errc::empty_set_mass: return "EmptySetMass";
    case Errc::sum_not_one: return "SumNotOne";
    case Errc::malformed_document: return "MalformedDocument";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::duplicate_subset: return "DuplicateSubset";
    case Errc::invalid_distribution: return "InvalidDistribution";
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::overflow: return "Overflow";
    case Errc::tree_too_large: return "TreeTooLarge";
    case Errc::frame_too_large: return "FrameTooLarge";
    case Errc::step_invalid: return "StepInvalid";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace belief
