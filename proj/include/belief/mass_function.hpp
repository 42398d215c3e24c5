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

#include <bit>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "belief/frame.hpp"

namespace belief {

inline constexpr double kMassSumTolerance = 1e-9;

/// Basic probability assignment over a frame: focal element -> mass.
/// Entries with mass exactly 0 may be stored; every measure skips them
/// (0 * log 0 := 0). Masses are kept exactly as given, never renormalized.
class MassFunction {
 public:
  explicit MassFunction(Frame frame) : frame_(std::move(frame)) {}

  const Frame& frame() const noexcept { return frame_; }

  void set(FocalElement f, double mass) {
    if (!frame_.owns(f)) {
      throw std::invalid_argument("focal element lies outside the frame");
    }
    masses_[f] = mass;
  }

  double mass_of(FocalElement f) const noexcept {
    const auto it = masses_.find(f);
    return it == masses_.end() ? 0.0 : it->second;
  }

  /// Entries in ascending bitmask order (deterministic iteration).
  const std::map<FocalElement, double>& entries() const noexcept { return masses_; }

  double total_mass() const noexcept {
    double sum = 0.0;
    for (const auto& [f, mass] : masses_) sum += mass;
    return sum;
  }

  /// True when all positive mass sits on singletons (a probability distribution).
  bool is_bayesian() const noexcept {
    for (const auto& [f, mass] : masses_) {
      if (mass > 0.0 && !f.is_singleton()) return false;
    }
    return true;
  }

  /// True when any multi-element focal element carries positive mass.
  bool has_composite_mass() const noexcept { return !is_bayesian(); }

  /// True when all positive mass sits on the whole frame (total ignorance).
  bool is_vacuous() const noexcept {
    for (const auto& [f, mass] : masses_) {
      if (mass > 0.0 && f != frame_.universe()) return false;
    }
    return mass_of(frame_.universe()) > 0.0;
  }

  bool operator==(const MassFunction&) const = default;

 private:
  Frame frame_;
  std::map<FocalElement, double> masses_;
};

struct ValidationIssue {
  Errc code;
  std::string detail;
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;
  double mass_sum = 0.0;

  bool ok() const noexcept { return issues.empty(); }
};

/// Checks the BPA axioms: every mass >= 0 and the total within tol of 1.
/// The empty set is unrepresentable by construction, so m(empty) = 0 holds
/// for every MassFunction.
inline ValidationResult validate(const MassFunction& m,
                                 double tol = kMassSumTolerance) {
  ValidationResult result;
  for (const auto& [f, mass] : m.entries()) {
    if (mass < 0.0 || std::isnan(mass)) {
      result.issues.push_back(
          {Errc::negative_mass, "m(" + m.frame().subset_name(f) +
                                    ") = " + std::to_string(mass)});
    }
  }
  result.mass_sum = m.total_mass();
  if (!(std::abs(result.mass_sum - 1.0) <= tol)) {
    result.issues.push_back(
        {Errc::sum_not_one, "masses sum to " + std::to_string(result.mass_sum)});
  }
  return result;
}

/// Throws the first validation issue, if any.
inline void require_valid(const MassFunction& m,
                          double tol = kMassSumTolerance) {
  const ValidationResult result = validate(m, tol);
  if (!result.ok()) {
    throw Error(result.issues.front().code, result.issues.front().detail);
  }
}

/// Convenience constructor from label-keyed entries, e.g.
/// make_bpa(frame, {{"A", 0.2}, {"B", 0.2}, {"A,B", 0.6}}).
inline MassFunction make_bpa(
    const Frame& frame,
    std::initializer_list<std::pair<const char*, double>> entries) {
  MassFunction m(frame);
  for (const auto& [key, mass] : entries) {
    m.set(frame.parse_subset(key), mass);
  }
  return m;
}

/// FNV-1a checksum of the frame labels and the exact stored masses,
/// as 16 hex digits. Identical BPAs digest identically, bit for bit.
inline std::string bpa_digest(const MassFunction& m) {
  std::uint64_t h = 14695981039346656037ull;
  const auto mix_byte = [&h](unsigned char b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  const auto mix_u64 = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(v >> (8 * i)));
  };
  for (const std::string& label : m.frame().labels()) {
    for (const char c : label) mix_byte(static_cast<unsigned char>(c));
    mix_byte(0x1f);
  }
  for (const auto& [f, mass] : m.entries()) {
    mix_u64(f.bits());
    mix_u64(std::bit_cast<std::uint64_t>(mass));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace belief
