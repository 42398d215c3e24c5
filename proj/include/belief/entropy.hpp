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

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "belief/mass_function.hpp"
#include "belief/powers.hpp"
#include "belief/split_tree.hpp"

namespace belief {

/// Shannon entropy of a probability distribution, in bits. 0*log 0 := 0.
inline double shannon(std::span<const double> p) {
  double sum = 0.0;
  for (const double v : p) {
    if (v < 0.0 || std::isnan(v)) {
      throw Error(Errc::invalid_distribution,
                  "probability " + std::to_string(v) + " is negative");
    }
    sum += v;
  }
  if (!(std::abs(sum - 1.0) <= kMassSumTolerance)) {
    throw Error(Errc::invalid_distribution,
                "probabilities sum to " + std::to_string(sum));
  }
  double acc = 0.0;
  for (const double v : p) {
    if (v > 0.0) acc += v * std::log2(v);
  }
  return 0.0 - acc;
}

/// Shannon entropy of the positive focal masses treated as one flat
/// distribution. For a Bayesian BPA this is the Shannon entropy of the
/// underlying probability distribution; for others it is the "masses as
/// outcomes" reading used by the trajectory and surface outputs.
inline double shannon_of_focal_masses(const MassFunction& m) {
  require_valid(m);
  std::vector<double> masses;
  masses.reserve(m.entries().size());
  for (const auto& [f, mass] : m.entries()) {
    if (mass > 0.0) masses.push_back(mass);
  }
  double acc = 0.0;
  for (const double v : masses) acc += v * std::log2(v);
  return 0.0 - acc;
}

/// BPA re-expressed in the dimension of a probability distribution:
/// m_F(F) = sum over supersets G of F (G = F included) of m(G)/(2^|G|-1).
/// Subsets reachable from no focal element carry exactly 0 and are omitted
/// from the map.
struct FractalMass {
  Frame frame;
  std::map<FocalElement, double> values;

  double at(FocalElement f) const noexcept {
    const auto it = values.find(f);
    return it == values.end() ? 0.0 : it->second;
  }

  double total() const noexcept {
    double sum = 0.0;
    for (const auto& [f, v] : values) sum += v;
    return sum;
  }
};

inline FractalMass fractal_transform(const MassFunction& m) {
  require_valid(m);
  if (m.frame().size() > 20) {
    throw Error(Errc::frame_too_large,
                "fractal transform enumerates 2^n - 1 subsets; n = " +
                    std::to_string(m.frame().size()) + " is past the n = 20 cap");
  }
  FractalMass out{m.frame(), {}};
  // Scatter form of the superset sum: each focal element spreads
  // m(G)/(2^|G|-1) onto every nonempty subset of G, itself included.
  for (const auto& [g, mass] : m.entries()) {
    if (mass <= 0.0) continue;
    const double share = mass / pow2_minus_one(g.cardinality());
    for (const FocalElement f : subsets_of(g)) {
      out.values[f] += share;
    }
  }
  return out;
}

/// Shannon entropy of the fractal mass transform, in bits.
inline double fb_entropy(const MassFunction& m) {
  const FractalMass fm = fractal_transform(m);
  double acc = 0.0;
  for (const auto& [f, v] : fm.values) {
    if (v > 0.0) acc += v * std::log2(v);
  }
  return 0.0 - acc;
}

/// Belief entropy with denominator 2^|F|-1, in bits.
inline double deng_entropy(const MassFunction& m) {
  require_valid(m);
  double acc = 0.0;
  for (const auto& [f, mass] : m.entries()) {
    if (mass <= 0.0) continue;
    acc += mass * (log2_ipow_diff(2, f.cardinality()) - std::log2(mass));
  }
  return acc;
}

/// k-order time-fractal entropy: denominator (k+1)^|F| - k^|F|, the leaf
/// count after k split rounds. Order 1 coincides with deng_entropy.
inline double tfb_entropy(const MassFunction& m, int k) {
  require_valid(m);
  if (k < 1) throw Error(Errc::invalid_order, "TFB order k must be >= 1");
  double acc = 0.0;
  for (const auto& [f, mass] : m.entries()) {
    if (mass <= 0.0) continue;
    acc += mass * (log2_leaf_count(f.cardinality(), k) - std::log2(mass));
  }
  return acc;
}

/// Closed form for the vacuous BPA m(Theta) = 1: log2((k+1)^n - k^n).
inline double tfb_vacuous(int n, int k) {
  if (n < 1) throw std::invalid_argument("frame cardinality must be >= 1");
  if (k < 1) throw Error(Errc::invalid_order, "TFB order k must be >= 1");
  return log2_ipow_diff(std::int64_t{k} + 1, n);
}

enum class Measure { shannon, deng, fb, tfb };

inline const char* measure_name(Measure measure) noexcept {
  switch (measure) {
    case Measure::shannon: return "shannon";
    case Measure::deng: return "deng";
    case Measure::fb: return "fb";
    case Measure::tfb: return "tfb";
  }
  return "?";
}

inline std::optional<Measure> measure_from_name(const std::string& name) noexcept {
  if (name == "shannon") return Measure::shannon;
  if (name == "deng") return Measure::deng;
  if (name == "fb") return Measure::fb;
  if (name == "tfb") return Measure::tfb;
  return std::nullopt;
}

/// One named measure value for one BPA. k is present exactly for TFB.
struct EntropyReport {
  Measure measure;
  double value;
  std::optional<int> k;
  std::string bpa_digest;
};

inline EntropyReport make_entropy_report(const MassFunction& m, Measure measure,
                                         std::optional<int> k = std::nullopt) {
  double value = 0.0;
  switch (measure) {
    case Measure::shannon: value = shannon_of_focal_masses(m); break;
    case Measure::deng: value = deng_entropy(m); break;
    case Measure::fb: value = fb_entropy(m); break;
    case Measure::tfb:
      if (!k) throw Error(Errc::invalid_order, "TFB requires an order k");
      value = tfb_entropy(m, *k);
      break;
  }
  return EntropyReport{measure, value,
                       measure == Measure::tfb ? k : std::nullopt,
                       bpa_digest(m)};
}

}  // namespace belief
