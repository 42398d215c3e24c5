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
#include <string>
#include <vector>

#include "belief/entropy.hpp"
#include "belief/format.hpp"

namespace belief {

inline double evaluate_measure(Measure measure, const MassFunction& m, int k = 1) {
  switch (measure) {
    case Measure::shannon: return shannon_of_focal_masses(m);
    case Measure::deng: return deng_entropy(m);
    case Measure::fb: return fb_entropy(m);
    case Measure::tfb: return tfb_entropy(m, k);
  }
  throw std::invalid_argument("unknown measure");
}

/// Exhaustive sweep over the 2-element simplex: m(A) = x, m(B) = y,
/// m(AB) = 1 - x - y with x + y <= 1. step must divide 1.
struct GridSpec {
  Frame frame;
  double step = 0.01;
  Measure measure = Measure::tfb;
  int k = 1;
};

struct GridRow {
  double m_a;
  double m_b;
  double m_ab;
  double value;
};

struct GridResult {
  MassFunction argmax;
  double max_value;
  std::vector<GridRow> surface;
};

inline GridResult grid_search_max(const GridSpec& spec) {
  if (spec.frame.size() != 2) {
    throw std::invalid_argument("grid_search_max sweeps a 2-element frame");
  }
  if (!(spec.step > 0.0) || spec.step >= 1.0) {
    throw Error(Errc::step_invalid,
                "step " + std::to_string(spec.step) + " is not in (0, 1)");
  }
  const long long steps = std::llround(1.0 / spec.step);
  if (steps < 1 ||
      std::abs(static_cast<double>(steps) * spec.step - 1.0) > 1e-12) {
    throw Error(Errc::step_invalid,
                "step " + std::to_string(spec.step) + " does not divide 1");
  }

  const FocalElement a(0b01), b(0b10), ab(0b11);
  GridResult result{MassFunction(spec.frame), -1.0, {}};
  result.surface.reserve(static_cast<std::size_t>((steps + 1) * (steps + 2) / 2));

  // Row-major x-then-y order; first strict maximum wins, which makes the
  // tie-break the lexicographically smallest (x, y).
  for (long long i = 0; i <= steps; ++i) {
    for (long long j = 0; i + j <= steps; ++j) {
      const double x = static_cast<double>(i) / static_cast<double>(steps);
      const double y = static_cast<double>(j) / static_cast<double>(steps);
      const double z =
          static_cast<double>(steps - i - j) / static_cast<double>(steps);
      MassFunction m(spec.frame);
      m.set(a, x);
      m.set(b, y);
      m.set(ab, z);
      const double value = evaluate_measure(spec.measure, m, spec.k);
      result.surface.push_back({x, y, z, value});
      if (value > result.max_value) {
        result.max_value = value;
        result.argmax = m;
      }
    }
  }
  return result;
}

/// Surface CSV: mA,mB,mAB,value (one file per order; callers name the file).
inline std::string surface_csv(const GridResult& result,
                               int precision = kDefaultPrecision) {
  std::string out = "mA,mB,mAB,value\n";
  for (const GridRow& row : result.surface) {
    out += format_fixed(row.m_a, precision) + ',' +
           format_fixed(row.m_b, precision) + ',' +
           format_fixed(row.m_ab, precision) + ',' +
           format_fixed(row.value, precision) + '\n';
  }
  return out;
}

}  // namespace belief
