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
#include <cstdint>
#include <random>
#include <vector>

#include "belief/mass_function.hpp"

namespace belief {

namespace detail {

// Exponential spacings drawn from raw mt19937_64 output, so results are
// identical across standard libraries. u lies in (0, 1).
inline double exp_variate(std::mt19937_64& engine) {
  const double u = (static_cast<double>(engine() >> 11) + 0.5) * 0x1p-53;
  return -std::log(u);
}

}  // namespace detail

/// Uniform (flat Dirichlet) BPA over all 2^n - 1 subsets, deterministic per
/// seed. Exponential variates normalized by their sum land uniformly on the
/// probability simplex.
inline MassFunction random_bpa(const Frame& frame, std::uint64_t seed) {
  if (frame.size() > 16) {
    throw Error(Errc::frame_too_large,
                "random_bpa materializes 2^n - 1 masses; n is capped at 16");
  }
  std::mt19937_64 engine(seed);
  std::vector<double> raw;
  raw.reserve(frame.full_mask());
  double sum = 0.0;
  for (std::uint64_t bits = 1; bits <= frame.full_mask(); ++bits) {
    raw.push_back(detail::exp_variate(engine));
    sum += raw.back();
  }
  MassFunction m(frame);
  for (std::uint64_t bits = 1; bits <= frame.full_mask(); ++bits) {
    m.set(FocalElement(bits), raw[bits - 1] / sum);
  }
  return m;
}

/// Same sampler restricted to singletons: a random probability distribution.
inline MassFunction random_bayesian_bpa(const Frame& frame, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<double> raw;
  raw.reserve(frame.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    raw.push_back(detail::exp_variate(engine));
    sum += raw.back();
  }
  MassFunction m(frame);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    m.set(frame.singleton(i), raw[i] / sum);
  }
  return m;
}

}  // namespace belief
