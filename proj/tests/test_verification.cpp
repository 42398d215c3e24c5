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
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "belief/cross_check.hpp"
#include "belief/grid_search.hpp"
#include "belief/information_volume.hpp"
#include "belief/random_bpa.hpp"
#include "helpers.hpp"

using namespace belief;
using test_helpers::frame_n;
using test_helpers::thrown_code;

TEST_CASE("random_bpa is deterministic per seed and always valid") {
  const Frame f = frame_n(3);
  const MassFunction first = random_bpa(f, 42);
  const MassFunction second = random_bpa(f, 42);
  CHECK(first == second);
  CHECK(random_bpa(f, 43).entries() != first.entries());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(validate(random_bpa(f, seed)).ok());
    CHECK(validate(random_bayesian_bpa(f, seed)).ok());
  }
  CHECK(thrown_code([] { random_bpa(frame_n(17), 1); }) == Errc::frame_too_large);
}

TEST_CASE("random_bpa sampler is flat: mean mass near 1/7 on n = 3") {
  const Frame f = frame_n(3);
  std::map<FocalElement, double> sums;
  const int trials = 1000;
  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(trials); ++seed) {
    const MassFunction m = random_bpa(f, seed);
    for (const auto& [fe, mass] : m.entries()) {
      sums[fe] += mass;
    }
  }
  REQUIRE(sums.size() == 7);
  for (const auto& [fe, sum] : sums) {
    CHECK(std::abs(sum / trials - 1.0 / 7) <= 0.01);
  }
}

TEST_CASE("random_bayesian_bpa puts mass on singletons only") {
  const Frame f = frame_n(4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const MassFunction m = random_bayesian_bpa(f, seed);
    CHECK(m.is_bayesian());
    CHECK(m.entries().size() == 4);
  }
}

TEST_CASE("grid search finds the order-1 maximizer") {
  const GridResult result =
      grid_search_max({make_frame({"A", "B"}), 0.01, Measure::tfb, 1});
  CHECK(result.max_value == doctest::Approx(std::log2(5.0)).epsilon(1e-9));
  const Frame& f = result.argmax.frame();
  CHECK(result.argmax.mass_of(f.parse_subset("A")) == doctest::Approx(0.20).epsilon(1e-12));
  CHECK(result.argmax.mass_of(f.parse_subset("B")) == doctest::Approx(0.20).epsilon(1e-12));
  CHECK(result.surface.size() == 5151);  // (101 * 102) / 2 points
}

TEST_CASE("grid search argmax tracks the closed-form maximizer at order 3") {
  const GridResult result =
      grid_search_max({make_frame({"A", "B"}), 0.01, Measure::tfb, 3});
  const Frame& f = result.argmax.frame();
  // analytic maximizer: m(A) = m(B) = 1/9, m(AB) = 7/9
  CHECK(std::abs(result.argmax.mass_of(f.parse_subset("A")) - 1.0 / 9) <= 0.01);
  CHECK(std::abs(result.argmax.mass_of(f.parse_subset("A,B")) - 7.0 / 9) <= 0.02);
  CHECK(result.max_value <= hoivmf_value(2, 3) + 1e-12);
}

TEST_CASE("grid search with the shannon measure peaks at the uniform point") {
  const GridResult result =
      grid_search_max({make_frame({"A", "B"}), 0.01, Measure::shannon, 1});
  const Frame& f = result.argmax.frame();
  CHECK(std::abs(result.argmax.mass_of(f.parse_subset("A")) - 1.0 / 3) <= 0.01);
  CHECK(std::abs(result.argmax.mass_of(f.parse_subset("B")) - 1.0 / 3) <= 0.01);
  CHECK(result.max_value <= std::log2(3.0) + 1e-12);
  CHECK(result.max_value >= std::log2(3.0) - 1e-3);
}

TEST_CASE("surfaces are exactly symmetric in m(A) and m(B)") {
  for (const Measure measure : {Measure::shannon, Measure::deng, Measure::fb,
                                Measure::tfb}) {
    const GridResult result =
        grid_search_max({make_frame({"A", "B"}), 0.05, measure, 2});
    std::map<std::pair<long, long>, double> by_coordinate;
    for (const GridRow& row : result.surface) {
      by_coordinate[{std::lround(row.m_a * 20), std::lround(row.m_b * 20)}] =
          row.value;
    }
    for (const auto& [coords, value] : by_coordinate) {
      const auto mirrored = by_coordinate.find({coords.second, coords.first});
      REQUIRE(mirrored != by_coordinate.end());
      CHECK(value == mirrored->second);  // bit-for-bit
    }
  }
}

TEST_CASE("grid step must divide 1") {
  const Frame f = make_frame({"A", "B"});
  CHECK(thrown_code([&] { grid_search_max({f, 0.03, Measure::deng, 1}); }) ==
        Errc::step_invalid);
  CHECK(thrown_code([&] { grid_search_max({f, 0.0, Measure::deng, 1}); }) ==
        Errc::step_invalid);
  CHECK(thrown_code([&] { grid_search_max({f, -0.1, Measure::deng, 1}); }) ==
        Errc::step_invalid);
  CHECK(thrown_code([&] { grid_search_max({f, 1.0, Measure::deng, 1}); }) ==
        Errc::step_invalid);
  // the coarsest legal sweep
  const GridResult coarse = grid_search_max({f, 0.5, Measure::deng, 1});
  CHECK(coarse.surface.size() == 6);
}

TEST_CASE("cross_check passes for the documented BPAs") {
  const Frame f = make_frame({"A", "B"});

  const auto reference = make_bpa(f, {{"A", 0.2}, {"B", 0.2}, {"A,B", 0.6}});
  const CrossCheckReport report = cross_check(reference, 4);
  CHECK(report.all_pass());
  CHECK(!report.checks.empty());

  const auto bayesian = make_bpa(f, {{"A", 0.3}, {"B", 0.7}});
  const CrossCheckReport bayes_report = cross_check(bayesian, 4);
  CHECK(bayes_report.all_pass());
  bool saw_degeneration = false;
  for (const CheckResult& c : bayes_report.checks) {
    if (c.name.rfind("degeneration", 0) == 0) {
      saw_degeneration = true;
      CHECK(c.residual == 0.0);
    }
  }
  CHECK(saw_degeneration);

  MassFunction vacuous(f);
  vacuous.set(f.universe(), 1.0);
  const CrossCheckReport vac_report = cross_check(vacuous, 4);
  CHECK(vac_report.all_pass());
  bool saw_vacuous = false;
  for (const CheckResult& c : vac_report.checks) {
    if (c.name.rfind("vacuous_closed_form", 0) == 0) saw_vacuous = true;
  }
  CHECK(saw_vacuous);
}

TEST_CASE("no sampled BPA beats the closed-form maximum (n >= 3)") {
  // full grids are exponential past n = 2; falsification by sampling instead
  for (const int n : {3, 4}) {
    const Frame f = frame_n(n);
    for (const int k : {1, 3}) {
      const double bound = hoivmf_value(n, k);
      for (std::uint64_t seed = 0; seed < 25000; ++seed) {
        CHECK(tfb_entropy(random_bpa(f, seed), k) <= bound + 1e-12);
      }
    }
  }
}

TEST_CASE("cross_check holds over random BPAs") {
  for (const int n : {2, 3}) {
    const Frame f = frame_n(n);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      CHECK(cross_check(random_bpa(f, seed), 4).all_pass());
    }
  }
}
