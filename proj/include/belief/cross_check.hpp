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
#include "belief/split_tree.hpp"

namespace belief {

struct CheckResult {
  std::string name;
  bool pass;
  double residual;
};

struct CrossCheckReport {
  std::vector<CheckResult> checks;

  bool all_pass() const noexcept {
    for (const CheckResult& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Runs every measure identity that holds for a valid BPA and reports
/// residuals: closed form vs split-tree oracle for k = 1..k_max, the order-1
/// Deng identity, degeneration to Shannon for Bayesian BPAs, the vacuous
/// closed form, and monotonicity in k. Failures come back as entries, never
/// as exceptions.
inline CrossCheckReport cross_check(const MassFunction& m, int k_max) {
  require_valid(m);
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");

  CrossCheckReport report;
  const auto add = [&report](std::string name, double residual, double tol) {
    report.checks.push_back({std::move(name), residual <= tol, residual});
  };

  std::vector<double> tfb(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (int k = 1; k <= k_max; ++k) tfb[static_cast<std::size_t>(k)] = tfb_entropy(m, k);

  const double deng = deng_entropy(m);
  add("order1_identity", std::abs(tfb[1] - deng), 1e-12);

  for (int k = 1; k <= k_max; ++k) {
    add("oracle_equivalence_k" + std::to_string(k),
        std::abs(tfb[static_cast<std::size_t>(k)] - split_tree_entropy(m, k)), 1e-9);
  }

  if (m.is_bayesian()) {
    const double h = shannon_of_focal_masses(m);
    add("degeneration_deng", std::abs(deng - h), 1e-12);
    add("degeneration_fb", std::abs(fb_entropy(m) - h), 1e-12);
    for (int k = 1; k <= k_max; ++k) {
      add("degeneration_tfb_k" + std::to_string(k),
          std::abs(tfb[static_cast<std::size_t>(k)] - h), 1e-12);
    }
  }

  if (m.is_vacuous()) {
    const int n = static_cast<int>(m.frame().size());
    for (int k = 1; k <= k_max; ++k) {
      add("vacuous_closed_form_k" + std::to_string(k),
          std::abs(tfb[static_cast<std::size_t>(k)] - tfb_vacuous(n, k)), 1e-12);
    }
  }

  const bool composite = m.has_composite_mass();
  for (int k = 1; k < k_max; ++k) {
    const double diff = tfb[static_cast<std::size_t>(k) + 1] - tfb[static_cast<std::size_t>(k)];
    if (composite) {
      report.checks.push_back(
          {"monotonicity_k" + std::to_string(k), diff > 0.0, diff});
    } else {
      add("monotonicity_k" + std::to_string(k), std::abs(diff), 1e-12);
    }
  }
  return report;
}

}  // namespace belief
