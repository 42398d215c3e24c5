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
#include <map>
#include <string>
#include <vector>

#include "belief/format.hpp"
#include "belief/mass_function.hpp"
#include "belief/powers.hpp"

namespace belief {

/// Hard cap on the number of terms any split round may hold.
inline constexpr std::int64_t kMaxTreeLeaves = 10'000'000;

/// Number of leaves a cardinality-a focal element owns after k split rounds,
/// (k+1)^a - k^a. Exact integers only; throws Overflow past 63 bits, in which
/// case callers fall back to log2_leaf_count.
inline std::int64_t leaf_count(int cardinality, int k) {
  if (cardinality < 1) throw std::invalid_argument("cardinality must be >= 1");
  if (k < 1) throw Error(Errc::invalid_order, "split order k must be >= 1");
  if (const auto exact = ipow_diff(std::int64_t{k} + 1, cardinality)) {
    return *exact;
  }
  throw Error(Errc::overflow, "leaf count (k+1)^a - k^a exceeds 63-bit range for a=" +
                                  std::to_string(cardinality) +
                                  ", k=" + std::to_string(k));
}

/// log2 of the leaf count; never overflows.
inline double log2_leaf_count(int cardinality, int k) {
  if (cardinality < 1) throw std::invalid_argument("cardinality must be >= 1");
  if (k < 1) throw Error(Errc::invalid_order, "split order k must be >= 1");
  return log2_ipow_diff(std::int64_t{k} + 1, cardinality);
}

/// One term of a leaf multiset. Repeated subsets from different split moments
/// are distinct terms and are never merged (the split masses are non-additive).
struct LeafTerm {
  FocalElement subset;
  double mass;
  FocalElement origin;  // the focal element of the original BPA this came from
};

struct LeafMultiset {
  std::vector<LeafTerm> terms;

  double total_mass() const noexcept {
    double sum = 0.0;
    for (const LeafTerm& t : terms) sum += t.mass;
    return sum;
  }
};

struct RootTerm {
  FocalElement subset;
  double mass;
};

/// Result of k rounds of power-set splitting. rounds[r-1] holds the multiset
/// after round r: every multi-element leaf of the previous round replaced by
/// all its nonempty subsets, singleton leaves untouched. Round r distributes
/// each origin's BPA mass uniformly over that origin's round-r leaves, so each
/// round carries the root's total mass.
struct SplitTree {
  std::vector<RootTerm> root_terms;
  std::vector<LeafMultiset> rounds;
};

namespace detail {

struct ShapeTerm {
  FocalElement subset;
  FocalElement origin;
};

// Replaces every multi-element term by its nonempty subsets; guards size first.
inline std::vector<ShapeTerm> expand_round(const std::vector<ShapeTerm>& current) {
  std::int64_t predicted = 0;
  for (const ShapeTerm& t : current) {
    const int card = t.subset.cardinality();
    if (card > 24) {
      throw Error(Errc::tree_too_large,
                  "splitting a cardinality-" + std::to_string(card) +
                      " focal element exceeds the leaf cap");
    }
    predicted += card == 1 ? 1 : (std::int64_t{1} << card) - 1;
    if (predicted > kMaxTreeLeaves) {
      throw Error(Errc::tree_too_large,
                  "split round would exceed " + std::to_string(kMaxTreeLeaves) +
                      " leaves");
    }
  }
  std::vector<ShapeTerm> next;
  next.reserve(static_cast<std::size_t>(predicted));
  for (const ShapeTerm& t : current) {
    if (t.subset.is_singleton()) {
      next.push_back(t);
      continue;
    }
    for (const FocalElement sub : subsets_of(t.subset)) {
      next.push_back({sub, t.origin});
    }
  }
  return next;
}

}  // namespace detail

inline SplitTree build_split_tree(const MassFunction& m, int k) {
  require_valid(m);
  if (k < 1) throw Error(Errc::invalid_order, "split order k must be >= 1");

  SplitTree tree;
  std::vector<detail::ShapeTerm> shapes;
  for (const auto& [f, mass] : m.entries()) {
    if (mass <= 0.0) continue;
    tree.root_terms.push_back({f, mass});
    shapes.push_back({f, f});
  }

  for (int round = 1; round <= k; ++round) {
    shapes = detail::expand_round(shapes);

    // Uniform division: this round's leaves of each origin share its BPA mass.
    std::map<FocalElement, std::int64_t> origin_counts;
    for (const detail::ShapeTerm& t : shapes) ++origin_counts[t.origin];

    LeafMultiset multiset;
    multiset.terms.reserve(shapes.size());
    for (const detail::ShapeTerm& t : shapes) {
      const double mass =
          m.mass_of(t.origin) / static_cast<double>(origin_counts[t.origin]);
      multiset.terms.push_back({t.subset, mass, t.origin});
    }
    tree.rounds.push_back(std::move(multiset));
  }
  return tree;
}

/// Shannon entropy of the round-k leaf masses, treated as one flat
/// distribution. Enumerates the tree explicitly; this is the independent
/// oracle for the closed-form tfb_entropy.
inline double split_tree_entropy(const MassFunction& m, int k) {
  const SplitTree tree = build_split_tree(m, k);
  double acc = 0.0;
  for (const LeafTerm& t : tree.rounds.back().terms) {
    if (t.mass > 0.0) acc += t.mass * std::log2(t.mass);
  }
  return 0.0 - acc;
}

struct DengVolumeStep {
  int iteration;
  double value;
};

struct DengVolumeResult {
  std::vector<DengVolumeStep> sequence;
  /// False when max_iter was reached while the increase was still >= epsilon.
  bool converged = false;

  double final_value() const { return sequence.back().value; }
};

/// Deng's iterative information volume. Iteration 1 scores the BPA itself;
/// each later iteration replaces every multi-element leaf (S, w) by terms
/// (T, w * (2^|T|-1)/(3^|S|-2^|S|)) for all nonempty T in 2^S (the
/// maximum-belief-entropy proportions on S), keeps singleton leaves, and
/// scores -sum w*log2(w/(2^|subset|-1)) over all terms, repeats kept apart.
/// Stops once the increase drops below epsilon or max_iter is reached; the
/// whole sequence is returned either way.
inline DengVolumeResult deng_volume(const MassFunction& m, double epsilon = 1e-6,
                                    int max_iter = 100) {
  require_valid(m);
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

  const auto score = [](const std::vector<LeafTerm>& terms) {
    double acc = 0.0;
    for (const LeafTerm& t : terms) {
      if (t.mass <= 0.0) continue;
      acc += t.mass * (log2_ipow_diff(2, t.subset.cardinality()) -
                       std::log2(t.mass));
    }
    return acc;
  };

  std::vector<LeafTerm> leaves;
  for (const auto& [f, mass] : m.entries()) {
    if (mass > 0.0) leaves.push_back({f, mass, f});
  }

  DengVolumeResult result;
  result.sequence.push_back({1, score(leaves)});

  if (!m.has_composite_mass()) {
    // Nothing to split; the increase is 0 < epsilon immediately.
    result.converged = true;
    return result;
  }

  for (int iter = 2; iter <= max_iter; ++iter) {
    std::int64_t predicted = 0;
    for (const LeafTerm& t : leaves) {
      const int card = t.subset.cardinality();
      if (card > 24) {
        throw Error(Errc::tree_too_large, "split would exceed the leaf cap");
      }
      predicted += card == 1 ? 1 : (std::int64_t{1} << card) - 1;
      if (predicted > kMaxTreeLeaves) {
        throw Error(Errc::tree_too_large,
                    "iteration would exceed " + std::to_string(kMaxTreeLeaves) +
                        " leaf terms");
      }
    }

    std::vector<LeafTerm> next;
    next.reserve(static_cast<std::size_t>(predicted));
    for (const LeafTerm& t : leaves) {
      if (t.subset.is_singleton()) {
        next.push_back(t);
        continue;
      }
      const auto span = ipow_diff(3, t.subset.cardinality());  // 3^|S| - 2^|S|
      for (const FocalElement sub : subsets_of(t.subset)) {
        const double share =
            pow2_minus_one(sub.cardinality()) / static_cast<double>(*span);
        next.push_back({sub, t.mass * share, t.origin});
      }
    }
    leaves = std::move(next);

    const double previous = result.sequence.back().value;
    const double value = score(leaves);
    result.sequence.push_back({iter, value});
    if (value - previous < epsilon) {
      result.converged = true;
      break;
    }
  }
  return result;
}

/// CSV export of every round's multiset: origin,subset,round,mass.
inline std::string leaves_csv(const Frame& frame, const SplitTree& tree,
                              int precision = kDefaultPrecision) {
  std::string out = "origin,subset,round,mass\n";
  for (std::size_t r = 0; r < tree.rounds.size(); ++r) {
    for (const LeafTerm& t : tree.rounds[r].terms) {
      out += '"' + frame.subset_name(t.origin) + "\",\"" +
             frame.subset_name(t.subset) + "\"," + std::to_string(r + 1) + ',' +
             format_fixed(t.mass, precision) + '\n';
    }
  }
  return out;
}

}  // namespace belief
