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
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "belief/errors.hpp"

namespace belief {

inline constexpr std::size_t kMaxFrameSize = 64;
inline constexpr char kLabelSeparator = ',';

/// A nonempty subset of a frame, stored as a bitmask over element indices.
/// The empty set is not representable; bit i stands for the frame's i-th label.
class FocalElement {
 public:
  explicit FocalElement(std::uint64_t bits) : bits_(bits) {
    if (bits == 0) {
      throw Error(Errc::empty_set_mass, "the empty set cannot be a focal element");
    }
  }

  std::uint64_t bits() const noexcept { return bits_; }
  int cardinality() const noexcept { return std::popcount(bits_); }
  bool is_singleton() const noexcept { return cardinality() == 1; }
  bool contains(std::size_t index) const noexcept {
    return (bits_ >> index) & std::uint64_t{1};
  }
  bool subset_of(FocalElement other) const noexcept {
    return (bits_ & other.bits()) == bits_;
  }

  friend auto operator<=>(const FocalElement&, const FocalElement&) = default;

 private:
  std::uint64_t bits_;
};

/// All nonempty subsets of f in ascending bitmask order.
/// The (s - f) & f stepping enumerates submasks in increasing numeric order.
inline std::vector<FocalElement> subsets_of(FocalElement f) {
  if (f.cardinality() > 24) {
    throw Error(Errc::frame_too_large,
                "refusing to enumerate 2^" + std::to_string(f.cardinality()) +
                    " subsets");
  }
  std::vector<FocalElement> out;
  const std::uint64_t full = f.bits();
  out.reserve((std::uint64_t{1} << f.cardinality()) - 1);
  std::uint64_t s = full & (~full + 1);
  while (true) {
    out.push_back(FocalElement(s));
    if (s == full) break;
    s = (s - full) & full;
  }
  return out;
}

/// Discernment framework: an ordered set of distinct element labels.
/// Index order is the input order and is stable for the lifetime of the frame.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
      throw Error(Errc::empty_label, "a frame needs at least one label");
    }
    if (labels_.size() > kMaxFrameSize) {
      throw Error(Errc::too_many_elements,
                  "frame has " + std::to_string(labels_.size()) +
                      " labels, capacity is " + std::to_string(kMaxFrameSize));
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const std::string& label = labels_[i];
      if (label.empty()) {
        throw Error(Errc::empty_label, "frame label " + std::to_string(i) + " is empty");
      }
      if (label.find(kLabelSeparator) != std::string::npos) {
        throw Error(Errc::reserved_character,
                    "label '" + label + "' contains the reserved separator ','");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (labels_[j] == label) {
          throw Error(Errc::duplicate_label, "label '" + label + "' appears twice");
        }
      }
    }
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }

  std::optional<std::size_t> index_of(std::string_view label) const noexcept {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return i;
    }
    return std::nullopt;
  }

  std::uint64_t full_mask() const noexcept {
    return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  }

  /// The whole frame as a focal element (Theta).
  FocalElement universe() const { return FocalElement(full_mask()); }

  FocalElement singleton(std::size_t index) const {
    if (index >= size()) throw std::out_of_range("frame index out of range");
    return FocalElement(std::uint64_t{1} << index);
  }

  bool owns(FocalElement f) const noexcept {
    return (f.bits() & ~full_mask()) == 0;
  }

  /// Canonical subset key: member labels in frame order joined by ','.
  std::string subset_name(FocalElement f) const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!f.contains(i)) continue;
      if (!out.empty()) out.push_back(kLabelSeparator);
      out += labels_[i];
    }
    return out;
  }

  /// Parses a comma-joined subset key; order-insensitive ("B,A" == "A,B").
  FocalElement parse_subset(std::string_view key) const {
    if (key.empty()) {
      throw Error(Errc::empty_set_mass, "subset key is empty");
    }
    std::uint64_t bits = 0;
    std::size_t start = 0;
    while (start <= key.size()) {
      const std::size_t end = key.find(kLabelSeparator, start);
      const std::string_view part =
          key.substr(start, end == std::string_view::npos ? key.size() - start
                                                          : end - start);
      if (part.empty()) {
        throw Error(Errc::malformed_document,
                    "empty label in subset key '" + std::string(key) + "'");
      }
      const auto index = index_of(part);
      if (!index) {
        throw Error(Errc::unknown_label, "label '" + std::string(part) +
                                             "' is not part of the frame");
      }
      bits |= std::uint64_t{1} << *index;
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return FocalElement(bits);
  }

  bool operator==(const Frame&) const = default;

 private:
  std::vector<std::string> labels_;
};

inline Frame make_frame(std::vector<std::string> labels) {
  return Frame(std::move(labels));
}

}  // namespace belief
