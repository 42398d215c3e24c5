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

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "belief/mass_function.hpp"

namespace belief {

/// Parses the BPA interchange document:
///   {"frame": ["A","B"], "masses": {"A": 0.2, "B": 0.2, "A,B": 0.6}}
/// Subset keys are comma-joined labels, order-insensitive. The result is
/// validated; any axiom violation is thrown as an Error.
inline MassFunction parse_bpa(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::malformed_document, e.what());
  }
  if (!doc.is_object() || !doc.contains("frame") || !doc.contains("masses")) {
    throw Error(Errc::malformed_document,
                "expected an object with \"frame\" and \"masses\"");
  }
  if (!doc["frame"].is_array()) {
    throw Error(Errc::malformed_document, "\"frame\" must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& item : doc["frame"]) {
    if (!item.is_string()) {
      throw Error(Errc::malformed_document, "frame labels must be strings");
    }
    labels.push_back(item.get<std::string>());
  }
  const Frame frame = make_frame(std::move(labels));

  if (!doc["masses"].is_object()) {
    throw Error(Errc::malformed_document, "\"masses\" must be an object");
  }
  MassFunction m(frame);
  std::set<std::uint64_t> seen;
  for (const auto& [key, value] : doc["masses"].items()) {
    const FocalElement f = frame.parse_subset(key);
    if (!seen.insert(f.bits()).second) {
      throw Error(Errc::duplicate_subset,
                  "subset '" + key + "' duplicates '" + frame.subset_name(f) + "'");
    }
    if (!value.is_number()) {
      throw Error(Errc::malformed_document,
                  "mass of '" + key + "' must be a number");
    }
    m.set(f, value.get<double>());
  }
  require_valid(m);
  return m;
}

/// Canonical serialization: frame order preserved, subset keys in ascending
/// bitmask order and rendered in frame order, masses at full precision.
/// parse_bpa(serialize_bpa(m)) == m for every valid m.
inline std::string serialize_bpa(const MassFunction& m) {
  nlohmann::ordered_json doc;
  doc["frame"] = m.frame().labels();
  nlohmann::ordered_json masses = nlohmann::ordered_json::object();
  for (const auto& [f, mass] : m.entries()) {
    masses[m.frame().subset_name(f)] = mass;
  }
  doc["masses"] = std::move(masses);
  return doc.dump();
}

inline MassFunction load_bpa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::malformed_document, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bpa(buffer.str());
}

}  // namespace belief
