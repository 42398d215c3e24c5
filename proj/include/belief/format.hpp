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

#include <cstdio>
#include <string>

namespace belief {

inline constexpr int kDefaultPrecision = 4;

/// Fixed-point rendering with '.' as decimal separator. Adding 0.0 first
/// keeps a computed -0.0 from printing with a sign.
inline std::string format_fixed(double value, int precision = kDefaultPrecision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value + 0.0);
  return std::string(buf);
}

}  // namespace belief
