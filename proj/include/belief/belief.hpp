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

// Umbrella header for the whole toolkit.

#include "belief/bpa_io.hpp"
#include "belief/cross_check.hpp"
#include "belief/entropy.hpp"
#include "belief/errors.hpp"
#include "belief/format.hpp"
#include "belief/frame.hpp"
#include "belief/grid_search.hpp"
#include "belief/information_volume.hpp"
#include "belief/mass_function.hpp"
#include "belief/powers.hpp"
#include "belief/random_bpa.hpp"
#include "belief/split_tree.hpp"
