/*
 * Copyright 2026 The fhtskew Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Convenience header pulling in the whole library.

#ifndef FHTSKEW_FHTSKEW_HPP
#define FHTSKEW_FHTSKEW_HPP

#include "fhtskew/criterion.hpp"
#include "fhtskew/detector.hpp"
#include "fhtskew/error.hpp"
#include "fhtskew/eval.hpp"
#include "fhtskew/export.hpp"
#include "fhtskew/fht.hpp"
#include "fhtskew/gray_image.hpp"
#include "fhtskew/image_io.hpp"
#include "fhtskew/raster.hpp"
#include "fhtskew/synth.hpp"
#include "fhtskew/timing.hpp"

#endif  // FHTSKEW_FHTSKEW_HPP
