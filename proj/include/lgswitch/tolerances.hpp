// Copyright 2026 The lgswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace lgsw {

// All numerical tolerances used by the library live here.
struct Tolerances {
  // Single algebraic identities (Hermiticity, idempotency, normalization).
  static constexpr double identity = 1e-12;
  // Results that pass through several chained products (interferometer,
  // three-time tables, cross-route comparisons).
  static constexpr double pipeline = 1e-10;
  // Relative truncation threshold for the exponential series.
  static constexpr double series = 1e-14;
  // Below this magnitude an overlap is treated as zero.
  static constexpr double overlap = 1e-12;
};

}  // namespace lgsw
