// Copyright 2026 The eorder Authors. All Rights Reserved.
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

// Exhaustive checks of the library's order-theoretic claims over every
// permutation of small n.
//
// Registry (id: what is checked, largest n accepted):
//
//   reflexive                f <=eo f                                     8
//   transitive               f <= g <= h implies f <= h, all triples      4
//   non-antisymmetric        some f != g are equivalent; reports a pair   5
//   subset-characterization  LeqEo agrees with a direct double loop and
//                            with inversion-set containment               5
//   lemma-2-3                ascending listings reduce to every listing   6
//   lemma-2-8                position bounds hold on reducible pairs      5
//   transport                transport keeps h's pattern                  4
//   stabilization            long descending chains repeat, and the
//                            least repeat is found                        5
//   class-count              pairwise-equivalence classes = patterns      6
//
// Reports are deterministic in (id, n) regardless of thread count:
// violations are sorted before returning.

#ifndef EORDER_ORACLE_H_
#define EORDER_ORACLE_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eorder/prefix.h"

namespace eorder {

struct PropertyReport {
  std::string property;
  std::size_t n = 0;
  std::uint64_t instances = 0;
  std::vector<std::string> violations;
  // Property-specific tallies, e.g. "reducible" pairs or "classes".
  std::map<std::string, std::uint64_t> counters;
  // Set by non-antisymmetric.
  std::optional<std::pair<PrefixListing, PrefixListing>> witness;
  std::chrono::nanoseconds elapsed{0};

  bool pass() const { return violations.empty(); }
};

struct PropertyInfo {
  std::string_view id;
  std::size_t max_n;
};

const std::vector<PropertyInfo>& PropertyRegistry();

struct RunOptions {
  // 0 uses the hardware concurrency.
  unsigned threads = 0;
};

// All n! permutations of 1..n in lexicographic order. Throws
// Error(kTooLarge) for n > 8.
std::vector<Pattern> AllPatterns(std::size_t n);

// Throws Error(kUnknownProperty) or Error(kTooLarge).
PropertyReport RunProperty(std::string_view id, std::size_t n,
                           const RunOptions& options = {});

// Def-level reduction check by direct double loop over raw values.
bool DirectlyReduces(std::span<const Natural> f, std::span<const Natural> g);

// Least (i, j) by (j, i) with equal sequences, by pairwise scan.
std::optional<PositionPair> ScanForRepeat(
    const std::vector<std::vector<Natural>>& chain);

}  // namespace eorder

#endif  // EORDER_ORACLE_H_
