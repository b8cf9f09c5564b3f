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

#include "eorder/prefix.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "eorder/errors.h"

namespace eorder {

PrefixListing PrefixListing::Make(std::vector<Natural> values) {
  std::unordered_set<Natural> seen;
  seen.reserve(values.size());
  for (Natural v : values) {
    if (v == 0) {
      throw Error(ErrorKind::kZeroValue, "prefix values start at 1");
    }
    if (!seen.insert(v).second) {
      throw Error(ErrorKind::kDuplicateValue,
                  "value " + std::to_string(v) + " repeats", v);
    }
  }
  return PrefixListing(std::move(values));
}

Natural PrefixListing::at(Position i) const {
  if (i == 0 || i > values_.size()) {
    throw Error(ErrorKind::kPreconditionViolated,
                "position " + std::to_string(i) + " outside 1.." +
                    std::to_string(values_.size()),
                i);
  }
  return values_[i - 1];
}

PrefixListing PrefixListing::Take(std::size_t k) const {
  k = std::min(k, values_.size());
  return PrefixListing(std::vector<Natural>(values_.begin(), values_.begin() + k));
}

std::set<Natural> PrefixListing::ValueSet() const {
  return {values_.begin(), values_.end()};
}

InversionSet::InversionSet(std::vector<PositionPair> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool InversionSet::Contains(PositionPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool InversionSet::IsSubsetOf(const InversionSet& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(),
                       pairs_.begin(), pairs_.end());
}

Pattern Pattern::FromRanks(std::vector<std::size_t> ranks) {
  std::vector<bool> seen(ranks.size() + 1, false);
  for (std::size_t r : ranks) {
    if (r == 0 || r > ranks.size() || seen[r]) {
      throw Error(ErrorKind::kBadPattern,
                  "ranks must be a permutation of 1.." +
                      std::to_string(ranks.size()));
    }
    seen[r] = true;
  }
  return Pattern(std::move(ranks));
}

PrefixListing Pattern::AsPrefix() const {
  return PrefixListing::Make({ranks_.begin(), ranks_.end()});
}

InversionSet Inversions(const PrefixListing& p) {
  std::vector<PositionPair> pairs;
  const std::size_t n = p.size();
  for (Position i = 1; i <= n; ++i) {
    for (Position j = i + 1; j <= n; ++j) {
      if (p(i) > p(j)) pairs.push_back({i, j});
    }
  }
  return InversionSet(std::move(pairs));
}

Pattern Standardize(const PrefixListing& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.values()[a] < p.values()[b];
  });
  std::vector<std::size_t> ranks(n);
  for (std::size_t r = 0; r < n; ++r) ranks[order[r]] = r + 1;
  return Pattern::FromRanks(std::move(ranks));
}

ReducibilityVerdict LeqEo(const PrefixListing& f, const PrefixListing& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "prefix lengths " + std::to_string(f.size()) + " and " +
                    std::to_string(g.size()) + " differ");
  }
  const std::size_t n = f.size();
  for (Position i = 1; i <= n; ++i) {
    for (Position j = i + 1; j <= n; ++j) {
      if (f(i) > f(j) && g(i) < g(j)) {
        return ReducibilityVerdict::FailsAt(i, j);
      }
    }
  }
  return ReducibilityVerdict::Holds();
}

bool EquivEo(const PrefixListing& f, const PrefixListing& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "prefix lengths " + std::to_string(f.size()) + " and " +
                    std::to_string(g.size()) + " differ");
  }
  return Standardize(f) == Standardize(g);
}

SetSample SetSample::Make(std::set<Natural> elements, Natural bound) {
  if (elements.contains(0)) {
    throw Error(ErrorKind::kZeroValue, "set elements start at 1");
  }
  if (!elements.empty() && *elements.rbegin() > bound) {
    throw Error(ErrorKind::kBadBound,
                "element " + std::to_string(*elements.rbegin()) +
                    " exceeds bound " + std::to_string(bound),
                *elements.rbegin());
  }
  return SetSample(std::move(elements), bound);
}

PrefixListing AscendingListing(const SetSample& s) {
  return PrefixListing::Make({s.elements().begin(), s.elements().end()});
}

}  // namespace eorder
