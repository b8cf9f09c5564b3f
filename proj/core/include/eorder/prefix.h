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

// Finite listing prefixes and the enumeration-order comparisons between them.
//
// A listing enumerates an infinite set of naturals without repetition; the
// library only ever sees a finite initial segment of one. Two prefixes of
// equal length are compared position by position: f reduces to g when every
// position pair that f enumerates out of order is also out of order in g.
//
// Positions are 1-based throughout, naturals start at 1.

#ifndef EORDER_PREFIX_H_
#define EORDER_PREFIX_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace eorder {

using Natural = std::uint64_t;
// 1-based index into a prefix.
using Position = std::size_t;

struct PositionPair {
  Position first = 0;
  Position second = 0;

  friend auto operator<=>(const PositionPair&, const PositionPair&) = default;
};

// An initial segment of a listing: pairwise distinct naturals, each >= 1.
class PrefixListing {
 public:
  PrefixListing() = default;

  // Throws Error(kDuplicateValue) or Error(kZeroValue).
  static PrefixListing Make(std::vector<Natural> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // Value at 1-based position `i`; `i` must be in [1, size()].
  Natural operator()(Position i) const { return values_[i - 1]; }
  Natural at(Position i) const;

  std::span<const Natural> values() const { return values_; }

  // The first min(k, size()) values.
  PrefixListing Take(std::size_t k) const;

  std::set<Natural> ValueSet() const;

  friend bool operator==(const PrefixListing&, const PrefixListing&) = default;

 private:
  explicit PrefixListing(std::vector<Natural> values)
      : values_(std::move(values)) {}

  std::vector<Natural> values_;
};

// Position pairs (i, j), i < j, enumerated out of order. Kept sorted.
class InversionSet {
 public:
  InversionSet() = default;
  explicit InversionSet(std::vector<PositionPair> pairs);

  std::span<const PositionPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool Contains(PositionPair p) const;
  bool IsSubsetOf(const InversionSet& other) const;

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

 private:
  std::vector<PositionPair> pairs_;
};

// Rank of each prefix value among the prefix values; a permutation of 1..n.
class Pattern {
 public:
  Pattern() = default;

  // Throws Error(kBadPattern) unless `ranks` is a permutation of 1..n.
  static Pattern FromRanks(std::vector<std::size_t> ranks);

  std::size_t size() const { return ranks_.size(); }
  std::size_t operator()(Position i) const { return ranks_[i - 1]; }
  std::span<const std::size_t> ranks() const { return ranks_; }

  // The pattern read as a prefix over {1..n}.
  PrefixListing AsPrefix() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  explicit Pattern(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {}

  std::vector<std::size_t> ranks_;
};

class ReducibilityVerdict {
 public:
  static ReducibilityVerdict Holds() { return ReducibilityVerdict(); }
  static ReducibilityVerdict FailsAt(Position i, Position j) {
    return ReducibilityVerdict(PositionPair{i, j});
  }

  bool holds() const { return !witness_.has_value(); }
  // Least violating pair, lexicographically, when the reduction fails.
  const std::optional<PositionPair>& witness() const { return witness_; }

  friend bool operator==(const ReducibilityVerdict&,
                         const ReducibilityVerdict&) = default;

 private:
  ReducibilityVerdict() = default;
  explicit ReducibilityVerdict(PositionPair w) : witness_(w) {}

  std::optional<PositionPair> witness_;
};

// A finite stand-in for an infinite set: the elements of the set that are
// <= bound. Membership questions above the bound are undecided.
class SetSample {
 public:
  SetSample() = default;

  // Throws Error(kZeroValue) on a 0 element, Error(kBadBound) when an element
  // exceeds `bound`.
  static SetSample Make(std::set<Natural> elements, Natural bound);

  const std::set<Natural>& elements() const { return elements_; }
  Natural bound() const { return bound_; }
  std::size_t size() const { return elements_.size(); }
  bool Contains(Natural x) const { return elements_.contains(x); }

  friend bool operator==(const SetSample&, const SetSample&) = default;

 private:
  SetSample(std::set<Natural> elements, Natural bound)
      : elements_(std::move(elements)), bound_(bound) {}

  std::set<Natural> elements_;
  Natural bound_ = 0;
};

InversionSet Inversions(const PrefixListing& p);

Pattern Standardize(const PrefixListing& p);

// Throws Error(kLengthMismatch) when the lengths differ.
ReducibilityVerdict LeqEo(const PrefixListing& f, const PrefixListing& g);
bool EquivEo(const PrefixListing& f, const PrefixListing& g);

PrefixListing AscendingListing(const SetSample& s);

}  // namespace eorder

#endif  // EORDER_PREFIX_H_
