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

// Reading set structure back out of enumeration orders.
//
// Two listings that enumerate in the same order leak information about each
// other's sets. The central case is a pair (f, g) where f lists B = A + {m}
// starting with m, g lists A, and both share one pattern: the element of rank
// k in A sits where f holds the element of rank k in B, which is the
// predecessor of the A element. Iterating that map walks A downward, so every
// element of A below a known member can be listed, deciding membership.

#ifndef EORDER_EXTRACTION_H_
#define EORDER_EXTRACTION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "eorder/prefix.h"

namespace eorder {

// The value set of a prefix, sorted ascending.
class AscendingView {
 public:
  explicit AscendingView(const PrefixListing& p);

  std::size_t size() const { return sorted_.size(); }
  // 1-based: a_1 < a_2 < ... < a_n.
  Natural operator()(std::size_t k) const { return sorted_[k - 1]; }
  std::span<const Natural> values() const { return sorted_; }

 private:
  std::vector<Natural> sorted_;
};

struct LeastPositionClause {
  Position fpos = 0;
  Position gpos = 0;
  bool holds = false;

  friend bool operator==(const LeastPositionClause&,
                         const LeastPositionClause&) = default;
};

struct RankPositionClause {
  std::size_t i = 0;
  // All smaller ranks sit at equal positions in f and g.
  bool premise_held = false;
  Position fpos = 0;
  Position gpos = 0;
  // Vacuously true when the premise fails.
  bool holds = false;

  friend bool operator==(const RankPositionClause&,
                         const RankPositionClause&) = default;
};

// Compares where f and g place their k-th smallest values, f <=eo g.
struct PositionBoundReport {
  LeastPositionClause least;
  std::vector<RankPositionClause> by_rank;  // ranks 2..n

  bool AllHold() const;
};

// For f <=eo g with ascending views a and b:
//   f^-1(a_1) <= g^-1(b_1), and
//   for i > 1, if f^-1(a_j) = g^-1(b_j) for all j < i then f^-1(a_i) <=
//   g^-1(b_i).
// These always hold; a false clause signals a broken precondition upstream.
// Throws Error(kLengthMismatch), or Error(kPreconditionViolated) when f does
// not reduce to g. Empty prefixes yield a report with an unset `least`
// clause marked as holding.
PositionBoundReport CheckPositionBounds(const PrefixListing& f,
                                        const PrefixListing& g);

// f lists B = A + {m} from m; g lists A; ranks of f(i) in B and g(i) in A
// agree at every position. A is taken to be g's value set.
class PairedListings {
 public:
  // Validates every invariant; throws Error(kInvalidPairing) naming the
  // first violated one.
  static PairedListings Make(PrefixListing f, PrefixListing g, Natural m);

  const PrefixListing& f() const { return f_; }
  const PrefixListing& g() const { return g_; }
  Natural m() const { return m_; }

 private:
  PairedListings(PrefixListing f, PrefixListing g, Natural m)
      : f_(std::move(f)), g_(std::move(g)), m_(m) {}

  PrefixListing f_;
  PrefixListing g_;
  Natural m_;
};

// Builds the pairing whose common pattern is `pattern`: g(i) is the element
// of A with rank pattern(i), f(i) the element of A + {m} with that rank.
// Requires pattern(1) = 1 (so f starts with m) and pattern length |A|.
// Throws Error(kBadPattern) or Error(kBadExtra).
PairedListings MakePaired(const SetSample& a_sample, Natural m,
                          const Pattern& pattern);

// f(g^-1(a)): the largest element of A below `a`, or m below min(A).
// Throws Error(kValueAbsent).
Natural Predecessor(const PairedListings& p, Natural a);

// Elements of A below `a`, descending, found by iterating Predecessor until m.
// Throws Error(kValueAbsent) if `a` is not in g, Error(kInsufficientPrefix)
// when a step lands on a value g has not enumerated.
std::vector<Natural> DescentChain(const PairedListings& p, Natural a);

enum class Membership { kInA, kNotInA, kInsufficientPrefix };

struct MembershipDecision {
  Membership result = Membership::kInsufficientPrefix;
  // The descent from the least enumerated element above x, when one was used.
  std::vector<Natural> descent;
};

// Throws Error(kPreconditionViolated) for x = 0.
MembershipDecision DecideMembership(const PairedListings& p, Natural x);

// The n + 1 finite variants (A - {k..n}) + {1..k-1}, k = 1..n+1. Each keeps
// the sample's bound. Throws Error(kBadBound) when bound < n.
std::vector<SetSample> FiniteVariantFamily(const SetSample& a_sample,
                                           std::size_t n);

}  // namespace eorder

#endif  // EORDER_EXTRACTION_H_
