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

#ifndef EORDER_LISTING_ALGEBRA_H_
#define EORDER_LISTING_ALGEBRA_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "eorder/prefix.h"

namespace eorder {

// Maps listings of one set to listings of another, prefix by prefix.
// Apply() checks the declared source and target value sets and the length.
class ListingTransformer {
 public:
  using Fn = std::function<PrefixListing(const PrefixListing&)>;

  ListingTransformer(std::set<Natural> source, std::set<Natural> target, Fn fn);

  // Throws Error(kValueSetMismatch) if the input leaves the source set or the
  // output leaves the target set, Error(kLengthMismatch) if `fn` changes the
  // length.
  PrefixListing Apply(const PrefixListing& p) const;

  const std::set<Natural>& source() const { return source_; }
  const std::set<Natural>& target() const { return target_; }

 private:
  std::set<Natural> source_;
  std::set<Natural> target_;
  Fn fn_;
};

// Listings of equal length over one value set, each reducing to the one
// before it.
class Chain {
 public:
  Chain() = default;

  // Throws Error(kChainInvariantViolated, k) with k the 1-based index of the
  // first listing whose successor does not reduce to it (or whose successor
  // has a different length or value set).
  static Chain Make(std::vector<PrefixListing> listings);

  const std::vector<PrefixListing>& listings() const { return listings_; }
  std::size_t size() const { return listings_.size(); }

 private:
  explicit Chain(std::vector<PrefixListing> listings)
      : listings_(std::move(listings)) {}

  std::vector<PrefixListing> listings_;
};

// The unique position holding `v`. Throws Error(kValueAbsent, v).
Position InverseLookup(const PrefixListing& p, Natural v);

// result(i) = g_prime(position of h(i) in h_prime). When g_prime and h_prime
// share a pattern the result shares h's pattern while taking g_prime's values.
// Throws Error(kLengthMismatch) or Error(kValueSetMismatch).
PrefixListing Transport(const PrefixListing& h, const PrefixListing& h_prime,
                        const PrefixListing& g_prime);

// The transformer h -> Transport(h, h_prime, g_prime) from listings of
// h_prime's value set to listings of g_prime's.
ListingTransformer MakeTransportTransformer(PrefixListing h_prime,
                                            PrefixListing g_prime);

// Least 1-based (i, j), i < j, with identical listings; ordered by j first,
// then i. nullopt when the chain never repeats.
std::optional<PositionPair> ChainStabilize(const Chain& c);

// Reverse listing [n, ..., 1] sorted one inversion at a time by exchanging
// the positions of adjacent values, down to [1, ..., n]. Length n(n-1)/2 + 1.
Chain MakeStrictChain(std::size_t n);

}  // namespace eorder

#endif  // EORDER_LISTING_ALGEBRA_H_
