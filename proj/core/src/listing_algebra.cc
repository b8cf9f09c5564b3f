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

#include "eorder/listing_algebra.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "eorder/errors.h"

namespace eorder {

namespace {

bool WithinSet(std::span<const Natural> values, const std::set<Natural>& s) {
  return std::all_of(values.begin(), values.end(),
                     [&](Natural v) { return s.contains(v); });
}

void RequireSameLength(const PrefixListing& a, const PrefixListing& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "prefix lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " differ");
  }
}

}  // namespace

ListingTransformer::ListingTransformer(std::set<Natural> source,
                                       std::set<Natural> target, Fn fn)
    : source_(std::move(source)), target_(std::move(target)), fn_(std::move(fn)) {}

PrefixListing ListingTransformer::Apply(const PrefixListing& p) const {
  if (!WithinSet(p.values(), source_)) {
    throw Error(ErrorKind::kValueSetMismatch,
                "input listing leaves the transformer's source set");
  }
  PrefixListing out = fn_(p);
  RequireSameLength(p, out);
  if (!WithinSet(out.values(), target_)) {
    throw Error(ErrorKind::kValueSetMismatch,
                "output listing leaves the transformer's target set");
  }
  return out;
}

Chain Chain::Make(std::vector<PrefixListing> listings) {
  for (std::size_t k = 0; k + 1 < listings.size(); ++k) {
    const PrefixListing& cur = listings[k];
    const PrefixListing& next = listings[k + 1];
    const std::string where = "between listings " + std::to_string(k + 1) +
                              " and " + std::to_string(k + 2);
    if (cur.size() != next.size()) {
      throw Error(ErrorKind::kChainInvariantViolated, "length changes " + where,
                  k + 1);
    }
    if (cur.ValueSet() != next.ValueSet()) {
      throw Error(ErrorKind::kChainInvariantViolated,
                  "value set changes " + where, k + 1);
    }
    if (!LeqEo(next, cur).holds()) {
      throw Error(ErrorKind::kChainInvariantViolated,
                  "listing " + std::to_string(k + 2) +
                      " does not reduce to listing " + std::to_string(k + 1),
                  k + 1);
    }
  }
  return Chain(std::move(listings));
}

Position InverseLookup(const PrefixListing& p, Natural v) {
  const auto values = p.values();
  const auto it = std::find(values.begin(), values.end(), v);
  if (it == values.end()) {
    throw Error(ErrorKind::kValueAbsent,
                "value " + std::to_string(v) + " does not occur in the prefix",
                v);
  }
  return static_cast<Position>(it - values.begin()) + 1;
}

PrefixListing Transport(const PrefixListing& h, const PrefixListing& h_prime,
                        const PrefixListing& g_prime) {
  RequireSameLength(h, h_prime);
  RequireSameLength(h, g_prime);
  if (h.ValueSet() != h_prime.ValueSet()) {
    throw Error(ErrorKind::kValueSetMismatch,
                "h and h_prime enumerate different values");
  }
  std::unordered_map<Natural, Position> position_in_h_prime;
  position_in_h_prime.reserve(h_prime.size());
  for (Position i = 1; i <= h_prime.size(); ++i) {
    position_in_h_prime.emplace(h_prime(i), i);
  }
  std::vector<Natural> out;
  out.reserve(h.size());
  for (Position i = 1; i <= h.size(); ++i) {
    out.push_back(g_prime(position_in_h_prime.at(h(i))));
  }
  return PrefixListing::Make(std::move(out));
}

ListingTransformer MakeTransportTransformer(PrefixListing h_prime,
                                            PrefixListing g_prime) {
  std::set<Natural> source = h_prime.ValueSet();
  std::set<Natural> target = g_prime.ValueSet();
  return ListingTransformer(
      std::move(source), std::move(target),
      [h_prime = std::move(h_prime),
       g_prime = std::move(g_prime)](const PrefixListing& h) {
        return Transport(h, h_prime, g_prime);
      });
}

std::optional<PositionPair> ChainStabilize(const Chain& c) {
  const auto& ls = c.listings();
  for (std::size_t j = 1; j < ls.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (ls[i] == ls[j]) return PositionPair{i + 1, j + 1};
    }
  }
  return std::nullopt;
}

Chain MakeStrictChain(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorKind::kPreconditionViolated, "chain size must be >= 1");
  }
  std::vector<Natural> cur(n);
  std::iota(cur.rbegin(), cur.rend(), Natural{1});
  // where[v] = 0-based position of value v.
  std::vector<std::size_t> where(n + 1);
  for (std::size_t i = 0; i < n; ++i) where[cur[i]] = i;

  std::vector<PrefixListing> listings;
  listings.reserve(n * (n - 1) / 2 + 1);
  listings.push_back(PrefixListing::Make(cur));
  for (;;) {
    // Smallest v with v + 1 enumerated before v; exchanging them removes
    // exactly the inversion between their two positions.
    Natural v = 1;
    while (v < n && where[v + 1] > where[v]) ++v;
    if (v == n) break;
    std::swap(cur[where[v]], cur[where[v + 1]]);
    std::swap(where[v], where[v + 1]);
    listings.push_back(PrefixListing::Make(cur));
  }
  return Chain::Make(std::move(listings));
}

}  // namespace eorder
