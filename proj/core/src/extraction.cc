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

#include "eorder/extraction.h"

#include <algorithm>
#include <string>

#include "eorder/errors.h"
#include "eorder/listing_algebra.h"

namespace eorder {

namespace {

// 1-based rank of v in a sorted vector that contains it.
std::size_t RankIn(const std::vector<Natural>& sorted, Natural v) {
  return static_cast<std::size_t>(
             std::lower_bound(sorted.begin(), sorted.end(), v) -
             sorted.begin()) +
         1;
}

[[noreturn]] void InvalidPairing(const std::string& what) {
  throw Error(ErrorKind::kInvalidPairing, what);
}

}  // namespace

AscendingView::AscendingView(const PrefixListing& p)
    : sorted_(p.values().begin(), p.values().end()) {
  std::sort(sorted_.begin(), sorted_.end());
}

bool PositionBoundReport::AllHold() const {
  return least.holds &&
         std::all_of(by_rank.begin(), by_rank.end(),
                     [](const RankPositionClause& c) { return c.holds; });
}

PositionBoundReport CheckPositionBounds(const PrefixListing& f,
                                        const PrefixListing& g) {
  if (!LeqEo(f, g).holds()) {
    throw Error(ErrorKind::kPreconditionViolated, "f does not reduce to g");
  }
  PositionBoundReport report;
  const std::size_t n = f.size();
  if (n == 0) {
    report.least.holds = true;
    return report;
  }
  const AscendingView a(f);
  const AscendingView b(g);
  std::vector<Position> fpos(n + 1), gpos(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    fpos[k] = InverseLookup(f, a(k));
    gpos[k] = InverseLookup(g, b(k));
  }

  report.least = {fpos[1], gpos[1], fpos[1] <= gpos[1]};
  bool aligned_below = fpos[1] == gpos[1];
  for (std::size_t i = 2; i <= n; ++i) {
    RankPositionClause c;
    c.i = i;
    c.premise_held = aligned_below;
    c.fpos = fpos[i];
    c.gpos = gpos[i];
    c.holds = !c.premise_held || fpos[i] <= gpos[i];
    report.by_rank.push_back(c);
    aligned_below = aligned_below && fpos[i] == gpos[i];
  }
  return report;
}

PairedListings PairedListings::Make(PrefixListing f, PrefixListing g,
                                    Natural m) {
  if (f.size() != g.size()) InvalidPairing("f and g have different lengths");
  if (f.empty()) InvalidPairing("f must start with m; the pairing is empty");
  if (m == 0) InvalidPairing("m must be a natural >= 1");
  const AscendingView a(g);
  if (m >= a(1)) {
    InvalidPairing("m = " + std::to_string(m) +
                   " must lie below every element of g");
  }
  if (f(1) != m) InvalidPairing("f(1) must equal m");

  std::vector<Natural> b;
  b.reserve(a.size() + 1);
  b.push_back(m);
  b.insert(b.end(), a.values().begin(), a.values().end());
  const std::vector<Natural> a_sorted(a.values().begin(), a.values().end());
  for (Position i = 1; i <= f.size(); ++i) {
    if (!std::binary_search(b.begin(), b.end(), f(i))) {
      InvalidPairing("f(" + std::to_string(i) + ") = " + std::to_string(f(i)) +
                     " is neither m nor enumerated by g");
    }
    if (RankIn(b, f(i)) != RankIn(a_sorted, g(i))) {
      InvalidPairing("ranks of f(" + std::to_string(i) + ") and g(" +
                     std::to_string(i) + ") disagree");
    }
  }
  if (!EquivEo(f, g)) InvalidPairing("f and g are not eo-equivalent");
  return PairedListings(std::move(f), std::move(g), m);
}

PairedListings MakePaired(const SetSample& a_sample, Natural m,
                          const Pattern& pattern) {
  if (pattern.size() != a_sample.size()) {
    throw Error(ErrorKind::kBadPattern,
                "pattern length " + std::to_string(pattern.size()) +
                    " must equal |A| = " + std::to_string(a_sample.size()));
  }
  if (pattern.size() == 0 || pattern(1) != 1) {
    throw Error(ErrorKind::kBadPattern, "pattern must start with rank 1");
  }
  if (m == 0 || a_sample.Contains(m) || m >= *a_sample.elements().begin()) {
    throw Error(ErrorKind::kBadExtra,
                "m = " + std::to_string(m) + " must be >= 1 and below min(A)",
                m);
  }
  const std::vector<Natural> a(a_sample.elements().begin(),
                               a_sample.elements().end());
  std::vector<Natural> b;
  b.reserve(a.size() + 1);
  b.push_back(m);
  b.insert(b.end(), a.begin(), a.end());

  std::vector<Natural> f, g;
  for (std::size_t r : pattern.ranks()) {
    f.push_back(b[r - 1]);
    g.push_back(a[r - 1]);
  }
  return PairedListings::Make(PrefixListing::Make(std::move(f)),
                              PrefixListing::Make(std::move(g)), m);
}

Natural Predecessor(const PairedListings& p, Natural a) {
  return p.f()(InverseLookup(p.g(), a));
}

std::vector<Natural> DescentChain(const PairedListings& p, Natural a) {
  std::vector<Natural> out;
  Natural cur = Predecessor(p, a);
  while (cur != p.m()) {
    out.push_back(cur);
    Position pos = 0;
    try {
      pos = InverseLookup(p.g(), cur);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kValueAbsent) throw;
      throw Error(ErrorKind::kInsufficientPrefix,
                  "descent reached " + std::to_string(cur) +
                      ", which g has not enumerated",
                  cur);
    }
    cur = p.f()(pos);
  }
  return out;
}

MembershipDecision DecideMembership(const PairedListings& p, Natural x) {
  if (x == 0) {
    throw Error(ErrorKind::kPreconditionViolated, "x must be >= 1");
  }
  MembershipDecision d;
  const auto g = p.g().values();
  if (std::find(g.begin(), g.end(), x) != g.end()) {
    d.result = Membership::kInA;
    return d;
  }
  std::optional<Natural> witness;
  for (Natural v : g) {
    if (v > x && (!witness || v < *witness)) witness = v;
  }
  if (!witness) {
    d.result = Membership::kInsufficientPrefix;
    return d;
  }
  d.descent = DescentChain(p, *witness);
  d.result = std::find(d.descent.begin(), d.descent.end(), x) != d.descent.end()
                 ? Membership::kInA
                 : Membership::kNotInA;
  return d;
}

std::vector<SetSample> FiniteVariantFamily(const SetSample& a_sample,
                                           std::size_t n) {
  if (a_sample.bound() < n) {
    throw Error(ErrorKind::kBadBound,
                "sample bound " + std::to_string(a_sample.bound()) +
                    " is below n = " + std::to_string(n),
                a_sample.bound());
  }
  std::vector<SetSample> family;
  family.reserve(n + 1);
  for (std::size_t k = 1; k <= n + 1; ++k) {
    std::set<Natural> s = a_sample.elements();
    for (Natural v = k; v <= n; ++v) s.erase(v);
    for (Natural v = 1; v < k; ++v) s.insert(v);
    family.push_back(SetSample::Make(std::move(s), a_sample.bound()));
  }
  return family;
}

}  // namespace eorder
