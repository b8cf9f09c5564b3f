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

#include "eorder/oracle.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "eorder/errors.h"
#include "eorder/extraction.h"
#include "eorder/listing_algebra.h"
#include "eorder/text_format.h"

namespace eorder {

namespace {

constexpr std::size_t kMaxPatternSize = 8;
constexpr std::uint64_t kRandomWalks = 20000;
constexpr std::uint64_t kWalkSeed = 0x5eed'e0de'2024'0001ULL;

struct Tally {
  std::uint64_t instances = 0;
  std::vector<std::string> violations;
  std::map<std::string, std::uint64_t> counters;

  void Merge(Tally&& other) {
    instances += other.instances;
    for (auto& v : other.violations) violations.push_back(std::move(v));
    for (const auto& [k, c] : other.counters) counters[k] += c;
  }
};

// Runs fn(i, tally) for i in [0, count) across threads; merging is by sum and
// concatenation, so the result only depends on the set of calls.
Tally ParallelTally(std::size_t count, unsigned threads,
                    const std::function<void(std::size_t, Tally&)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<Tally> local(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned t) {
    for (std::size_t i = next++; i < count; i = next++) fn(i, local[t]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  Tally total;
  for (auto& t : local) total.Merge(std::move(t));
  std::sort(total.violations.begin(), total.violations.end());
  return total;
}

std::string Show(const PrefixListing& p) {
  return "[" + FormatPrefixLine(p) + "]";
}

std::vector<PrefixListing> AsPrefixes(const std::vector<Pattern>& patterns) {
  std::vector<PrefixListing> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(p.AsPrefix());
  return out;
}

// Every length-n sequence of distinct values from 1..universe, lexicographic.
std::vector<PrefixListing> Arrangements(std::size_t n, std::size_t universe) {
  std::vector<PrefixListing> out;
  std::vector<Natural> cur;
  std::vector<bool> used(universe + 1, false);
  std::function<void()> rec = [&] {
    if (cur.size() == n) {
      out.push_back(PrefixListing::Make(cur));
      return;
    }
    for (Natural v = 1; v <= universe; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = false;
    }
  };
  rec();
  return out;
}

// Every n-subset of 1..universe.
std::vector<std::set<Natural>> Subsets(std::size_t n, std::size_t universe) {
  std::vector<std::set<Natural>> out;
  std::vector<bool> mask(universe, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::set<Natural> s;
    for (std::size_t i = 0; i < universe; ++i) {
      if (mask[i]) s.insert(i + 1);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::optional<PositionPair> DirectLeastViolation(std::span<const Natural> f,
                                                 std::span<const Natural> g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] > f[j] && !(g[i] > g[j])) return PositionPair{i + 1, j + 1};
    }
  }
  return std::nullopt;
}

Tally CheckReflexive(std::size_t n, unsigned threads) {
  const auto ps = AsPrefixes(AllPatterns(n));
  return ParallelTally(ps.size(), threads, [&](std::size_t a, Tally& t) {
    ++t.instances;
    if (!LeqEo(ps[a], ps[a]).holds() || !EquivEo(ps[a], ps[a])) {
      t.violations.push_back(Show(ps[a]) + " does not reduce to itself");
    }
  });
}

Tally CheckTransitive(std::size_t n, unsigned threads) {
  const auto ps = AsPrefixes(AllPatterns(n));
  const std::size_t m = ps.size();
  std::vector<std::vector<char>> leq(m, std::vector<char>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) leq[a][b] = LeqEo(ps[a], ps[b]).holds();
  }
  return ParallelTally(m, threads, [&](std::size_t a, Tally& t) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        ++t.instances;
        if (leq[a][b] && leq[b][c] && !leq[a][c]) {
          t.violations.push_back(Show(ps[a]) + " <= " + Show(ps[b]) + " <= " +
                                 Show(ps[c]) + " but not " + Show(ps[a]) +
                                 " <= " + Show(ps[c]));
        }
      }
    }
  });
}

Tally CheckNonAntisymmetric(std::size_t n,
                            std::optional<std::pair<PrefixListing,
                                                    PrefixListing>>& witness) {
  const auto xs = Arrangements(n, 2 * n);
  Tally t;
  for (const auto& f : xs) {
    for (const auto& g : xs) {
      ++t.instances;
      if (f != g && EquivEo(f, g)) {
        witness = {f, g};
        return t;
      }
    }
  }
  t.violations.push_back("no pair of distinct equivalent prefixes of length " +
                         std::to_string(n));
  return t;
}

Tally CheckSubsetCharacterization(std::size_t n, unsigned threads) {
  const auto ps = AsPrefixes(AllPatterns(n));
  std::vector<InversionSet> inv;
  for (const auto& p : ps) inv.push_back(Inversions(p));
  return ParallelTally(ps.size(), threads, [&](std::size_t a, Tally& t) {
    for (std::size_t b = 0; b < ps.size(); ++b) {
      ++t.instances;
      const auto& f = ps[a];
      const auto& g = ps[b];
      const ReducibilityVerdict v = LeqEo(f, g);
      const bool direct = DirectlyReduces(f.values(), g.values());
      const bool subset = inv[a].IsSubsetOf(inv[b]);
      const bool direct_back = DirectlyReduces(g.values(), f.values());
      if (v.holds() != direct || subset != direct) {
        t.violations.push_back("disagreement on " + Show(f) + " <= " + Show(g));
      } else if (v.witness() != DirectLeastViolation(f.values(), g.values())) {
        t.violations.push_back("wrong witness on " + Show(f) + " <= " + Show(g));
      } else if (EquivEo(f, g) != (direct && direct_back) ||
                 EquivEo(f, g) != (inv[a] == inv[b])) {
        t.violations.push_back("equivalence mismatch on " + Show(f) + ", " +
                               Show(g));
      }
      if (direct) ++t.counters["reducible"];
    }
  });
}

Tally CheckAscendingIsLeast(std::size_t n, unsigned threads) {
  const auto ps = AsPrefixes(AllPatterns(n));
  const auto samples = Subsets(n, 2 * n);
  Tally t = ParallelTally(ps.size(), threads, [&](std::size_t a, Tally& t) {
    for (const auto& s : samples) {
      ++t.instances;
      const PrefixListing asc = AscendingListing(SetSample::Make(s, 2 * n));
      if (!Inversions(asc).empty() || !LeqEo(asc, ps[a]).holds()) {
        t.violations.push_back(Show(asc) + " does not reduce to " + Show(ps[a]));
      }
    }
  });
  t.counters["listings"] = ps.size();
  t.counters["samples"] = samples.size();
  return t;
}

Tally CheckPositionBoundsProperty(std::size_t n, unsigned threads) {
  const auto ps = AsPrefixes(AllPatterns(n));
  // g enumerates the evens so that f and g list different sets.
  std::vector<PrefixListing> gs;
  for (const auto& p : ps) {
    std::vector<Natural> v(p.values().begin(), p.values().end());
    for (auto& x : v) x *= 2;
    gs.push_back(PrefixListing::Make(std::move(v)));
  }
  return ParallelTally(ps.size(), threads, [&](std::size_t a, Tally& t) {
    for (std::size_t b = 0; b < gs.size(); ++b) {
      ++t.instances;
      const auto& f = ps[a];
      const auto& g = gs[b];
      if (DirectlyReduces(f.values(), g.values())) {
        ++t.counters["reducible"];
        if (!CheckPositionBounds(f, g).AllHold()) {
          t.violations.push_back("position bound fails on " + Show(f) + ", " +
                                 Show(g));
        }
        continue;
      }
      try {
        CheckPositionBounds(f, g);
        t.violations.push_back("precondition not enforced on " + Show(f) +
                               ", " + Show(g));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kPreconditionViolated) throw;
      }
    }
  });
}

Tally CheckTransport(std::size_t n, unsigned threads) {
  const auto ps = AsPrefixes(AllPatterns(n));
  const auto targets = Arrangements(n, 2 * n);
  std::map<Pattern, std::vector<std::size_t>> by_pattern;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    by_pattern[Standardize(targets[i])].push_back(i);
  }
  return ParallelTally(ps.size(), threads, [&](std::size_t a, Tally& t) {
    const auto& h = ps[a];
    const Pattern want = Standardize(h);
    for (const auto& h_prime : ps) {
      for (std::size_t gi : by_pattern[Standardize(h_prime)]) {
        ++t.instances;
        const auto& g_prime = targets[gi];
        const PrefixListing r = Transport(h, h_prime, g_prime);
        if (Standardize(r) != want || r.ValueSet() != g_prime.ValueSet() ||
            !EquivEo(r, h)) {
          t.violations.push_back("transport of " + Show(h) + " via " +
                                 Show(h_prime) + " -> " + Show(g_prime) +
                                 " gave " + Show(r));
        }
      }
    }
  });
}

void CheckOneChain(const std::vector<PrefixListing>& listings, Tally& t) {
  ++t.instances;
  std::vector<std::vector<Natural>> raw;
  for (const auto& l : listings) raw.emplace_back(l.values().begin(), l.values().end());
  const auto expected = ScanForRepeat(raw);
  const auto found = ChainStabilize(Chain::Make(listings));
  if (!found || found != expected) {
    std::string s = "chain";
    for (const auto& l : listings) s += " " + Show(l);
    t.violations.push_back(s + (found ? ": wrong repeat" : ": no repeat"));
  }
}

Tally CheckStabilization(std::size_t n, unsigned threads) {
  const auto ps = AsPrefixes(AllPatterns(n));
  const std::size_t len = n * (n - 1) / 2 + 2;
  std::vector<std::vector<std::size_t>> below(ps.size());
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = 0; b < ps.size(); ++b) {
      if (LeqEo(ps[b], ps[a]).holds()) below[a].push_back(b);
    }
  }

  Tally t;
  if (n <= 4) {
    t = ParallelTally(ps.size(), threads, [&](std::size_t start, Tally& t) {
      std::vector<PrefixListing> chain{ps[start]};
      std::vector<std::size_t> idx{start};
      std::function<void()> rec = [&] {
        if (chain.size() == len) {
          CheckOneChain(chain, t);
          return;
        }
        for (std::size_t b : below[idx.back()]) {
          chain.push_back(ps[b]);
          idx.push_back(b);
          rec();
          chain.pop_back();
          idx.pop_back();
        }
      };
      rec();
    });
    t.counters["exhaustive"] = 1;
  } else {
    t = ParallelTally(kRandomWalks, threads, [&](std::size_t w, Tally& t) {
      std::mt19937_64 rng(kWalkSeed + w);
      std::size_t cur = std::uniform_int_distribution<std::size_t>(
          0, ps.size() - 1)(rng);
      std::vector<PrefixListing> chain{ps[cur]};
      while (chain.size() < len) {
        const auto& opts = below[cur];
        cur = opts[std::uniform_int_distribution<std::size_t>(
            0, opts.size() - 1)(rng)];
        chain.push_back(ps[cur]);
      }
      CheckOneChain(chain, t);
    });
    t.counters["exhaustive"] = 0;
  }

  if (n >= 1) {
    const Chain strict = MakeStrictChain(n);
    if (strict.size() != len - 1 || ChainStabilize(strict).has_value()) {
      t.violations.push_back("strict chain of size " + std::to_string(n) +
                             " repeats or has the wrong length");
    }
  }
  return t;
}

Tally CheckClassCount(std::size_t n) {
  const auto ps = AsPrefixes(AllPatterns(n));
  Tally t;
  t.instances = ps.size();

  // Refine: split the unclassified remainder on equivalence with its first
  // member until nothing is left.
  std::vector<std::size_t> rest(ps.size());
  std::iota(rest.begin(), rest.end(), 0);
  std::uint64_t classes = 0;
  std::uint64_t comparisons = 0;
  while (!rest.empty()) {
    const std::size_t pivot = rest.front();
    std::vector<std::size_t> others;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      ++comparisons;
      if (!EquivEo(ps[pivot], ps[rest[i]])) others.push_back(rest[i]);
    }
    ++classes;
    rest = std::move(others);
  }

  std::set<Pattern> patterns;
  for (const auto& p : ps) patterns.insert(Standardize(p));

  std::uint64_t factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) factorial *= k;

  t.counters["classes"] = classes;
  t.counters["patterns"] = patterns.size();
  t.counters["comparisons"] = comparisons;
  if (classes != patterns.size() || classes != factorial) {
    t.violations.push_back(std::to_string(classes) + " classes vs " +
                           std::to_string(patterns.size()) + " patterns");
  }
  return t;
}

}  // namespace

const std::vector<PropertyInfo>& PropertyRegistry() {
  static const std::vector<PropertyInfo> kRegistry = {
      {"reflexive", 8},
      {"transitive", 4},
      {"non-antisymmetric", 5},
      {"subset-characterization", 5},
      {"lemma-2-3", 6},
      {"lemma-2-8", 5},
      {"transport", 4},
      {"stabilization", 5},
      {"class-count", 6},
  };
  return kRegistry;
}

std::vector<Pattern> AllPatterns(std::size_t n) {
  if (n > kMaxPatternSize) {
    throw Error(ErrorKind::kTooLarge,
                "n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxPatternSize),
                n);
  }
  std::vector<std::size_t> cur(n);
  std::iota(cur.begin(), cur.end(), std::size_t{1});
  std::vector<Pattern> out;
  do {
    out.push_back(Pattern::FromRanks(cur));
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

bool DirectlyReduces(std::span<const Natural> f, std::span<const Natural> g) {
  return f.size() == g.size() && !DirectLeastViolation(f, g).has_value();
}

std::optional<PositionPair> ScanForRepeat(
    const std::vector<std::vector<Natural>>& chain) {
  std::map<std::vector<Natural>, std::size_t> first_seen;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    auto [it, inserted] = first_seen.emplace(chain[j], j);
    if (!inserted) return PositionPair{it->second + 1, j + 1};
  }
  return std::nullopt;
}

PropertyReport RunProperty(std::string_view id, std::size_t n,
                           const RunOptions& options) {
  const auto& reg = PropertyRegistry();
  const auto it = std::find_if(reg.begin(), reg.end(),
                               [&](const PropertyInfo& p) { return p.id == id; });
  if (it == reg.end()) {
    throw Error(ErrorKind::kUnknownProperty,
                "no property named \"" + std::string(id) + "\"");
  }
  if (n > it->max_n) {
    throw Error(ErrorKind::kTooLarge,
                std::string(id) + " accepts n <= " + std::to_string(it->max_n),
                n);
  }

  const auto start = std::chrono::steady_clock::now();
  PropertyReport report;
  report.property = std::string(id);
  report.n = n;
  const unsigned th = options.threads;
  Tally t;
  if (id == "reflexive") {
    t = CheckReflexive(n, th);
  } else if (id == "transitive") {
    t = CheckTransitive(n, th);
  } else if (id == "non-antisymmetric") {
    t = CheckNonAntisymmetric(n, report.witness);
  } else if (id == "subset-characterization") {
    t = CheckSubsetCharacterization(n, th);
  } else if (id == "lemma-2-3") {
    t = CheckAscendingIsLeast(n, th);
  } else if (id == "lemma-2-8") {
    t = CheckPositionBoundsProperty(n, th);
  } else if (id == "transport") {
    t = CheckTransport(n, th);
  } else if (id == "stabilization") {
    t = CheckStabilization(n, th);
  } else {
    t = CheckClassCount(n);
  }
  report.instances = t.instances;
  report.violations = std::move(t.violations);
  report.counters = std::move(t.counters);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace eorder
