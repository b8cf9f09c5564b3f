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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes within its time limit.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "eorder/enumerators.h"
#include "eorder/extraction.h"
#include "eorder/listing_algebra.h"
#include "eorder/oracle.h"
#include "eorder/prefix.h"
#include "json.hpp"

namespace {

using eorder::Natural;
using eorder::PrefixListing;
using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct CliResult {
  int code = 0;
  std::string out;
};

CliResult Cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  CliResult r;
  r.code = eorder::cli::Run(args, in, out, err);
  r.out = out.str();
  return r;
}

// Each check returns a detail string and sets ok.
struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> check;
};

std::uint64_t CollatzSteps(Natural p) {
  std::uint64_t it = 0;
  for (; p != 1; ++it) p = (p % 2 == 0) ? p / 2 : 3 * p + 1;
  return it + 1;
}

std::vector<std::vector<Natural>> Permutations(std::size_t n) {
  std::vector<Natural> v(n);
  std::iota(v.begin(), v.end(), Natural{1});
  std::vector<std::vector<Natural>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool Reduces(const std::vector<Natural>& f, const std::vector<Natural>& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] > f[j] && g[i] < g[j]) return false;
    }
  }
  return true;
}

bool ExampleEvensVsShifted(std::string& detail) {
  const auto r = Cli({"compare", "even", "nminus:1", "--prefix-len", "1000"});
  detail = r.out.substr(0, r.out.size() - 1);
  return r.code == 0 && Json::parse(r.out)["equiv"] == true;
}

bool CollatzDovetail(std::string& detail) {
  // Independent schedule: sort (code + steps - 1, code) over codes that halt
  // within 12 rounds.
  std::vector<std::pair<std::uint64_t, Natural>> halts;
  for (Natural c = 1; c <= 12; ++c) {
    const std::uint64_t round = c + CollatzSteps(c) - 1;
    if (round <= 12) halts.push_back({round, c});
  }
  std::sort(halts.begin(), halts.end());
  std::vector<Natural> oracle;
  for (const auto& h : halts) oracle.push_back(h.second);
  oracle.resize(5);

  auto e = eorder::DovetailHalting(eorder::FindModel("collatz"), 12);
  const PrefixListing p = eorder::TakePrefix(*e, 5, 12);
  const std::vector<Natural> got(p.values().begin(), p.values().end());
  const std::vector<Natural> expected = {1, 2, 4, 3, 5};
  const auto inv = eorder::Inversions(p);
  std::vector<Natural> sorted = got;
  std::sort(sorted.begin(), sorted.end());
  const bool equiv_to_ascending =
      eorder::EquivEo(p, PrefixListing::Make(sorted));
  const auto cli = Cli({"enumerate", "halt:collatz", "--prefix-len", "5"});
  detail = "prefix " + Json(got).dump() + ", oracle " + Json(oracle).dump() +
           ", inversions " + std::to_string(inv.size());
  return got == expected && got == oracle && !inv.empty() &&
         !equiv_to_ascending &&
         Json::parse(cli.out)["prefix"] == Json(expected);
}

bool AscendingIsLeast(std::string& detail) {
  const auto r = Cli({"verify", "--property", "lemma-2-3", "--n", "5"});
  const auto rep = eorder::RunProperty("lemma-2-3", 5);
  detail = "listings " + std::to_string(rep.counters.at("listings")) +
           ", instances " + std::to_string(rep.instances);
  return r.code == 0 && Json::parse(r.out)["pass"] == true && rep.pass() &&
         rep.counters.at("listings") == 120;
}

bool PositionBounds(std::string& detail) {
  const auto rep = eorder::RunProperty("lemma-2-8", 5);
  const auto reducible = rep.counters.at("reducible");
  detail = "pairs checked " + std::to_string(rep.instances) + " (>= 4000), " +
           std::to_string(reducible) + " with inversion containment";
  return rep.pass() && rep.instances == 14400 && rep.instances >= 4000 &&
         reducible == 1899;
}

bool TransportPreservesPattern(std::string& detail) {
  const auto rep = eorder::RunProperty("transport", 4);
  // 24 h x 24 h' x C(8, 4) value sets for g' with the pattern of h'.
  detail = std::to_string(rep.instances) + " qualifying triples, " +
           std::to_string(rep.violations.size()) + " violations";
  return rep.pass() && rep.instances == 24u * 24u * 70u;
}

bool ChainsStabilize(std::string& detail) {
  const auto perms = Permutations(4);
  std::vector<std::vector<std::size_t>> below(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      if (Reduces(perms[b], perms[a])) below[a].push_back(b);
    }
  }
  const std::size_t len = 4 * 3 / 2 + 2;
  std::uint64_t chains = 0, bad = 0;
  std::vector<std::size_t> idx;
  std::function<void()> rec = [&] {
    if (idx.size() == len) {
      ++chains;
      std::vector<PrefixListing> ls;
      for (std::size_t i : idx) ls.push_back(PrefixListing::Make(perms[i]));
      std::optional<eorder::PositionPair> scan;
      for (std::size_t j = 1; j < len && !scan; ++j) {
        for (std::size_t i = 0; i < j && !scan; ++i) {
          if (perms[idx[i]] == perms[idx[j]]) scan = eorder::PositionPair{i + 1, j + 1};
        }
      }
      const auto found = eorder::ChainStabilize(eorder::Chain::Make(ls));
      if (!scan || found != scan) ++bad;
      return;
    }
    for (std::size_t b : below[idx.back()]) {
      idx.push_back(b);
      rec();
      idx.pop_back();
    }
  };
  for (std::size_t s = 0; s < perms.size(); ++s) {
    idx = {s};
    rec();
  }
  const auto rep = eorder::RunProperty("stabilization", 4);
  detail = std::to_string(chains) + " chains of length 8, " +
           std::to_string(bad) + " mismatches";
  return bad == 0 && chains == 32217 && rep.pass() && rep.instances == chains;
}

bool MembershipExtraction(std::string& detail) {
  std::uint64_t decided = 0, wrong = 0, undecided_full = 0, patterns = 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    std::set<Natural> a;
    for (std::size_t i = 1; i <= k; ++i) a.insert(2 * i);
    const auto sample = eorder::SetSample::Make(a, 2 * k);
    std::vector<std::size_t> rest(k - 1);
    std::iota(rest.begin(), rest.end(), std::size_t{2});
    do {
      std::vector<std::size_t> ranks{1};
      ranks.insert(ranks.end(), rest.begin(), rest.end());
      const auto pairing =
          eorder::MakePaired(sample, 1, eorder::Pattern::FromRanks(ranks));
      ++patterns;
      for (Natural x = 1; x <= 12; ++x) {
        const auto d = eorder::DecideMembership(pairing, x);
        if (d.result == eorder::Membership::kInsufficientPrefix) {
          if (k == 6) ++undecided_full;
          continue;
        }
        ++decided;
        const bool said_in = d.result == eorder::Membership::kInA;
        if (said_in != a.contains(x)) ++wrong;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  detail = std::to_string(patterns) + " patterns, " + std::to_string(decided) +
           " decisions, " + std::to_string(wrong) + " wrong";
  return wrong == 0 && undecided_full == 0 && patterns == 1 + 1 + 2 + 6 + 24 + 120;
}

bool PreorderLaws(std::string& detail) {
  const auto refl = eorder::RunProperty("reflexive", 4);
  const auto trans = eorder::RunProperty("transitive", 4);
  const auto anti = eorder::RunProperty("non-antisymmetric", 4);
  bool witness_ok = false;
  if (anti.witness) {
    const auto& [f, g] = *anti.witness;
    witness_ok = f != g && eorder::LeqEo(f, g).holds() && eorder::LeqEo(g, f).holds();
    detail = "witness [" + Json(std::vector<Natural>(f.values().begin(), f.values().end())).dump() +
             ", " + Json(std::vector<Natural>(g.values().begin(), g.values().end())).dump() + "]";
  }
  detail += ", transitive triples " + std::to_string(trans.instances);
  return refl.pass() && trans.pass() && trans.instances == 24u * 24u * 24u &&
         anti.pass() && witness_ok;
}

bool ClassCount(std::string& detail) {
  const auto rep = eorder::RunProperty("class-count", 5);
  detail = std::to_string(rep.counters.at("classes")) + " classes, " +
           std::to_string(rep.counters.at("patterns")) + " patterns";
  return rep.pass() && rep.counters.at("classes") == 120 &&
         rep.counters.at("patterns") == 120;
}

bool FiniteVariants(std::string& detail) {
  const auto fam = eorder::FiniteVariantFamily(
      eorder::SetSample::Make({2, 4, 6, 8}, 9), 2);
  std::vector<std::set<Natural>> got;
  for (const auto& s : fam) got.push_back(s.elements());
  const std::vector<std::set<Natural>> want = {
      {4, 6, 8}, {1, 4, 6, 8}, {1, 2, 4, 6, 8}};
  const std::set<std::set<Natural>> distinct(got.begin(), got.end());
  detail = Cli({"family", "--sample", "elements=2 4 6 8; bound=9", "--n", "2"}).out;
  detail.pop_back();
  return got == want && distinct.size() == 3;
}

bool Determinism(std::string& detail) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("eorder_acceptance_" + std::to_string(Clock::now().time_since_epoch().count()));
  fs::create_directories(dir);
  const std::string pairing = (dir / "pairing.txt").string();
  const std::string chain = (dir / "chain.txt").string();
  std::ofstream(pairing) << "1 4 2 6\n2 6 4 8\nm=1\n";
  std::ofstream(chain) << "2 1 3\n1 2 3\n1 2 3\n";

  const std::vector<std::vector<std::string>> commands = {
      {"compare", "even", "nminus:1", "--prefix-len", "200"},
      {"compare", "halt:collatz", "halt:rm", "--prefix-len", "20"},
      {"verify", "--property", "all", "--n", "4"},
      {"verify", "--property", "stabilization", "--n", "5"},
      {"decide", "--paired", pairing, "--x", "5"},
      {"decide", "--paired", pairing, "--x", "100"},
      {"pattern", "halt:collatz"},
      {"inversions", "halt:rm", "--budget", "500"},
      {"transport", "inline", "6 2 4", "inline", "2 4 6", "inline", "2 3 4"},
      {"stabilize", "--chain", chain},
      {"lemma8", "inline", "2 4 6", "inline", "2 3 4"},
      {"pred", "--paired", pairing, "--a", "8"},
      {"family", "--sample", "elements=2 4 6 8; bound=9", "--n", "2"},
      {"enumerate", "halt:collatz", "--prefix-len", "64"},
      {"chain-make", "--n", "5"},
  };
  std::size_t same = 0;
  for (const auto& c : commands) {
    const auto a = Cli(c);
    const auto b = Cli(c);
    if (a.code == b.code && a.out == b.out && !a.out.empty()) ++same;
  }
  fs::remove_all(dir);
  detail = std::to_string(same) + "/" + std::to_string(commands.size()) +
           " commands byte-identical";
  return same == commands.size();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "evens and shifted naturals are equivalent (len 1000)", 1.0,
       ExampleEvensVsShifted},
      {2, "collatz dovetail prefix [1,2,4,3,5] has an inversion", 1.0,
       CollatzDovetail},
      {3, "ascending listings reduce to all of S_5", 1.0, AscendingIsLeast},
      {4, "position bounds hold on S_5 pairs", 10.0, PositionBounds},
      {5, "transport keeps the pattern over S_4 triples", 10.0,
       TransportPreservesPattern},
      {6, "descending chains of length 8 over {1..4} repeat", 10.0,
       ChainsStabilize},
      {7, "membership decided from rank-aligned pairings", 10.0,
       MembershipExtraction},
      {8, "preorder laws at n = 4", 10.0, PreorderLaws},
      {9, "120 equivalence classes over {1..5}", 10.0, ClassCount},
      {10, "finite-variant family of {2,4,6,8}, n = 2", 1.0, FiniteVariants},
      {11, "JSON output is byte-identical across runs", 60.0, Determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto start = Clock::now();
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    if (!(ok && in_time)) ++failures;
    std::printf("[%s] AC%-2d %s: %s (%.3f s, limit %.0f s)\n",
                ok && in_time ? "PASS" : "FAIL", c.id, c.name.c_str(),
                detail.c_str(), secs, c.limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
