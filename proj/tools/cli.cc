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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eorder/enumerators.h"
#include "eorder/errors.h"
#include "eorder/extraction.h"
#include "eorder/listing_algebra.h"
#include "eorder/oracle.h"
#include "eorder/prefix.h"
#include "eorder/text_format.h"
#include "json.hpp"

namespace eorder::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string format = "json";
  std::size_t prefix_len = 32;
  std::uint64_t budget = 10000;
};

std::string ReadAll(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::kParseError, "cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::string_view TrimLeft(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  return b == std::string_view::npos ? std::string_view{} : s.substr(b);
}

// A prefix from file contents: a prefix line, a flat JSON array, or a JSON
// object carrying "prefix" (what `enumerate --format json` prints).
PrefixListing PrefixFromText(std::string_view text) {
  const std::string_view t = TrimLeft(text);
  if (t.starts_with('[') || t.starts_with('{')) {
    try {
      Json j = Json::parse(t);
      if (j.is_object()) j = j.at("prefix");
      return PrefixListing::Make(j.get<std::vector<Natural>>());
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::kParseError,
                  std::string("malformed JSON prefix: ") + e.what());
    }
  }
  const auto lines = ParsePrefixLines(text);
  if (lines.size() > 1) {
    throw Error(ErrorKind::kParseError,
                "expected one prefix, found " + std::to_string(lines.size()) +
                    " lines");
  }
  return lines.empty() ? PrefixListing() : lines.front();
}

// Sources: `inline "<nats>"`, `file:<path>` (`file:-` is stdin), a JSON
// array, or an enumerator spec materialized to --prefix-len values.
std::vector<PrefixListing> ResolveSources(const std::vector<std::string>& tokens,
                                          const Settings& s, std::istream& in) {
  std::vector<PrefixListing> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok == "inline") {
      if (i + 1 == tokens.size()) {
        throw Error(ErrorKind::kParseError, "inline needs a prefix argument");
      }
      out.push_back(ParsePrefixLine(tokens[++i]));
    } else if (tok.starts_with("file:")) {
      out.push_back(PrefixFromText(ReadAll(tok.substr(5), in)));
    } else if (TrimLeft(tok).starts_with('[')) {
      out.push_back(PrefixFromText(tok));
    } else {
      auto e = ParseSpec(tok);
      out.push_back(TakePrefix(*e, s.prefix_len, s.budget));
    }
  }
  return out;
}

std::vector<PrefixListing> ResolveExactly(std::size_t count,
                                          const std::vector<std::string>& tokens,
                                          const Settings& s, std::istream& in) {
  auto ps = ResolveSources(tokens, s, in);
  if (ps.size() != count) {
    throw Error(ErrorKind::kParseError,
                "expected " + std::to_string(count) + " prefix sources, got " +
                    std::to_string(ps.size()));
  }
  return ps;
}

Json ToJson(const PrefixListing& p) {
  return Json(std::vector<Natural>(p.values().begin(), p.values().end()));
}

Json ToJson(const std::optional<PositionPair>& p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

std::string ShowPair(const std::optional<PositionPair>& p) {
  if (!p) return "none";
  return "(" + std::to_string(p->first) + ", " + std::to_string(p->second) + ")";
}

std::string ShowValues(const std::vector<Natural>& v) {
  std::string s;
  for (Natural x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void Emit(std::ostream& out, const Settings& s, const Json& j,
          const std::string& text) {
  if (s.format == "json") {
    out << j.dump() << "\n";
  } else {
    out << text;
  }
}

PairedListings LoadPairing(const std::string& path, std::istream& in) {
  return ParsePairing(ReadAll(path, in));
}

SetSample LoadSample(const std::string& arg, std::istream& in) {
  if (arg.starts_with("file:")) return ParseSetSample(ReadAll(arg.substr(5), in));
  return ParseSetSample(arg);
}

int CmdCompare(const std::vector<std::string>& src, const Settings& s,
               std::istream& in, std::ostream& out) {
  const auto ps = ResolveExactly(2, src, s, in);
  const auto fg = LeqEo(ps[0], ps[1]);
  const auto gf = LeqEo(ps[1], ps[0]);
  const bool equiv = EquivEo(ps[0], ps[1]);
  Json j;
  j["f_le_g"] = fg.holds();
  j["g_le_f"] = gf.holds();
  j["equiv"] = equiv;
  j["fail_at"] = ToJson(fg.witness());
  std::ostringstream t;
  t << "length:   " << ps[0].size() << "\n"
    << "f <=eo g: " << (fg.holds() ? "holds" : "fails at " + ShowPair(fg.witness()))
    << "\n"
    << "g <=eo f: " << (gf.holds() ? "holds" : "fails at " + ShowPair(gf.witness()))
    << "\n"
    << "f ==eo g: " << (equiv ? "yes" : "no") << "\n";
  Emit(out, s, j, t.str());
  return kExitOk;
}

int CmdVerify(const std::string& property, std::size_t n, unsigned threads,
              const Settings& s, std::ostream& out) {
  std::vector<std::string> ids;
  if (property == "all") {
    for (const auto& p : PropertyRegistry()) ids.emplace_back(p.id);
  } else {
    ids.push_back(property);
  }
  // Validate everything before running anything.
  for (const auto& id : ids) {
    const auto& reg = PropertyRegistry();
    const auto it = std::find_if(reg.begin(), reg.end(),
                                 [&](const PropertyInfo& p) { return p.id == id; });
    if (it == reg.end()) {
      throw Error(ErrorKind::kUnknownProperty, "no property named \"" + id + "\"");
    }
    if (n > it->max_n) {
      throw Error(ErrorKind::kTooLarge,
                  id + " accepts n <= " + std::to_string(it->max_n), n);
    }
  }
  bool all_pass = true;
  for (const auto& id : ids) {
    const PropertyReport r = RunProperty(id, n, RunOptions{threads});
    all_pass = all_pass && r.pass();
    Json j;
    j["property"] = r.property;
    j["n"] = r.n;
    j["instances"] = r.instances;
    j["violations"] = r.violations;
    j["pass"] = r.pass();
    if (r.witness) {
      j["witness"] = Json::array({ToJson(r.witness->first), ToJson(r.witness->second)});
    }
    std::ostringstream t;
    t << (r.pass() ? "PASS " : "FAIL ") << r.property << " n=" << r.n
      << " instances=" << r.instances;
    for (const auto& [k, v] : r.counters) t << " " << k << "=" << v;
    t << " (" << std::chrono::duration<double, std::milli>(r.elapsed).count()
      << " ms)\n";
    if (r.witness) {
      t << "  witness: [" << FormatPrefixLine(r.witness->first) << "] ~ ["
        << FormatPrefixLine(r.witness->second) << "]\n";
    }
    for (const auto& v : r.violations) t << "  " << v << "\n";
    Emit(out, s, j, t.str());
  }
  return all_pass ? kExitOk : kExitViolation;
}

int CmdDecide(const std::string& paired, Natural x, const Settings& s,
              std::istream& in, std::ostream& out) {
  const PairedListings p = LoadPairing(paired, in);
  const MembershipDecision d = DecideMembership(p, x);
  const char* result = d.result == Membership::kInA      ? "in"
                       : d.result == Membership::kNotInA ? "out"
                                                         : "insufficient";
  Json j;
  j["x"] = x;
  j["result"] = result;
  j["descent"] = d.descent;
  std::ostringstream t;
  t << x << ": " << result;
  if (!d.descent.empty()) t << " (descent " << ShowValues(d.descent) << ")";
  t << "\n";
  Emit(out, s, j, t.str());
  return d.result == Membership::kInsufficientPrefix ? kExitInsufficientPrefix
                                                     : kExitOk;
}

int CmdPattern(const std::vector<std::string>& src, const Settings& s,
               std::istream& in, std::ostream& out) {
  const auto ps = ResolveExactly(1, src, s, in);
  const Pattern pat = Standardize(ps[0]);
  const std::vector<std::size_t> ranks(pat.ranks().begin(), pat.ranks().end());
  Json j;
  j["pattern"] = ranks;
  std::string line;
  for (std::size_t r : ranks) line += (line.empty() ? "" : " ") + std::to_string(r);
  Emit(out, s, j, line + "\n");
  return kExitOk;
}

int CmdInversions(const std::vector<std::string>& src, const Settings& s,
                  std::istream& in, std::ostream& out) {
  const auto ps = ResolveExactly(1, src, s, in);
  const InversionSet inv = Inversions(ps[0]);
  Json pairs = Json::array();
  std::ostringstream t;
  for (const auto& p : inv.pairs()) {
    pairs.push_back(Json::array({p.first, p.second}));
    t << "(" << p.first << ", " << p.second << ")\n";
  }
  Json j;
  j["inversions"] = pairs;
  j["count"] = inv.size();
  t << inv.size() << " inversions\n";
  Emit(out, s, j, t.str());
  return kExitOk;
}

int CmdTransport(const std::vector<std::string>& src, const Settings& s,
                 std::istream& in, std::ostream& out) {
  const auto ps = ResolveExactly(3, src, s, in);
  const PrefixListing r = Transport(ps[0], ps[1], ps[2]);
  Json j;
  j["result"] = ToJson(r);
  j["equiv_h"] = EquivEo(r, ps[0]);
  Emit(out, s, j, FormatPrefixLine(r) + "\n");
  return kExitOk;
}

int CmdStabilize(const std::string& chain_path, const Settings& s,
                 std::istream& in, std::ostream& out) {
  const Chain c = Chain::Make(ParsePrefixLines(ReadAll(chain_path, in)));
  const auto rep = ChainStabilize(c);
  Json j;
  j["length"] = c.size();
  j["repeat"] = ToJson(rep);
  Emit(out, s, j, "repeat: " + ShowPair(rep) + "\n");
  return kExitOk;
}

int CmdLemma8(const std::vector<std::string>& src, const Settings& s,
              std::istream& in, std::ostream& out) {
  const auto ps = ResolveExactly(2, src, s, in);
  const PositionBoundReport r = CheckPositionBounds(ps[0], ps[1]);
  Json j;
  j["clause1"] = {{"fpos", r.least.fpos},
                  {"gpos", r.least.gpos},
                  {"holds", r.least.holds}};
  Json rows = Json::array();
  std::ostringstream t;
  t << "least: f^-1(a_1) = " << r.least.fpos << ", g^-1(b_1) = " << r.least.gpos
    << (r.least.holds ? "  ok" : "  FAILS") << "\n";
  for (const auto& c : r.by_rank) {
    rows.push_back({{"i", c.i},
                    {"premise", c.premise_held},
                    {"fpos", c.fpos},
                    {"gpos", c.gpos},
                    {"holds", c.holds}});
    t << "rank " << c.i << ": " << (c.premise_held ? "premise held" : "vacuous")
      << ", f^-1 = " << c.fpos << ", g^-1 = " << c.gpos
      << (c.holds ? "  ok" : "  FAILS") << "\n";
  }
  j["clause2"] = rows;
  j["holds"] = r.AllHold();
  Emit(out, s, j, t.str());
  return r.AllHold() ? kExitOk : kExitViolation;
}

int CmdPred(const std::string& paired, Natural a, const Settings& s,
            std::istream& in, std::ostream& out) {
  const PairedListings p = LoadPairing(paired, in);
  const Natural pred = Predecessor(p, a);
  Json j;
  j["a"] = a;
  j["predecessor"] = pred;
  j["is_m"] = pred == p.m();
  Emit(out, s, j, std::to_string(a) + " -> " + std::to_string(pred) + "\n");
  return kExitOk;
}

int CmdFamily(const std::string& sample, std::size_t n, const Settings& s,
              std::istream& in, std::ostream& out) {
  const auto fam = FiniteVariantFamily(LoadSample(sample, in), n);
  Json arr = Json::array();
  std::string text;
  for (const auto& m : fam) {
    arr.push_back({{"elements", std::vector<Natural>(m.elements().begin(),
                                                     m.elements().end())},
                   {"bound", m.bound()}});
    text += FormatSetSample(m) + "\n";
  }
  Json j;
  j["family"] = arr;
  Emit(out, s, j, text);
  return kExitOk;
}

int CmdEnumerate(const std::string& spec, const Settings& s, std::ostream& out) {
  auto e = ParseSpec(spec);
  const PrefixListing p = TakePrefix(*e, s.prefix_len, s.budget);
  Json j;
  j["spec"] = e->spec();
  j["prefix"] = ToJson(p);
  Emit(out, s, j, FormatPrefixLine(p) + "\n");
  return kExitOk;
}

int CmdChainMake(std::size_t n, const Settings& s, std::ostream& out) {
  const Chain c = MakeStrictChain(n);
  Json arr = Json::array();
  for (const auto& l : c.listings()) arr.push_back(ToJson(l));
  Json j;
  j["chain"] = arr;
  Emit(out, s, j, FormatPrefixLines(c.listings()));
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumeration-order analysis of listing prefixes", "eorder"};
  app.require_subcommand(1, 1);

  Settings s;
  std::vector<std::string> sources;
  std::string property, paired, chain_path, sample, spec;
  std::size_t n = 0;
  Natural x = 0;
  unsigned threads = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto materialize = [&](CLI::App* sub) {
    sub->add_option("--prefix-len", s.prefix_len,
                    "Values taken from enumerator sources");
    sub->add_option("--budget", s.budget, "Dovetail rounds per enumerator");
  };
  // Sources are collected as extras: CLI11 would split a "[..]" token into
  // separate values if they were a vector positional.
  std::vector<CLI::App*> source_subs;
  auto with_sources = [&](CLI::App* sub, const char* help) {
    common(sub);
    materialize(sub);
    sub->allow_extras();
    sub->footer(std::string("Positionals: ") + help);
    source_subs.push_back(sub);
  };

  auto* compare = app.add_subcommand("compare", "Reducibility both ways");
  with_sources(compare, "f and g sources");
  auto* verify = app.add_subcommand("verify", "Run exhaustive property checks");
  common(verify);
  verify->add_option("--property", property, "Property id or 'all'")->required();
  verify->add_option("--n", n, "Permutation size")->required();
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)");
  auto* decide = app.add_subcommand("decide", "Membership from a pairing");
  common(decide);
  decide->add_option("--paired", paired, "Pairing file ('-' for stdin)")->required();
  decide->add_option("--x", x, "Candidate element")->required();
  auto* pattern = app.add_subcommand("pattern", "Standardized pattern");
  with_sources(pattern, "prefix source");
  auto* inversions = app.add_subcommand("inversions", "Inverted position pairs");
  with_sources(inversions, "prefix source");
  auto* transport = app.add_subcommand("transport", "g' o h'^-1 o h");
  with_sources(transport, "h, h', g' sources");
  auto* stabilize = app.add_subcommand("stabilize", "First repeat in a chain");
  common(stabilize);
  stabilize->add_option("--chain", chain_path, "Chain file ('-' for stdin)")
      ->required();
  auto* lemma8 = app.add_subcommand("lemma8", "Position bounds of f <=eo g");
  with_sources(lemma8, "f and g sources");
  auto* pred = app.add_subcommand("pred", "Predecessor from a pairing");
  common(pred);
  pred->add_option("--paired", paired, "Pairing file ('-' for stdin)")->required();
  pred->add_option("--a", x, "Element enumerated by g")->required();
  auto* family = app.add_subcommand("family", "Finite-variant family of a sample");
  common(family);
  family->add_option("--sample", sample,
                     "\"elements=<nats>; bound=<nat>\" or file:<path>")
      ->required();
  family->add_option("--n", n, "Number of modified elements")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Materialize an enumerator");
  common(enumerate);
  materialize(enumerate);
  enumerate->add_option("spec", spec, "Enumerator spec")->required();
  auto* chain_make = app.add_subcommand("chain-make", "Strictly descending chain");
  common(chain_make);
  chain_make->add_option("--n", n, "Value set size")->required()->check(
      CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  for (CLI::App* sub : source_subs) {
    if (*sub) sources = sub->remaining();
  }

  try {
    if (*compare) return CmdCompare(sources, s, in, out);
    if (*verify) return CmdVerify(property, n, threads, s, out);
    if (*decide) return CmdDecide(paired, x, s, in, out);
    if (*pattern) return CmdPattern(sources, s, in, out);
    if (*inversions) return CmdInversions(sources, s, in, out);
    if (*transport) return CmdTransport(sources, s, in, out);
    if (*stabilize) return CmdStabilize(chain_path, s, in, out);
    if (*lemma8) return CmdLemma8(sources, s, in, out);
    if (*pred) return CmdPred(paired, x, s, in, out);
    if (*family) return CmdFamily(sample, n, s, in, out);
    if (*enumerate) return CmdEnumerate(spec, s, out);
    if (*chain_make) return CmdChainMake(n, s, out);
  } catch (const Error& e) {
    err << "eorder: " << e.what() << "\n";
    return e.kind() == ErrorKind::kInsufficientPrefix ? kExitInsufficientPrefix
                                                      : kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace eorder::cli
