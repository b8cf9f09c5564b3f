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

#include "eorder/text_format.h"

#include <charconv>
#include <set>

#include "eorder/errors.h"

namespace eorder {

namespace {

constexpr std::string_view kSpace = " \t\r\n";

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!Trim(line).empty()) lines.push_back(Trim(line));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

Natural ParseNatural(std::string_view token) {
  Natural v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      token.empty()) {
    throw Error(ErrorKind::kParseError,
                "\"" + std::string(token) + "\" is not a natural number");
  }
  return v;
}

}  // namespace

std::vector<Natural> ParseNaturals(std::string_view line) {
  std::vector<Natural> out;
  line = Trim(line);
  while (!line.empty()) {
    const auto sp = line.find_first_of(kSpace);
    out.push_back(ParseNatural(line.substr(0, sp)));
    if (sp == std::string_view::npos) break;
    line = Trim(line.substr(sp));
  }
  return out;
}

PrefixListing ParsePrefixLine(std::string_view line) {
  return PrefixListing::Make(ParseNaturals(line));
}

std::string FormatPrefixLine(const PrefixListing& p) {
  std::string s;
  for (Natural v : p.values()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

std::vector<PrefixListing> ParsePrefixLines(std::string_view text) {
  std::vector<PrefixListing> out;
  for (std::string_view line : SplitLines(text)) {
    out.push_back(ParsePrefixLine(line));
  }
  return out;
}

std::string FormatPrefixLines(const std::vector<PrefixListing>& listings) {
  std::string s;
  for (const auto& p : listings) s += FormatPrefixLine(p) + "\n";
  return s;
}

PairedListings ParsePairing(std::string_view text) {
  const auto lines = SplitLines(text);
  if (lines.size() != 3 || !lines[2].starts_with("m=")) {
    throw Error(ErrorKind::kParseError,
                "a pairing is an f line, a g line and an m=<nat> line");
  }
  return PairedListings::Make(ParsePrefixLine(lines[0]),
                              ParsePrefixLine(lines[1]),
                              ParseNatural(Trim(lines[2].substr(2))));
}

std::string FormatPairing(const PairedListings& p) {
  return FormatPrefixLine(p.f()) + "\n" + FormatPrefixLine(p.g()) +
         "\nm=" + std::to_string(p.m()) + "\n";
}

SetSample ParseSetSample(std::string_view text) {
  text = Trim(text);
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw Error(ErrorKind::kParseError,
                "a sample reads \"elements=<nats>; bound=<nat>\"");
  }
  const std::string_view elems = Trim(text.substr(0, semi));
  const std::string_view bound = Trim(text.substr(semi + 1));
  if (!elems.starts_with("elements=") || !bound.starts_with("bound=")) {
    throw Error(ErrorKind::kParseError,
                "a sample reads \"elements=<nats>; bound=<nat>\"");
  }
  const auto values = ParseNaturals(elems.substr(9));
  std::set<Natural> s(values.begin(), values.end());
  if (s.size() != values.size()) {
    throw Error(ErrorKind::kParseError, "sample elements repeat");
  }
  return SetSample::Make(std::move(s), ParseNatural(Trim(bound.substr(6))));
}

std::string FormatSetSample(const SetSample& s) {
  std::string out = "elements=";
  bool first = true;
  for (Natural v : s.elements()) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out + "; bound=" + std::to_string(s.bound());
}

}  // namespace eorder
