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

// Line-oriented text formats.
//
//   prefix     "2 4 6"                 base-10 naturals, single spaces
//   chain      one prefix per line
//   pairing    f line, g line, "m=<nat>"
//   sample     "elements=2 4 6; bound=9"
//
// Parsers accept surrounding whitespace and a trailing newline; formatters
// emit exactly the canonical form. All parse failures throw
// Error(kParseError) unless the parsed content itself violates a type
// invariant, in which case that invariant's error propagates.

#ifndef EORDER_TEXT_FORMAT_H_
#define EORDER_TEXT_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "eorder/extraction.h"
#include "eorder/prefix.h"

namespace eorder {

std::vector<Natural> ParseNaturals(std::string_view line);

PrefixListing ParsePrefixLine(std::string_view line);
std::string FormatPrefixLine(const PrefixListing& p);

// Blank lines are skipped.
std::vector<PrefixListing> ParsePrefixLines(std::string_view text);
std::string FormatPrefixLines(const std::vector<PrefixListing>& listings);

PairedListings ParsePairing(std::string_view text);
std::string FormatPairing(const PairedListings& p);

SetSample ParseSetSample(std::string_view text);
std::string FormatSetSample(const SetSample& s);

}  // namespace eorder

#endif  // EORDER_TEXT_FORMAT_H_
