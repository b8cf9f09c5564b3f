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

// Producers of listing prefixes.
//
// Closed-form enumerators emit without cost. Halting-set enumerators dovetail
// a halting model: in round r every code 1..r receives one simulation step,
// so a code that halts on its d-th step is emitted in round code + d - 1.
// Codes emitted in the same round come out in ascending order. Each round
// costs one unit of budget.
//
// Enumerator spec grammar:
//
//   even                   2, 4, 6, ...
//   nminus:<k>             every natural except k, ascending (k >= 1)
//   asc:<v>(,<v>)*         the listed values, ascending, then exhausted
//   halt:<model>           dovetailed halting codes of a built-in model

#ifndef EORDER_ENUMERATORS_H_
#define EORDER_ENUMERATORS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "eorder/prefix.h"

namespace eorder {

// Remaining work units an enumerator may spend.
struct WorkBudget {
  std::uint64_t remaining = 0;
};

// Stateful, single consumer. Never yields a value twice.
class Enumerator {
 public:
  virtual ~Enumerator() = default;

  // The next value, or nullopt when none can be produced within `budget`
  // (spent units are deducted).
  virtual std::optional<Natural> Next(WorkBudget& budget) = 0;
  virtual std::string spec() const = 0;
};

class HaltingModel {
 public:
  virtual ~HaltingModel() = default;

  virtual std::string name() const = 0;
  // Steps until halting is observed (>= 1), or nullopt if the code runs for
  // more than `limit` steps. Deterministic.
  virtual std::optional<std::uint64_t> Steps(Natural code,
                                             std::uint64_t limit) const = 0;
};

// Collatz iterations from `code` down to 1, plus one observation step.
class CollatzModel final : public HaltingModel {
 public:
  std::string name() const override { return "collatz"; }
  std::optional<std::uint64_t> Steps(Natural code,
                                     std::uint64_t limit) const override;
};

// Two-register machine. Registers start at R0 = code, R1 = 0.
//
// Program decoding of code c: while c > 0, take op = c mod 5, c = c div 5,
// and for the k-th instruction (0-based)
//   op 0      HALT
//   op 1, 2   INC R(op - 1)
//   op 3, 4   DECJZ R(op - 3), t   with t = c mod (k + 2), c = c div (k + 2)
// DECJZ r, t jumps to instruction t when R(r) = 0, otherwise decrements R(r)
// and falls through. Every executed instruction costs one step; running off
// the end of the program halts and costs one step, as does HALT.
class RegisterMachineModel final : public HaltingModel {
 public:
  enum class Op { kHalt, kInc, kDecJz };
  struct Instruction {
    Op op = Op::kHalt;
    int reg = 0;
    std::size_t target = 0;

    friend bool operator==(const Instruction&, const Instruction&) = default;
  };

  static std::vector<Instruction> Decode(Natural code);

  std::string name() const override { return "rm"; }
  std::optional<std::uint64_t> Steps(Natural code,
                                     std::uint64_t limit) const override;
};

std::vector<std::shared_ptr<const HaltingModel>> BuiltinModels();
// nullptr when no built-in model has that name.
std::shared_ptr<const HaltingModel> FindModel(std::string_view name);

// Runs at most `max_rounds` rounds over its lifetime, further capped by the
// budget handed to each Next().
class DovetailEnumerator final : public Enumerator {
 public:
  DovetailEnumerator(std::shared_ptr<const HaltingModel> model,
                     std::uint64_t max_rounds);

  std::optional<Natural> Next(WorkBudget& budget) override;
  std::string spec() const override { return "halt:" + model_->name(); }

  std::uint64_t rounds_run() const { return round_; }

 private:
  std::shared_ptr<const HaltingModel> model_;
  std::uint64_t max_rounds_;
  std::uint64_t round_ = 0;
  struct Unresolved {
    std::uint64_t deadline;  // first round the silent stretch fails to cover
    Natural code;
    std::uint64_t checked;   // steps known not to halt

    bool operator>(const Unresolved& o) const {
      return std::tie(deadline, code) > std::tie(o.deadline, o.code);
    }
  };

  std::priority_queue<Unresolved, std::vector<Unresolved>,
                      std::greater<Unresolved>>
      unresolved_;
  // (emission round, code) for codes known to halt but not yet emitted.
  std::set<std::pair<std::uint64_t, Natural>> pending_;
  std::vector<Natural> ready_;
  std::size_t ready_pos_ = 0;
};

std::unique_ptr<Enumerator> DovetailHalting(
    std::shared_ptr<const HaltingModel> model, std::uint64_t budget);

// Throws Error(kSpecParseError, offset) with the 0-based character offset.
std::unique_ptr<Enumerator> ParseSpec(std::string_view text);

// The first min(n, reachable within budget) values of `e`.
PrefixListing TakePrefix(Enumerator& e, std::size_t n, std::uint64_t budget);

}  // namespace eorder

#endif  // EORDER_ENUMERATORS_H_
