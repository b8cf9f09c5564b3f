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

#include "eorder/enumerators.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <set>

#include "eorder/errors.h"

namespace eorder {

namespace {

constexpr std::uint64_t kInitialStepLimit = 64;

class EvenEnumerator final : public Enumerator {
 public:
  std::optional<Natural> Next(WorkBudget&) override { return 2 * ++i_; }
  std::string spec() const override { return "even"; }

 private:
  Natural i_ = 0;
};

class AllButOneEnumerator final : public Enumerator {
 public:
  explicit AllButOneEnumerator(Natural skipped) : skipped_(skipped) {}

  std::optional<Natural> Next(WorkBudget&) override {
    ++i_;
    return i_ < skipped_ ? i_ : i_ + 1;
  }
  std::string spec() const override {
    return "nminus:" + std::to_string(skipped_);
  }

 private:
  Natural skipped_;
  Natural i_ = 0;
};

class AscendingEnumerator final : public Enumerator {
 public:
  explicit AscendingEnumerator(std::vector<Natural> values)
      : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
  }

  std::optional<Natural> Next(WorkBudget&) override {
    if (pos_ == values_.size()) return std::nullopt;
    return values_[pos_++];
  }
  std::string spec() const override {
    std::string s = "asc:";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(values_[i]);
    }
    return s;
  }

 private:
  std::vector<Natural> values_;
  std::size_t pos_ = 0;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  std::unique_ptr<Enumerator> Parse() {
    if (Consume("even")) {
      ExpectEnd();
      return std::make_unique<EvenEnumerator>();
    }
    if (Consume("nminus:")) {
      const Natural k = ParsePositive();
      ExpectEnd();
      return std::make_unique<AllButOneEnumerator>(k);
    }
    if (Consume("asc:")) {
      std::vector<Natural> values;
      std::set<Natural> seen;
      for (;;) {
        const std::size_t at = pos_;
        const Natural v = ParsePositive();
        if (!seen.insert(v).second) Fail(at, "a value not listed before");
        values.push_back(v);
        if (!Consume(",")) break;
      }
      ExpectEnd();
      return std::make_unique<AscendingEnumerator>(std::move(values));
    }
    if (Consume("halt:")) {
      const std::size_t at = pos_;
      const std::string_view name = text_.substr(pos_);
      auto model = FindModel(name);
      if (!model) Fail(at, "a built-in model name (collatz, rm)");
      return DovetailHalting(std::move(model),
                             std::numeric_limits<std::uint64_t>::max());
    }
    Fail(pos_, "one of even, nminus:, asc:, halt:");
  }

 private:
  bool Consume(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Natural ParsePositive() {
    Natural v = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin == end || *begin < '0' || *begin > '9') {
      Fail(pos_, "a natural number");
    }
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc()) Fail(pos_, "a natural number in range");
    if (v == 0) Fail(pos_, "a natural number >= 1");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  void ExpectEnd() {
    if (pos_ != text_.size()) Fail(pos_, "end of spec");
  }

  [[noreturn]] void Fail(std::size_t at, const std::string& expected) {
    throw Error(ErrorKind::kSpecParseError,
                "at offset " + std::to_string(at) + " in \"" +
                    std::string(text_) + "\": expected " + expected,
                at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<std::uint64_t> CollatzModel::Steps(Natural code,
                                                 std::uint64_t limit) const {
  if (code == 0) return std::nullopt;
  std::uint64_t steps = 1;
  Natural x = code;
  while (x != 1) {
    if (steps >= limit) return std::nullopt;
    x = (x % 2 == 0) ? x / 2 : 3 * x + 1;
    ++steps;
  }
  if (steps > limit) return std::nullopt;
  return steps;
}

std::vector<RegisterMachineModel::Instruction> RegisterMachineModel::Decode(
    Natural code) {
  std::vector<Instruction> program;
  while (code > 0) {
    const std::size_t k = program.size();
    const Natural op = code % 5;
    code /= 5;
    switch (op) {
      case 0:
        program.push_back({Op::kHalt, 0, 0});
        break;
      case 1:
      case 2:
        program.push_back({Op::kInc, static_cast<int>(op - 1), 0});
        break;
      default: {
        const Natural targets = k + 2;
        const auto target = static_cast<std::size_t>(code % targets);
        code /= targets;
        program.push_back({Op::kDecJz, static_cast<int>(op - 3), target});
        break;
      }
    }
  }
  return program;
}

std::optional<std::uint64_t> RegisterMachineModel::Steps(
    Natural code, std::uint64_t limit) const {
  const std::vector<Instruction> program = Decode(code);
  std::array<std::uint64_t, 2> reg = {code, 0};
  std::size_t pc = 0;
  for (std::uint64_t step = 1; step <= limit; ++step) {
    if (pc >= program.size()) return step;
    const Instruction& ins = program[pc];
    switch (ins.op) {
      case Op::kHalt:
        return step;
      case Op::kInc:
        ++reg[ins.reg];
        ++pc;
        break;
      case Op::kDecJz:
        if (reg[ins.reg] == 0) {
          pc = ins.target;
        } else {
          --reg[ins.reg];
          ++pc;
        }
        break;
    }
  }
  return std::nullopt;
}

std::vector<std::shared_ptr<const HaltingModel>> BuiltinModels() {
  return {std::make_shared<CollatzModel>(),
          std::make_shared<RegisterMachineModel>()};
}

std::shared_ptr<const HaltingModel> FindModel(std::string_view name) {
  for (auto& m : BuiltinModels()) {
    if (m->name() == name) return m;
  }
  return nullptr;
}

DovetailEnumerator::DovetailEnumerator(
    std::shared_ptr<const HaltingModel> model, std::uint64_t max_rounds)
    : model_(std::move(model)), max_rounds_(max_rounds) {}

std::optional<Natural> DovetailEnumerator::Next(WorkBudget& budget) {
  while (ready_pos_ == ready_.size()) {
    if (round_ >= max_rounds_ || budget.remaining == 0) return std::nullopt;
    --budget.remaining;
    const std::uint64_t r = ++round_;

    // Code r takes its first step this round. Codes not yet known to halt are
    // re-simulated, with a doubled limit, once their known-silent stretch no
    // longer covers the current round.
    unresolved_.push({r, r, 0});
    while (!unresolved_.empty() && unresolved_.top().deadline <= r) {
      Unresolved u = unresolved_.top();
      unresolved_.pop();
      const std::uint64_t need = r - u.code + 1;
      const std::uint64_t limit =
          std::max({need, 2 * u.checked, kInitialStepLimit});
      if (auto d = model_->Steps(u.code, limit)) {
        pending_.insert({u.code + *d - 1, u.code});
      } else {
        unresolved_.push({u.code + limit, u.code, limit});
      }
    }

    ready_.clear();
    ready_pos_ = 0;
    while (!pending_.empty() && pending_.begin()->first == r) {
      ready_.push_back(pending_.begin()->second);
      pending_.erase(pending_.begin());
    }
  }
  return ready_[ready_pos_++];
}

std::unique_ptr<Enumerator> DovetailHalting(
    std::shared_ptr<const HaltingModel> model, std::uint64_t budget) {
  return std::make_unique<DovetailEnumerator>(std::move(model), budget);
}

std::unique_ptr<Enumerator> ParseSpec(std::string_view text) {
  return SpecParser(text).Parse();
}

PrefixListing TakePrefix(Enumerator& e, std::size_t n, std::uint64_t budget) {
  WorkBudget b{budget};
  std::vector<Natural> values;
  values.reserve(n);
  while (values.size() < n) {
    auto v = e.Next(b);
    if (!v) break;
    values.push_back(*v);
  }
  return PrefixListing::Make(std::move(values));
}

}  // namespace eorder
