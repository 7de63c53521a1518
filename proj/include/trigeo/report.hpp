// Copyright 2026 The Trigeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trigeo {

// One named check inside a verification report. `count` carries the number
// of offending items when a check fails (0 otherwise).
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  long count = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  const CheckResult* find(std::string_view name) const {
    for (const CheckResult& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  void add(std::string name, bool passed, std::string detail = "", long count = 0) {
    checks.push_back({std::move(name), passed, std::move(detail), count});
  }
};

}  // namespace trigeo
