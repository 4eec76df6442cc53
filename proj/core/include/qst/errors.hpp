// Copyright 2026 The qstransfer Authors
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

#include <stdexcept>
#include <string>

namespace qst {

// Invalid chain description (N too small for the boundary, negative rate, ...).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller passed arguments of the wrong shape or outside an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula evaluated outside its domain, e.g. closed forms that need gamma > 0.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Refuses to allocate the brute-force Hilbert space beyond its size cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Step-size control gave up. Carries where and how it failed.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double time, double step, long steps)
      : std::runtime_error(what + " (t=" + std::to_string(time) +
                           ", h=" + std::to_string(step) +
                           ", steps=" + std::to_string(steps) + ")"),
        time_(time),
        step_(step),
        steps_(steps) {}

  double time() const noexcept { return time_; }
  double step() const noexcept { return step_; }
  long steps() const noexcept { return steps_; }

 private:
  double time_;
  double step_;
  long steps_;
};

}  // namespace qst
