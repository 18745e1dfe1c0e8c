// Copyright 2026 The regexlab Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regexlab {

/// Malformed serialized input. `offset` is the byte position where decoding
/// stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A case the closed-form dispatch deliberately does not answer (K_3).
class UnsupportedCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An algorithm was invoked outside the hypotheses that make it correct,
/// e.g. a Hamiltonian cycle request on a graph violating Dirac's condition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A witness construction could not be carried out for these parameters.
/// `step()` names the stage that failed.
class ConstructionInfeasible : public std::runtime_error {
 public:
  ConstructionInfeasible(std::string step, const std::string& detail)
      : std::runtime_error(step + ": " + detail), step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

/// The exhaustive search refused a request above its configured size bound.
class OracleRefusal : public std::runtime_error {
 public:
  OracleRefusal(int requested, int bound)
      : std::runtime_error("oracle refused n=" + std::to_string(requested) +
                           " (bound " + std::to_string(bound) + ")"),
        requested_(requested),
        bound_(bound) {}

  int requested() const noexcept { return requested_; }
  int bound() const noexcept { return bound_; }

 private:
  int requested_;
  int bound_;
};

}  // namespace regexlab
