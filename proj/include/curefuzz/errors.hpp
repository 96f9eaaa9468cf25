// Copyright 2026 The CureFuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUREFUZZ_ERRORS_HPP_
#define CUREFUZZ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace curefuzz {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Episode preconditions.
class IllegalInitialState : public Error {
 public:
  using Error::Error;
};
class InitialCrash : public Error {
 public:
  using Error::Error;
};
class AgentFailure : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Scheduling / mutation.
class EmptyCorpus : public Error {
 public:
  using Error::Error;
};
class MutationExhausted : public Error {
 public:
  using Error::Error;
};
class BudgetTooSmall : public Error {
 public:
  using Error::Error;
};
class ReplayMismatch : public Error {
 public:
  using Error::Error;
};

// Coverage / oracle.
class EmptyInput : public Error {
 public:
  using Error::Error;
};
class ResolutionTooLarge : public Error {
 public:
  using Error::Error;
};

// Adapter protocol.
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};
class Timeout : public Error {
 public:
  using Error::Error;
};
class VersionMismatch : public Error {
 public:
  using Error::Error;
};
class MalformedSpec : public Error {
 public:
  using Error::Error;
};
class RemoteError : public Error {
 public:
  using Error::Error;
};

// Configuration / artifacts.
class ConfigError : public Error {
 public:
  using Error::Error;
};
class ArtifactError : public Error {
 public:
  using Error::Error;
};

}  // namespace curefuzz

#endif  // CUREFUZZ_ERRORS_HPP_
