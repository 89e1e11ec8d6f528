// Copyright 2026 The mmdim Authors
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

#include <stdexcept>
#include <string>

namespace mmdim {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: mismatched systems, empty windows, non-positive scales.
class UsageError : public Error {
 public:
  using Error::Error;
};

// The instance is outside what an exact oracle can handle.
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

// A stated hypothesis of an operation does not hold on the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exact inequality or set relation that must hold was found violated.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mmdim
