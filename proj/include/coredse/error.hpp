// Copyright 2026 The coredse Authors
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

namespace coredse {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed space, workload or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Mismatched vector lengths, head layouts or action widths.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Non-finite activations, gradients or ratios.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Argument outside the support of a function (e.g. Beta density at 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A scaled parameter whose source bound fell below its own lower bound.
class DegenerateBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace coredse
