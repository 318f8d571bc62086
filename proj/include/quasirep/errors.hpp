// Copyright 2026 The quasirep Authors
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

namespace quasirep {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A frame that was required to span the operator space does not.
class SingularFrameError : public Error {
 public:
  using Error::Error;
};

/// Two orthonormal bases have a vanishing overlap, so the KD frame is undefined.
class NonFaithfulBasesError : public Error {
 public:
  using Error::Error;
};

/// A state or effect family fails to span, or a least-squares solve left a residual.
class SpanningError : public Error {
 public:
  using Error::Error;
};

/// The extracted state map is not injective.
class InjectivityError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be idempotent is not.
class IdempotentError : public Error {
 public:
  using Error::Error;
};

/// Two splittings do not split the same idempotent.
class SplittingMismatchError : public Error {
 public:
  using Error::Error;
};

/// An object failed validation at construction.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace quasirep
