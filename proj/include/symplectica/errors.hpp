// Copyright 2026 The Symplectica Authors
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

namespace symplectica {

/// Base class for every failure raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Wrong shape: non-square, odd order, or mismatched dimensions.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A value-level precondition was violated (bad scalar, weight, index, ...).
class InvalidArgumentError : public Error {
  public:
    using Error::Error;
};

/// A symmetric input was required to be positive definite and is not.
class NotPositiveDefiniteError : public Error {
  public:
    using Error::Error;
};

/// The covariance inequality 2S - iJ >= 0 (or a related positivity
/// requirement) failed; `margin` carries the offending eigenvalue or
/// asymmetry so callers can report how badly it failed.
class CovarianceError : public Error {
  public:
    CovarianceError(const std::string& what, double margin)
        : Error(what), margin(margin) {}

    double margin;
};

/// A computed result failed its own consistency check. Raised instead of
/// silently returning a decomposition whose residual blew past 100x the
/// working tolerance.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// Malformed document or I/O failure at the serialization boundary.
class SchemaError : public Error {
  public:
    using Error::Error;
};

}  // namespace symplectica
