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

#include <Eigen/Dense>

#include "symplectica/errors.hpp"

namespace symplectica {

// Dense real matrices are the universal carrier type of the library.
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Absolute/relative tolerance pair used by every residual test.
/// A residual R measured against a reference scale passes when
///   max|R| <= abs + rel * reference_scale.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    double bound(double reference_scale) const { return abs + rel * reference_scale; }
};

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const RealMatrix& a);

bool all_finite(const RealMatrix& a);

/// max|A - A^T|; 0 for anything exactly symmetric.
double asymmetry(const RealMatrix& a);

bool is_symmetric(const RealMatrix& a, const Tolerance& tol = {});

/// Throws DimensionError unless `a` is square.
void require_square(const RealMatrix& a, const char* who);

/// Throws DimensionError unless `a` is square with even positive order.
void require_even_order(const RealMatrix& a, const char* who);

}  // namespace symplectica
