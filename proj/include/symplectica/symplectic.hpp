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

#include <cstdint>
#include <vector>

#include "symplectica/matrix.hpp"

namespace symplectica {

/// The standard symplectic form on n modes: a block diagonal of n copies of
/// [[0, -1], [1, 0]], order 2n. Coordinates are interleaved per mode.
RealMatrix symplectic_form(Index n_modes);

/// max|L^T J L - J| for square L of even order.
double symplecticity_residual(const RealMatrix& L);

/// Group membership test: L^T J L = J within `tol` (reference scale 1).
/// Throws DimensionError for non-square or odd-order input.
bool is_symplectic(const RealMatrix& L, const Tolerance& tol = {});

/// L^{-1} for symplectic L, computed as -J L^T J. The caller is responsible
/// for L actually being symplectic.
RealMatrix symplectic_inverse(const RealMatrix& L);

/// Block diagonal assembly of square blocks, in order.
RealMatrix direct_sum(const std::vector<RealMatrix>& blocks);

/// Permutation of whole modes (coordinate pairs). perm[j] is the destination
/// slot of input mode j. The returned P has 2x2 identity blocks at
/// (perm[j], j), is orthogonal and symplectic, and P (A_1 + ... + A_k) P^T
/// reorders the direct summands of a block diagonal.
RealMatrix mode_permutation(const std::vector<Index>& perm);

/// exp(J H) for a seeded random symmetric H with entries uniform on [-1, 1).
/// Deterministic per seed. The exponential is evaluated by scaling and
/// squaring with a Pade approximant and the result is self-checked: a
/// symplecticity residual above 100x the default tolerance throws
/// NumericalError.
RealMatrix random_symplectic(Index n_modes, std::uint64_t seed);

/// Seeded random symmetric positive definite matrix of the given order:
/// a Gram matrix of uniform [-1, 1) entries plus I/2. Deterministic per seed.
RealMatrix random_spd(Index order, std::uint64_t seed);

/// Smallest eigenvalue of the Hermitian matrix X + iY, computed through its
/// real symmetric embedding [[X, -Y], [Y, X]] so the numeric kernel stays
/// real. X must be symmetric and Y antisymmetric within `tol`, both of the
/// same even order; violations throw.
double hermitian_min_eigenvalue(const RealMatrix& X, const RealMatrix& Y,
                                const Tolerance& tol = {});

/// True when X + iY >= 0 up to tolerance: the smallest embedding eigenvalue
/// is at least -(tol.abs + tol.rel * max|X|).
bool hermitian_psd_check(const RealMatrix& X, const RealMatrix& Y,
                         const Tolerance& tol = {});

struct WilliamsonDecomposition {
    RealMatrix L;                // symplectic, L^T A L = diag(kappa_j I_2)
    std::vector<double> kappas;  // descending, all > 0
};

/// Symplectic normal form of a symmetric positive definite matrix:
/// L^T A L equals the direct sum of kappa_j I_2 with kappas descending.
///
/// Route: A^{-1/2} from the symmetric eigendecomposition, the skew matrix
/// K = A^{-1/2} J A^{-1/2} brought to its canonical block form by a real
/// Schur decomposition, then L = A^{-1/2} Q diag(sqrt(kappa_j) I_2).
/// Both postconditions are self-checked at 100x `tol`; failure throws
/// NumericalError rather than returning a bad decomposition.
///
/// Throws DimensionError for non-square/odd/asymmetric input and
/// NotPositiveDefiniteError when min eig(A) <= 1e-12 * max eig(A).
WilliamsonDecomposition williamson(const RealMatrix& A, const Tolerance& tol = {});

/// Moduli of the eigenvalue pairs of J A for symmetric positive definite A,
/// sorted descending. Computed along an independent route (singular values
/// of A^{1/2} J A^{1/2}), so it cross-checks williamson().
std::vector<double> symplectic_spectrum(const RealMatrix& A, const Tolerance& tol = {});

}  // namespace symplectica
