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

#include <complex>
#include <cstdint>
#include <vector>

#include "symplectica/symplectic.hpp"

namespace symplectica {

/// Parameter triple of a Gaussian state on n modes: mean momenta, mean
/// positions, and a covariance S satisfying 2S - iJ >= 0.
struct GaussianState {
    Index n = 0;
    RealVector mean_momentum;  // length n
    RealVector mean_position;  // length n
    RealMatrix covariance;     // 2n x 2n, symmetric
};

/// Validating constructor. Throws DimensionError on shape mismatch,
/// InvalidArgumentError on non-finite entries, and CovarianceError (carrying
/// the offending margin) when the covariance is asymmetric beyond `tol` or
/// the embedding of 2S - iJ has an eigenvalue below -(tol.abs + tol.rel
/// max|2S|).
GaussianState new_state(RealVector mean_momentum, RealVector mean_position,
                        RealMatrix covariance, const Tolerance& tol = {});

bool state_valid(const GaussianState& s, const Tolerance& tol = {});

/// Smallest eigenvalue of the real embedding of 2S - iJ. Nonnegative (up to
/// tolerance) exactly for valid covariances.
double covariance_margin(const RealMatrix& covariance);

GaussianState vacuum_state(Index n_modes);

/// Single-mode state with covariance kappa I_2; kappa >= 1/2 required.
GaussianState thermal_state(double kappa, const Tolerance& tol = {});

/// Vacuum displaced by the given complex amplitudes, one per mode.
GaussianState coherent_state(const std::vector<std::complex<double>>& amplitudes);

/// Interleaved mean vector (l_1, -m_1, ..., l_n, -m_n).
RealVector mu_from_means(const RealVector& mean_momentum, const RealVector& mean_position);
void means_from_mu(const RealVector& mu, RealVector& mean_momentum, RealVector& mean_position);

/// Phase-space displacement by u = s + it: momenta shift by sqrt(2) t,
/// positions by sqrt(2) s, covariance unchanged.
GaussianState displace(const GaussianState& state,
                       const std::vector<std::complex<double>>& u);

/// mu -> (L^{-1})^T mu and S -> (L^{-1})^T S L^{-1} for symplectic L.
GaussianState symplectic_transform(const GaussianState& state, const RealMatrix& L,
                                   const Tolerance& tol = {});

/// Product state: concatenated means, block diagonal covariance.
GaussianState tensor(const GaussianState& a, const GaussianState& b);

/// Reduced state on the given modes (distinct indices; their order is kept,
/// so this also reorders modes).
GaussianState marginal(const GaussianState& state, const std::vector<Index>& keep);

/// Williamson parameters of the covariance, descending. At least 1/2 (up to
/// tolerance) for valid states.
std::vector<double> williamson_parameters(const GaussianState& state);

/// True when every Williamson parameter is within 1e-7 of 1/2.
bool is_pure(const GaussianState& state);

/// Entropy contribution of one Williamson parameter, in nats:
/// g(1/2) = 0, g(k) = (k + 1/2) ln(k + 1/2) - (k - 1/2) ln(k - 1/2).
double mode_entropy(double kappa);

/// Sum of mode entropies of the Williamson parameters, in nats.
double von_neumann_entropy(const GaussianState& state);

/// Symplectic pair (L, M) with S = (L^T L + M^T M) / 4. Built per Williamson
/// mode from diag(a, 1/a) factors with a^2 = 2 kappa + sqrt(4 kappa^2 - 1).
struct PurificationPair {
    RealMatrix L;
    RealMatrix M;
};

PurificationPair purification_covariance(const RealMatrix& covariance,
                                         const Tolerance& tol = {});

/// Seeded random valid state: a thermal direct sum conjugated by a random
/// symplectic, with uniform random means. Deterministic per seed.
GaussianState random_state(Index n_modes, std::uint64_t seed);

}  // namespace symplectica
