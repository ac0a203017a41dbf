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

#include "symplectica/gaussian.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "symplectica/rng.hpp"

namespace symplectica {

namespace {

constexpr double kPurityTolerance = 1e-7;

void require_state_shapes(const RealVector& mean_momentum, const RealVector& mean_position,
                          const RealMatrix& covariance) {
    const Index n = mean_momentum.size();
    if (n < 1 || mean_position.size() != n) {
        throw DimensionError("gaussian state: mean vectors must share a positive length");
    }
    if (covariance.rows() != 2 * n || covariance.cols() != 2 * n) {
        throw DimensionError("gaussian state: covariance must be 2n x 2n");
    }
}

}  // namespace

double covariance_margin(const RealMatrix& covariance) {
    require_even_order(covariance, "covariance_margin");
    const RealMatrix sym = covariance + covariance.transpose();  // = 2S for symmetric S
    const RealMatrix j = symplectic_form(covariance.rows() / 2);
    // Loose symmetry tolerance: by this point `sym` is symmetric by
    // construction, the caller handles asymmetry reporting.
    return hermitian_min_eigenvalue(sym, -j, Tolerance{1e-6, 1e-6});
}

GaussianState new_state(RealVector mean_momentum, RealVector mean_position,
                        RealMatrix covariance, const Tolerance& tol) {
    require_state_shapes(mean_momentum, mean_position, covariance);
    if (!mean_momentum.allFinite() || !mean_position.allFinite() || !all_finite(covariance)) {
        throw InvalidArgumentError("gaussian state: entries must be finite");
    }
    const double asym = asymmetry(covariance);
    if (asym > tol.bound(max_abs(covariance))) {
        throw CovarianceError("gaussian state: covariance is not symmetric", asym);
    }
    const double margin = covariance_margin(covariance);
    if (margin < -tol.bound(2.0 * max_abs(covariance))) {
        throw CovarianceError("gaussian state: 2S - iJ has a negative eigenvalue", margin);
    }
    GaussianState s;
    s.n = mean_momentum.size();
    s.mean_momentum = std::move(mean_momentum);
    s.mean_position = std::move(mean_position);
    s.covariance = std::move(covariance);
    return s;
}

bool state_valid(const GaussianState& s, const Tolerance& tol) {
    try {
        new_state(s.mean_momentum, s.mean_position, s.covariance, tol);
        return true;
    } catch (const Error&) {
        return false;
    }
}

GaussianState vacuum_state(Index n_modes) {
    if (n_modes < 1) {
        throw DimensionError("vacuum_state: mode count must be positive");
    }
    GaussianState s;
    s.n = n_modes;
    s.mean_momentum = RealVector::Zero(n_modes);
    s.mean_position = RealVector::Zero(n_modes);
    s.covariance = 0.5 * RealMatrix::Identity(2 * n_modes, 2 * n_modes);
    return s;
}

GaussianState thermal_state(double kappa, const Tolerance& tol) {
    if (!(kappa >= 0.5 - tol.abs)) {
        throw InvalidArgumentError("thermal_state: kappa must be at least 1/2, got " +
                                   std::to_string(kappa));
    }
    GaussianState s = vacuum_state(1);
    s.covariance = kappa * RealMatrix::Identity(2, 2);
    return s;
}

GaussianState coherent_state(const std::vector<std::complex<double>>& amplitudes) {
    if (amplitudes.empty()) {
        throw DimensionError("coherent_state: at least one amplitude required");
    }
    return displace(vacuum_state(static_cast<Index>(amplitudes.size())), amplitudes);
}

RealVector mu_from_means(const RealVector& mean_momentum, const RealVector& mean_position) {
    if (mean_momentum.size() != mean_position.size()) {
        throw DimensionError("mu_from_means: mean vectors must have equal length");
    }
    RealVector mu(2 * mean_momentum.size());
    for (Index i = 0; i < mean_momentum.size(); ++i) {
        mu(2 * i) = mean_momentum(i);
        mu(2 * i + 1) = -mean_position(i);
    }
    return mu;
}

void means_from_mu(const RealVector& mu, RealVector& mean_momentum, RealVector& mean_position) {
    if (mu.size() % 2 != 0 || mu.size() == 0) {
        throw DimensionError("means_from_mu: interleaved vector must have even length");
    }
    const Index n = mu.size() / 2;
    mean_momentum.resize(n);
    mean_position.resize(n);
    for (Index i = 0; i < n; ++i) {
        mean_momentum(i) = mu(2 * i);
        mean_position(i) = -mu(2 * i + 1);
    }
}

GaussianState displace(const GaussianState& state,
                       const std::vector<std::complex<double>>& u) {
    if (static_cast<Index>(u.size()) != state.n) {
        throw DimensionError("displace: amplitude count must match the mode count");
    }
    const double root2 = std::sqrt(2.0);
    RealVector momentum = state.mean_momentum;
    RealVector position = state.mean_position;
    for (Index i = 0; i < state.n; ++i) {
        momentum(i) += root2 * u[static_cast<std::size_t>(i)].imag();
        position(i) += root2 * u[static_cast<std::size_t>(i)].real();
    }
    return new_state(std::move(momentum), std::move(position), state.covariance);
}

GaussianState symplectic_transform(const GaussianState& state, const RealMatrix& L,
                                   const Tolerance& tol) {
    if (L.rows() != 2 * state.n || L.cols() != 2 * state.n) {
        throw DimensionError("symplectic_transform: matrix order must be 2n");
    }
    if (!is_symplectic(L, tol)) {
        throw InvalidArgumentError("symplectic_transform: matrix is not symplectic");
    }
    const RealMatrix inv = symplectic_inverse(L);
    const RealMatrix inv_t = inv.transpose();
    const RealVector mu = inv_t * mu_from_means(state.mean_momentum, state.mean_position);
    RealVector momentum, position;
    means_from_mu(mu, momentum, position);
    RealMatrix cov = inv_t * state.covariance * inv;
    cov = 0.5 * (cov + cov.transpose()).eval();
    return new_state(std::move(momentum), std::move(position), std::move(cov), tol);
}

GaussianState tensor(const GaussianState& a, const GaussianState& b) {
    GaussianState s;
    s.n = a.n + b.n;
    s.mean_momentum.resize(s.n);
    s.mean_momentum << a.mean_momentum, b.mean_momentum;
    s.mean_position.resize(s.n);
    s.mean_position << a.mean_position, b.mean_position;
    s.covariance = direct_sum({a.covariance, b.covariance});
    return new_state(s.mean_momentum, s.mean_position, s.covariance);
}

GaussianState marginal(const GaussianState& state, const std::vector<Index>& keep) {
    if (keep.empty()) {
        throw InvalidArgumentError("marginal: must keep at least one mode");
    }
    std::vector<bool> seen(static_cast<std::size_t>(state.n), false);
    for (Index mode : keep) {
        if (mode < 0 || mode >= state.n) {
            throw InvalidArgumentError("marginal: mode index " + std::to_string(mode) +
                                       " out of range");
        }
        if (seen[static_cast<std::size_t>(mode)]) {
            throw InvalidArgumentError("marginal: duplicate mode index " +
                                       std::to_string(mode));
        }
        seen[static_cast<std::size_t>(mode)] = true;
    }
    const Index k = static_cast<Index>(keep.size());
    RealVector momentum(k), position(k);
    RealMatrix cov(2 * k, 2 * k);
    for (Index a = 0; a < k; ++a) {
        momentum(a) = state.mean_momentum(keep[static_cast<std::size_t>(a)]);
        position(a) = state.mean_position(keep[static_cast<std::size_t>(a)]);
        for (Index b = 0; b < k; ++b) {
            cov.block(2 * a, 2 * b, 2, 2) = state.covariance.block(
                2 * keep[static_cast<std::size_t>(a)], 2 * keep[static_cast<std::size_t>(b)], 2, 2);
        }
    }
    return new_state(std::move(momentum), std::move(position), std::move(cov));
}

std::vector<double> williamson_parameters(const GaussianState& state) {
    const RealMatrix sym = 0.5 * (state.covariance + state.covariance.transpose());
    return symplectic_spectrum(sym);
}

bool is_pure(const GaussianState& state) {
    for (double kappa : williamson_parameters(state)) {
        if (std::abs(kappa - 0.5) > kPurityTolerance) {
            return false;
        }
    }
    return true;
}

double mode_entropy(double kappa) {
    if (!(kappa > 0.0)) {
        throw InvalidArgumentError("mode_entropy: parameter must be positive");
    }
    // Valid parameters sit at or above 1/2; clamp the tolerance band below.
    const double excess = kappa - 0.5;
    if (excess <= 0.0) {
        return 0.0;
    }
    return (kappa + 0.5) * std::log(kappa + 0.5) - excess * std::log(excess);
}

double von_neumann_entropy(const GaussianState& state) {
    double total = 0.0;
    for (double kappa : williamson_parameters(state)) {
        total += mode_entropy(kappa);
    }
    return total;
}

PurificationPair purification_covariance(const RealMatrix& covariance, const Tolerance& tol) {
    const WilliamsonDecomposition wd = williamson(covariance, tol);
    const Index n = covariance.rows() / 2;
    RealVector f1 = RealVector::Ones(2 * n);
    RealVector f2 = RealVector::Ones(2 * n);
    for (Index r = 0; r < n; ++r) {
        const double kappa = wd.kappas[static_cast<std::size_t>(r)];
        if (kappa < 0.5 - tol.bound(1.0)) {
            throw CovarianceError("purification_covariance: covariance is not a valid "
                                  "state covariance",
                                  kappa - 0.5);
        }
        const double radicand = std::max(4.0 * kappa * kappa - 1.0, 0.0);
        const double a = std::sqrt(2.0 * kappa + std::sqrt(radicand));
        f1(2 * r) = a;
        f1(2 * r + 1) = 1.0 / a;
        f2(2 * r) = 1.0 / a;
        f2(2 * r + 1) = a;
    }
    const RealMatrix w_inv = symplectic_inverse(wd.L);
    PurificationPair pair;
    pair.L = f1.asDiagonal() * w_inv;
    pair.M = f2.asDiagonal() * w_inv;

    const RealMatrix recon =
        0.25 * (pair.L.transpose() * pair.L + pair.M.transpose() * pair.M);
    const double residual = max_abs(recon - covariance);
    if (residual > tol.bound(max_abs(covariance))) {
        throw NumericalError("purification_covariance: reconstruction residual " +
                             std::to_string(residual));
    }
    return pair;
}

GaussianState random_state(Index n_modes, std::uint64_t seed) {
    if (n_modes < 1) {
        throw DimensionError("random_state: mode count must be positive");
    }
    SplitMix64 rng(seed);
    RealVector diag(2 * n_modes);
    for (Index r = 0; r < n_modes; ++r) {
        const double kappa = rng.uniform_in(0.5, 2.5);
        diag(2 * r) = kappa;
        diag(2 * r + 1) = kappa;
    }
    const RealMatrix g = random_symplectic(n_modes, rng.next());
    RealMatrix cov = g.transpose() * diag.asDiagonal() * g;
    cov = 0.5 * (cov + cov.transpose()).eval();
    RealVector momentum(n_modes), position(n_modes);
    for (Index i = 0; i < n_modes; ++i) {
        momentum(i) = rng.uniform_in(-2.0, 2.0);
        position(i) = rng.uniform_in(-2.0, 2.0);
    }
    return new_state(std::move(momentum), std::move(position), std::move(cov));
}

}  // namespace symplectica
