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

#include "symplectica/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "symplectica/rng.hpp"

namespace symplectica {

namespace {

double min_eigenvalue_sym(const RealMatrix& a) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (a + a.transpose()),
                                                 Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// B + i(A^T J A - J) >= 0 up to tol; B must already be known symmetric.
bool quasifree_embedding_psd(const RealMatrix& linear, const RealMatrix& noise,
                             const Tolerance& tol) {
    const RealMatrix j = symplectic_form(linear.rows() / 2);
    RealMatrix skew = linear.transpose() * j * linear - j;
    skew = 0.5 * (skew - skew.transpose()).eval();
    const RealMatrix sym = 0.5 * (noise + noise.transpose());
    return hermitian_psd_check(sym, skew, tol);
}

}  // namespace

Index channel_modes(const GaussianChannel& ch) {
    return std::visit([](const auto& c) { return c.n; }, ch);
}

bool channel_valid(const GaussianChannel& ch, const Tolerance& tol) {
    if (const auto* b = std::get_if<BosonicChannel>(&ch)) {
        if (b->n < 1 || b->noise.rows() != 2 * b->n || b->noise.cols() != 2 * b->n ||
            !all_finite(b->noise)) {
            return false;
        }
        if (asymmetry(b->noise) > tol.bound(max_abs(b->noise))) {
            return false;
        }
        return min_eigenvalue_sym(b->noise) >= -tol.bound(max_abs(b->noise));
    }
    if (const auto* s = std::get_if<SymplecticChannel>(&ch)) {
        if (s->n < 1 || s->k < 0 || s->matrix.rows() != 2 * (s->n + s->k) ||
            s->matrix.cols() != s->matrix.rows() || !all_finite(s->matrix)) {
            return false;
        }
        return is_symplectic(s->matrix, tol);
    }
    const auto& q = std::get<QuasifreeChannel>(ch);
    if (q.n < 1 || q.linear.rows() != 2 * q.n || q.linear.cols() != 2 * q.n ||
        q.noise.rows() != 2 * q.n || q.noise.cols() != 2 * q.n ||
        !all_finite(q.linear) || !all_finite(q.noise)) {
        return false;
    }
    if (asymmetry(q.noise) > tol.bound(max_abs(q.noise))) {
        return false;
    }
    return quasifree_embedding_psd(q.linear, q.noise, tol);
}

void require_valid(const GaussianChannel& ch, const Tolerance& tol) {
    if (!channel_valid(ch, tol)) {
        const char* kind = std::holds_alternative<BosonicChannel>(ch)   ? "bosonic"
                           : std::holds_alternative<SymplecticChannel>(ch) ? "symplectic"
                                                                           : "quasifree";
        throw InvalidArgumentError(std::string("channel of kind '") + kind +
                                   "' violates its validity condition");
    }
}

bool quasifree_valid(const RealMatrix& linear, const RealMatrix& noise, const Tolerance& tol) {
    require_even_order(linear, "quasifree_valid");
    if (noise.rows() != linear.rows() || noise.cols() != linear.cols()) {
        throw DimensionError("quasifree_valid: A and B must have equal order");
    }
    if (asymmetry(noise) > tol.bound(max_abs(noise))) {
        throw InvalidArgumentError("quasifree_valid: B is not symmetric");
    }
    return quasifree_embedding_psd(linear, noise, tol);
}

GaussianState apply(const GaussianChannel& ch, const GaussianState& state,
                    const Tolerance& tol) {
    require_valid(ch, tol);
    if (channel_modes(ch) != state.n) {
        throw DimensionError("apply: channel acts on " + std::to_string(channel_modes(ch)) +
                             " modes, state has " + std::to_string(state.n));
    }
    if (const auto* b = std::get_if<BosonicChannel>(&ch)) {
        RealMatrix cov = state.covariance + b->noise;
        cov = 0.5 * (cov + cov.transpose()).eval();
        return new_state(state.mean_momentum, state.mean_position, std::move(cov), tol);
    }
    RealMatrix a;      // linear part acting as S -> a^T S a
    RealMatrix noise;  // additive part, already including its 1/2
    if (const auto* s = std::get_if<SymplecticChannel>(&ch)) {
        a = s->matrix.topLeftCorner(2 * s->n, 2 * s->n);
        const RealMatrix q = s->matrix.bottomLeftCorner(2 * s->k, 2 * s->n);
        noise = 0.5 * q.transpose() * q;
    } else {
        const auto& q = std::get<QuasifreeChannel>(ch);
        a = q.linear;
        noise = 0.5 * q.noise;
    }
    const RealVector mu =
        a.transpose() * mu_from_means(state.mean_momentum, state.mean_position);
    RealVector momentum, position;
    means_from_mu(mu, momentum, position);
    RealMatrix cov = a.transpose() * state.covariance * a + noise;
    cov = 0.5 * (cov + cov.transpose()).eval();
    return new_state(std::move(momentum), std::move(position), std::move(cov), tol);
}

SymplecticChannel compose_symplectic(const SymplecticChannel& outer,
                                     const SymplecticChannel& inner,
                                     const Tolerance& tol) {
    if (outer.n != inner.n) {
        throw DimensionError("compose_symplectic: mode counts differ");
    }
    require_valid(outer, tol);
    require_valid(inner, tol);

    const Index n2 = 2 * outer.n;
    const Index l2 = 2 * outer.k;
    const Index m2 = 2 * inner.k;
    const Index total = n2 + l2 + m2;

    // Layout [system, outer ancillas, inner ancillas]: extend the outer
    // matrix by identity on the inner ancillas and vice versa, then multiply
    // so the inner map acts first.
    RealMatrix outer_ext = RealMatrix::Identity(total, total);
    outer_ext.topLeftCorner(n2 + l2, n2 + l2) = outer.matrix;

    RealMatrix inner_ext = RealMatrix::Identity(total, total);
    inner_ext.topLeftCorner(n2, n2) = inner.matrix.topLeftCorner(n2, n2);
    inner_ext.block(0, n2 + l2, n2, m2) = inner.matrix.topRightCorner(n2, m2);
    inner_ext.block(n2 + l2, 0, m2, n2) = inner.matrix.bottomLeftCorner(m2, n2);
    inner_ext.block(n2 + l2, n2 + l2, m2, m2) = inner.matrix.bottomRightCorner(m2, m2);

    SymplecticChannel out;
    out.n = outer.n;
    out.k = outer.k + inner.k;
    out.matrix = inner_ext * outer_ext;
    if (symplecticity_residual(out.matrix) > 100.0 * tol.bound(1.0)) {
        throw NumericalError("compose_symplectic: combined matrix lost symplecticity");
    }
    return out;
}

QuasifreeChannel symplectic_to_quasifree(const SymplecticChannel& ch) {
    if (ch.matrix.rows() != 2 * (ch.n + ch.k) || ch.matrix.rows() != ch.matrix.cols()) {
        throw DimensionError("symplectic_to_quasifree: matrix order must be 2(n + k)");
    }
    QuasifreeChannel out;
    out.n = ch.n;
    out.linear = ch.matrix.topLeftCorner(2 * ch.n, 2 * ch.n);
    const RealMatrix q = ch.matrix.bottomLeftCorner(2 * ch.k, 2 * ch.n);
    RealMatrix noise = q.transpose() * q;
    out.noise = 0.5 * (noise + noise.transpose());
    return out;
}

QuasifreeChannel dilation_to_channel(const Dilation& d) {
    QuasifreeChannel out;
    out.n = d.n;
    out.linear = d.target;
    const RealMatrix q = d.matrix.bottomLeftCorner(2 * d.m, 2 * d.n);
    RealMatrix noise = q.transpose() * q;
    out.noise = 0.5 * (noise + noise.transpose());
    return out;
}

bool in_K(const RealMatrix& S, const Tolerance& tol) {
    require_even_order(S, "in_K");
    if (!all_finite(S)) {
        return false;
    }
    if (asymmetry(S) > tol.bound(max_abs(S))) {
        return false;
    }
    if (min_eigenvalue_sym(S) < -tol.bound(max_abs(S))) {
        return false;
    }
    const RealMatrix sym = S + S.transpose();  // = 2S up to rounding
    const RealMatrix j = symplectic_form(S.rows() / 2);
    return hermitian_psd_check(sym, -j, tol);
}

bool in_F0(const RealMatrix& linear, const RealMatrix& noise, const Tolerance& tol) {
    require_even_order(linear, "in_F0");
    if (noise.rows() != linear.rows() || noise.cols() != linear.cols()) {
        throw DimensionError("in_F0: A and B must have equal order");
    }
    if (!all_finite(linear) || !all_finite(noise)) {
        return false;
    }
    if (asymmetry(noise) > tol.bound(max_abs(noise))) {
        return false;
    }
    if (min_eigenvalue_sym(noise) < -tol.bound(max_abs(noise))) {
        return false;
    }
    return quasifree_embedding_psd(linear, noise, tol);
}

MembershipVerdict sample_F_membership(const RealMatrix& linear, const RealMatrix& noise,
                                      int trials, std::uint64_t seed, const Tolerance& tol) {
    require_even_order(linear, "sample_F_membership");
    if (noise.rows() != linear.rows() || noise.cols() != linear.cols()) {
        throw DimensionError("sample_F_membership: A and B must have equal order");
    }
    if (trials < 1) {
        throw InvalidArgumentError("sample_F_membership: need at least one trial");
    }
    const Index n = linear.rows() / 2;
    const RealMatrix half_noise = 0.25 * (noise + noise.transpose());  // (1/2) B, symmetrized

    for (int t = 0; t < trials; ++t) {
        RealMatrix sample;
        if (t == 0) {
            // The vacuum covariance is the canonical boundary probe.
            sample = 0.5 * RealMatrix::Identity(2 * n, 2 * n);
        } else {
            SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(t)));
            const bool interior = rng.uniform() < 0.7;
            const RealMatrix g = random_symplectic(n, rng.next());
            if (interior) {
                RealVector diag(2 * n);
                for (Index r = 0; r < n; ++r) {
                    const double kappa = rng.uniform_in(0.5, 2.5);
                    diag(2 * r) = kappa;
                    diag(2 * r + 1) = kappa;
                }
                sample = g.transpose() * diag.asDiagonal() * g;
            } else {
                sample = 0.5 * g.transpose() * g;
            }
            sample = 0.5 * (sample + sample.transpose()).eval();
        }
        RealMatrix image = linear.transpose() * sample * linear + half_noise;
        image = 0.5 * (image + image.transpose()).eval();
        if (!in_K(image, tol)) {
            MembershipVerdict verdict;
            verdict.member = false;
            verdict.counterexample = std::move(sample);
            verdict.trials = t + 1;
            return verdict;
        }
    }
    MembershipVerdict verdict;
    verdict.member = true;
    verdict.trials = trials;
    return verdict;
}

}  // namespace symplectica
