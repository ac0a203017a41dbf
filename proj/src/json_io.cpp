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

#include "symplectica/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace symplectica {

namespace {

const Json& require_field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string(what) + ": missing field '" + key + "'");
    }
    return j.at(key);
}

Index int_field(const Json& j, const char* key, const char* what) {
    const Json& v = require_field(j, key, what);
    if (!v.is_number_integer()) {
        throw SchemaError(std::string(what) + ": field '" + key + "' must be an integer");
    }
    return v.get<Index>();
}

double number_at(const Json& v, const char* what) {
    if (!v.is_number()) {
        throw SchemaError(std::string(what) + ": expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw SchemaError(std::string(what) + ": numbers must be finite");
    }
    return x;
}

}  // namespace

Json matrix_to_json(const RealMatrix& a) {
    Json rows = Json::array();
    for (Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < a.cols(); ++j) {
            row.push_back(a(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RealMatrix matrix_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.empty()) {
        throw SchemaError(std::string(what) + ": expected a nonempty array of rows");
    }
    const std::size_t n_rows = j.size();
    std::size_t n_cols = 0;
    for (std::size_t i = 0; i < n_rows; ++i) {
        if (!j[i].is_array() || j[i].empty()) {
            throw SchemaError(std::string(what) + ": row " + std::to_string(i) +
                              " is not a nonempty array");
        }
        if (i == 0) {
            n_cols = j[i].size();
        } else if (j[i].size() != n_cols) {
            throw SchemaError(std::string(what) + ": rows have differing lengths");
        }
    }
    RealMatrix a(static_cast<Index>(n_rows), static_cast<Index>(n_cols));
    for (std::size_t i = 0; i < n_rows; ++i) {
        for (std::size_t k = 0; k < n_cols; ++k) {
            a(static_cast<Index>(i), static_cast<Index>(k)) = number_at(j[i][k], what);
        }
    }
    return a;
}

Json vector_to_json(const RealVector& v) {
    Json arr = Json::array();
    for (Index i = 0; i < v.size(); ++i) {
        arr.push_back(v(i));
    }
    return arr;
}

RealVector vector_from_json(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw SchemaError(std::string(what) + ": expected an array");
    }
    RealVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Index>(i)) = number_at(j[i], what);
    }
    return v;
}

Json state_to_json(const GaussianState& s) {
    Json j;
    j["n"] = s.n;
    j["l"] = vector_to_json(s.mean_momentum);
    j["m"] = vector_to_json(s.mean_position);
    j["S"] = matrix_to_json(s.covariance);
    return j;
}

GaussianState state_from_json(const Json& j) {
    const Index n = int_field(j, "n", "state");
    if (n < 1) {
        throw SchemaError("state: n must be positive");
    }
    GaussianState s;
    s.n = n;
    s.mean_momentum = vector_from_json(require_field(j, "l", "state"), "state.l");
    s.mean_position = vector_from_json(require_field(j, "m", "state"), "state.m");
    s.covariance = matrix_from_json(require_field(j, "S", "state"), "state.S");
    if (s.mean_momentum.size() != n || s.mean_position.size() != n) {
        throw SchemaError("state: l and m must have length n");
    }
    if (s.covariance.rows() != 2 * n || s.covariance.cols() != 2 * n) {
        throw SchemaError("state: S must be 2n x 2n");
    }
    return s;
}

Json channel_to_json(const GaussianChannel& ch) {
    Json j;
    if (const auto* b = std::get_if<BosonicChannel>(&ch)) {
        j["kind"] = "bosonic";
        j["n"] = b->n;
        j["C"] = matrix_to_json(b->noise);
    } else if (const auto* s = std::get_if<SymplecticChannel>(&ch)) {
        j["kind"] = "symplectic";
        j["n"] = s->n;
        j["k"] = s->k;
        j["M"] = matrix_to_json(s->matrix);
    } else {
        const auto& q = std::get<QuasifreeChannel>(ch);
        j["kind"] = "quasifree";
        j["n"] = q.n;
        j["A"] = matrix_to_json(q.linear);
        j["B"] = matrix_to_json(q.noise);
    }
    return j;
}

GaussianChannel channel_from_json(const Json& j) {
    const Json& kind_field = require_field(j, "kind", "channel");
    if (!kind_field.is_string()) {
        throw SchemaError("channel: 'kind' must be a string");
    }
    const std::string kind = kind_field.get<std::string>();
    const Index n = int_field(j, "n", "channel");
    if (n < 1) {
        throw SchemaError("channel: n must be positive");
    }
    if (kind == "bosonic") {
        BosonicChannel b;
        b.n = n;
        b.noise = matrix_from_json(require_field(j, "C", "channel"), "channel.C");
        if (b.noise.rows() != 2 * n || b.noise.cols() != 2 * n) {
            throw SchemaError("channel: C must be 2n x 2n");
        }
        return b;
    }
    if (kind == "symplectic") {
        SymplecticChannel s;
        s.n = n;
        s.k = int_field(j, "k", "channel");
        if (s.k < 0) {
            throw SchemaError("channel: k must be nonnegative");
        }
        s.matrix = matrix_from_json(require_field(j, "M", "channel"), "channel.M");
        if (s.matrix.rows() != 2 * (n + s.k) || s.matrix.cols() != s.matrix.rows()) {
            throw SchemaError("channel: M must have order 2(n + k)");
        }
        return s;
    }
    if (kind == "quasifree") {
        QuasifreeChannel q;
        q.n = n;
        q.linear = matrix_from_json(require_field(j, "A", "channel"), "channel.A");
        q.noise = matrix_from_json(require_field(j, "B", "channel"), "channel.B");
        if (q.linear.rows() != 2 * n || q.linear.cols() != 2 * n ||
            q.noise.rows() != 2 * n || q.noise.cols() != 2 * n) {
            throw SchemaError("channel: A and B must be 2n x 2n");
        }
        return q;
    }
    throw SchemaError("channel: unknown kind '" + kind + "'");
}

Json dilation_to_json(const Dilation& d) {
    Json j;
    j["n"] = d.n;
    j["m"] = d.m;
    j["matrix"] = matrix_to_json(d.matrix);
    j["target"] = matrix_to_json(d.target);
    return j;
}

Dilation dilation_from_json(const Json& j) {
    Dilation d;
    d.n = int_field(j, "n", "dilation");
    d.m = int_field(j, "m", "dilation");
    if (d.n < 1 || d.m < 0) {
        throw SchemaError("dilation: need n >= 1 and m >= 0");
    }
    d.matrix = matrix_from_json(require_field(j, "matrix", "dilation"), "dilation.matrix");
    d.target = matrix_from_json(require_field(j, "target", "dilation"), "dilation.target");
    if (d.matrix.rows() != d.order() || d.matrix.cols() != d.order()) {
        throw SchemaError("dilation: matrix must have order 2(n + m)");
    }
    if (d.target.rows() != 2 * d.n || d.target.cols() != 2 * d.n) {
        throw SchemaError("dilation: target must be 2n x 2n");
    }
    return d;
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace symplectica
