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

#include <string>

#include <json.hpp>

#include "symplectica/channels.hpp"
#include "symplectica/dilation.hpp"
#include "symplectica/gaussian.hpp"

namespace symplectica {

using Json = nlohmann::json;

// Parsers check shapes and finiteness and throw SchemaError on violations;
// mathematical validity (covariance inequality, symplecticity, ...) is the
// caller's concern so that invalid objects can still be loaded and reported.

Json matrix_to_json(const RealMatrix& a);
RealMatrix matrix_from_json(const Json& j, const char* what);

Json vector_to_json(const RealVector& v);
RealVector vector_from_json(const Json& j, const char* what);

// {"n": ..., "l": [...], "m": [...], "S": [[...]]}
Json state_to_json(const GaussianState& s);
GaussianState state_from_json(const Json& j);

// {"kind": "bosonic",    "n": ..., "C": [[...]]}
// {"kind": "symplectic", "n": ..., "k": ..., "M": [[...]]}
// {"kind": "quasifree",  "n": ..., "A": [[...]], "B": [[...]]}
Json channel_to_json(const GaussianChannel& ch);
GaussianChannel channel_from_json(const Json& j);

// {"n": ..., "m": ..., "matrix": [[...]], "target": [[...]]}
Json dilation_to_json(const Dilation& d);
Dilation dilation_from_json(const Json& j);

/// 64-bit FNV-1a of the given bytes, as a fixed-width hex string.
std::string digest_hex(const std::string& bytes);

}  // namespace symplectica
