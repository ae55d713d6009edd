/*
 * Copyright (C) 2026 The ecc160 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ecc160 {

enum class Errc {
    invalid_hex,
    overflow,
    shape_mismatch,
    out_of_range,
    even_modulus,
    zero_modulus,
    modulus_too_large,
    context_mismatch,
    not_invertible,
    unknown_curve,
    invalid_point,
    degenerate_result,
    nonce_retry,
    invalid_encoding,
    rng_failure,
    unknown_op,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::invalid_hex: return "invalid_hex";
    case Errc::overflow: return "overflow";
    case Errc::shape_mismatch: return "shape_mismatch";
    case Errc::out_of_range: return "out_of_range";
    case Errc::even_modulus: return "even_modulus";
    case Errc::zero_modulus: return "zero_modulus";
    case Errc::modulus_too_large: return "modulus_too_large";
    case Errc::context_mismatch: return "context_mismatch";
    case Errc::not_invertible: return "not_invertible";
    case Errc::unknown_curve: return "unknown_curve";
    case Errc::invalid_point: return "invalid_point";
    case Errc::degenerate_result: return "degenerate_result";
    case Errc::nonce_retry: return "nonce_retry";
    case Errc::invalid_encoding: return "invalid_encoding";
    case Errc::rng_failure: return "rng_failure";
    case Errc::unknown_op: return "unknown_op";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace ecc160
