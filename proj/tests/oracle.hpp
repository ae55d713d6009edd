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

// Test-only helpers: wide-integer conversions that go through hex text,
// plus brute-force curve enumeration on tiny fields.

#pragma once

#include "ecc160/bigmath.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big(const ecc160::Nat& v) { return BigInt("0x" + v.to_hex()); }

inline ecc160::Nat nat(const BigInt& v, std::size_t t, unsigned w = 16) {
    std::ostringstream os;
    os << std::hex << v;
    return ecc160::Nat::from_hex(os.str(), t, w);
}

inline BigInt random_below(const BigInt& bound, std::mt19937_64& rng) {
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    for (;;) {
        BigInt v = 0;
        for (unsigned i = 0; i < bits; i += 64)
            v = (v << 64) | BigInt(rng());
        v &= (BigInt(1) << bits) - 1;
        if (v < bound)
            return v;
    }
}

inline BigInt powmod(BigInt b, BigInt e, const BigInt& m) {
    BigInt r = 1;
    b %= m;
    while (e > 0) {
        if ((e & 1) != 0)
            r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Small-curve affine arithmetic on plain 64-bit integers.
struct SmallPt {
    std::int64_t x = 0, y = 0;
    bool inf = true;
    friend bool operator==(const SmallPt&, const SmallPt&) = default;
};

struct SmallCurve {
    std::int64_t p, a, b;

    std::int64_t m(std::int64_t v) const { return ((v % p) + p) % p; }
    std::int64_t inv(std::int64_t v) const {
        std::int64_t r = 1, base = m(v), e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    }
    SmallPt add(const SmallPt& P, const SmallPt& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        std::int64_t l;
        if (P.x == Q.x) {
            if (m(P.y + Q.y) == 0) return {};
            l = m((3 * P.x * P.x + a) * inv(2 * P.y));
        } else {
            l = m((Q.y - P.y) * inv(Q.x - P.x));
        }
        std::int64_t x3 = m(l * l - P.x - Q.x);
        return {x3, m(l * (P.x - x3) - P.y), false};
    }
    SmallPt mul(std::uint64_t k, const SmallPt& P) const {
        SmallPt r;
        for (std::uint64_t i = 0; i < k; ++i) r = add(r, P);
        return r;
    }
    std::vector<SmallPt> points() const {
        std::vector<SmallPt> out{SmallPt{}};
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t y = 0; y < p; ++y)
                if (m(y * y - x * x * x - a * x - b) == 0) out.push_back({x, y, false});
        return out;
    }
};

}  // namespace oracle
