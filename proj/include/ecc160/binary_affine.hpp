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

/*
 * Affine group law on y^2 + xy = x^3 + ax^2 + b over small GF(2^m),
 * polynomial basis. Toy scale only (m <= 16); elements are the
 * coefficient bit vectors packed into an integer.
 */

#pragma once

#include "ecc160/error.hpp"

#include <cstdint>
#include <vector>

namespace ecc160::binary {

namespace detail {

inline unsigned degree(std::uint32_t poly) {
    unsigned d = 0;
    for (std::uint32_t v = poly; v > 1; v >>= 1)
        ++d;
    return d;
}

// carry-less product, no reduction
inline std::uint32_t clmul(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    for (; b != 0; b >>= 1, a <<= 1)
        if (b & 1u)
            r ^= a;
    return r;
}

inline std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
    const unsigned dm = degree(m);
    while (a != 0 && degree(a) >= dm)
        a ^= m << (degree(a) - dm);
    return a;
}

}  // namespace detail

/// True iff poly (degree >= 1) has no factor of degree 1..deg/2.
inline bool is_irreducible(std::uint32_t poly) {
    const unsigned d = detail::degree(poly);
    if (poly < 2)
        return false;
    for (std::uint32_t f = 2; detail::degree(f) <= d / 2; ++f)
        if (detail::poly_mod(poly, f) == 0)
            return false;
    return true;
}

struct BinFieldElem {
    std::uint32_t bits = 0;
    std::uint32_t modulus = 0;

    BinFieldElem() = default;
    BinFieldElem(std::uint32_t v, std::uint32_t mod) : bits(v), modulus(mod) {
        if (mod < 2 || detail::degree(mod) > 16)
            throw Error(Errc::out_of_range, "binary field degree must be in [1, 16]");
        if (v >> detail::degree(mod))
            throw Error(Errc::out_of_range, "element has degree >= m");
    }

    unsigned m() const { return detail::degree(modulus); }
    bool is_zero() const { return bits == 0; }
    friend bool operator==(const BinFieldElem&, const BinFieldElem&) = default;
};

/// GF(2^m) with a verified irreducible modulus; hands out elements.
class BinField {
public:
    explicit BinField(std::uint32_t modulus) : modulus_(modulus) {
        if (modulus < 2 || detail::degree(modulus) > 16)
            throw Error(Errc::out_of_range, "binary field degree must be in [1, 16]");
        if (!is_irreducible(modulus))
            throw Error(Errc::out_of_range, "modulus polynomial is reducible");
    }

    std::uint32_t modulus() const { return modulus_; }
    unsigned m() const { return detail::degree(modulus_); }
    std::uint32_t order() const { return 1u << m(); }
    BinFieldElem operator()(std::uint32_t v) const { return {v, modulus_}; }

private:
    std::uint32_t modulus_;
};

namespace detail {
inline void require_same(const BinFieldElem& a, const BinFieldElem& b) {
    if (a.modulus != b.modulus)
        throw Error(Errc::context_mismatch, "binary field elements have different moduli");
}
}  // namespace detail

inline BinFieldElem bin_add(const BinFieldElem& a, const BinFieldElem& b) {
    detail::require_same(a, b);
    return {a.bits ^ b.bits, a.modulus};
}

inline BinFieldElem bin_mul(const BinFieldElem& a, const BinFieldElem& b) {
    detail::require_same(a, b);
    return {detail::poly_mod(detail::clmul(a.bits, b.bits), a.modulus), a.modulus};
}

/// Extended Euclid over GF(2)[z].
inline BinFieldElem bin_inv(const BinFieldElem& a) {
    if (a.is_zero())
        throw Error(Errc::not_invertible, "zero has no inverse in GF(2^m)");
    std::uint32_t r0 = a.modulus, r1 = a.bits, s0 = 0, s1 = 1;
    while (r1 > 1) {
        std::uint32_t q = 0;
        std::uint32_t r = r0;
        const unsigned d1 = detail::degree(r1);
        while (r != 0 && detail::degree(r) >= d1) {
            const unsigned sh = detail::degree(r) - d1;
            q ^= 1u << sh;
            r ^= r1 << sh;
        }
        std::uint32_t s = s0 ^ detail::clmul(q, s1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    return {detail::poly_mod(s1, a.modulus), a.modulus};
}

inline BinFieldElem bin_div(const BinFieldElem& a, const BinFieldElem& b) { return bin_mul(a, bin_inv(b)); }

struct BinAffinePoint {
    BinFieldElem x;
    BinFieldElem y;
    bool infinity = true;

    static BinAffinePoint at_infinity() { return {}; }
    friend bool operator==(const BinAffinePoint& p, const BinAffinePoint& q) {
        if (p.infinity || q.infinity)
            return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
};

/// y^2 + xy = x^3 + ax^2 + b
inline bool bin_is_on_curve(const BinAffinePoint& P, const BinFieldElem& a, const BinFieldElem& b) {
    if (P.infinity)
        return true;
    const BinFieldElem xx = bin_mul(P.x, P.x);
    const BinFieldElem lhs = bin_add(bin_mul(P.y, P.y), bin_mul(P.x, P.y));
    const BinFieldElem rhs = bin_add(bin_add(bin_mul(xx, P.x), bin_mul(a, xx)), b);
    return lhs == rhs;
}

/// lambda = x1 + y1/x1, x2 = a + lambda + lambda^2, y2 = (x1 + x2)lambda + x2 + y1
inline BinAffinePoint bin_point_double(const BinAffinePoint& P, const BinFieldElem& a) {
    if (P.infinity || P.x.is_zero())
        return BinAffinePoint::at_infinity();
    const BinFieldElem lambda = bin_add(P.x, bin_div(P.y, P.x));
    const BinFieldElem x2 = bin_add(bin_add(a, lambda), bin_mul(lambda, lambda));
    const BinFieldElem y2 = bin_add(bin_add(bin_mul(bin_add(P.x, x2), lambda), x2), P.y);
    return {x2, y2, false};
}

/// lambda = (y1 + y2)/(x1 + x2), x3 = a + lambda + lambda^2 + x1 + x2,
/// y3 = (x2 + x3)lambda + x3 + y2
inline BinAffinePoint bin_point_add(const BinAffinePoint& P, const BinAffinePoint& Q, const BinFieldElem& a) {
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    if (P.x == Q.x) {
        if (P.y == Q.y)
            return bin_point_double(P, a);
        return BinAffinePoint::at_infinity();  // Q = -P = (x, x + y)
    }
    const BinFieldElem lambda = bin_div(bin_add(P.y, Q.y), bin_add(P.x, Q.x));
    const BinFieldElem x3 = bin_add(bin_add(bin_add(bin_add(a, lambda), bin_mul(lambda, lambda)), P.x), Q.x);
    const BinFieldElem y3 = bin_add(bin_add(bin_mul(bin_add(Q.x, x3), lambda), x3), Q.y);
    return {x3, y3, false};
}

inline BinAffinePoint bin_negate(const BinAffinePoint& P) {
    if (P.infinity)
        return P;
    return {P.x, bin_add(P.x, P.y), false};
}

/// MSB-first double-and-add driver.
inline BinAffinePoint bin_scalar_mult(std::uint64_t k, const BinAffinePoint& P, const BinFieldElem& a) {
    BinAffinePoint acc = BinAffinePoint::at_infinity();
    for (int i = 63; i >= 0; --i) {
        acc = bin_point_double(acc, a);
        if ((k >> i) & 1u)
            acc = bin_point_add(acc, P, a);
    }
    return acc;
}

/// All points of the curve, Θ first.
inline std::vector<BinAffinePoint> bin_curve_points(const BinField& f, const BinFieldElem& a, const BinFieldElem& b) {
    std::vector<BinAffinePoint> pts{BinAffinePoint::at_infinity()};
    for (std::uint32_t x = 0; x < f.order(); ++x)
        for (std::uint32_t y = 0; y < f.order(); ++y) {
            BinAffinePoint P{f(x), f(y), false};
            if (bin_is_on_curve(P, a, b))
                pts.push_back(P);
        }
    return pts;
}

}  // namespace ecc160::binary
