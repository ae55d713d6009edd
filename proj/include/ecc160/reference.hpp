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
 * Oracle scalar multiplication: affine chord-and-tangent formulas over
 * Boost cpp_int with an extended-Euclid inverse at every step. Shares no
 * arithmetic with the Montgomery/Jacobian path; even the conversion of
 * Montgomery coordinates in and out is done here with cpp_int. The ladder
 * is right-to-left so its control flow differs from scalar_mult as well.
 */

#pragma once

#include "ecc160/curve.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ecc160::reference {

using Int = boost::multiprecision::cpp_int;

inline Int to_int(const Nat& v) {
    Int r = 0;
    for (std::size_t i = v.limb_count(); i-- > 0;) {
        r <<= v.limb_width();
        r += v.limb(i);
    }
    return r;
}

inline Nat from_int(Int v, std::size_t limbs, unsigned width) {
    Nat r(limbs, width);
    const Int mask = (Int(1) << width) - 1;
    for (std::size_t i = 0; i < limbs; ++i) {
        r.set_limb(i, static_cast<Nat::Limb>(v & mask));
        v >>= width;
    }
    if (v != 0)
        throw Error(Errc::overflow, "reference value does not fit");
    return r;
}

inline Int mod(const Int& v, const Int& m) {
    Int r = v % m;
    return r < 0 ? r + m : r;
}

inline Int inverse(const Int& a, const Int& m) {
    Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw Error(Errc::not_invertible, "reference inverse");
    return mod(old_s, m);
}

struct Point {
    Int x, y;
    bool inf = true;
    friend bool operator==(const Point&, const Point&) = default;
};

struct Params {
    Int p, a, b;
};

inline Point add(const Params& c, const Point& P, const Point& Q) {
    if (P.inf)
        return Q;
    if (Q.inf)
        return P;
    Int lambda;
    if (P.x == Q.x) {
        if (mod(P.y + Q.y, c.p) == 0)
            return {};
        lambda = mod((3 * P.x * P.x + c.a) * inverse(2 * P.y, c.p), c.p);
    } else {
        lambda = mod((Q.y - P.y) * inverse(Q.x - P.x, c.p), c.p);
    }
    Int x3 = mod(lambda * lambda - P.x - Q.x, c.p);
    Int y3 = mod(lambda * (P.x - x3) - P.y, c.p);
    return {x3, y3, false};
}

inline Point mul(const Params& c, Int k, Point P) {
    Point acc;
    while (k > 0) {
        if ((k & 1) != 0)
            acc = add(c, acc, P);
        P = add(c, P, P);
        k >>= 1;
    }
    return acc;
}

inline Params params_of(const Curve& c) { return {to_int(c.p()), to_int(c.a_plain()), to_int(c.b_plain())}; }

/// Montgomery-form coordinate -> plain integer, X*R^-1 mod p.
inline Int plain_of(const FieldElem& X) {
    const Int p = to_int(X.ctx().modulus());
    const Int R = Int(1) << X.ctx().n_bits();
    return mod(to_int(X.value()) * inverse(R, p), p);
}

inline Point from_affine(const AffinePoint& P) {
    if (P.infinity)
        return {};
    return {plain_of(P.x), plain_of(P.y), false};
}

inline AffinePoint to_affine_point(const Curve& c, const Point& P) {
    if (P.inf)
        return AffinePoint::at_infinity(c);
    const Int p = to_int(c.p());
    const Int R = Int(1) << c.field()->n_bits();
    const std::size_t t = c.p().limb_count();
    const unsigned w = c.p().limb_width();
    return {FieldElem(c.field(), from_int(mod(P.x * R, p), t, w)), FieldElem(c.field(), from_int(mod(P.y * R, p), t, w)),
            false};
}

}  // namespace ecc160::reference

namespace ecc160 {

/// Independent oracle for scalar_mult; same contract, disjoint code path.
inline AffinePoint reference_scalar_mult(const Curve& c, const Nat& k, const AffinePoint& P) {
    const auto params = reference::params_of(c);
    return reference::to_affine_point(c, reference::mul(params, reference::to_int(k), reference::from_affine(P)));
}

}  // namespace ecc160
