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
 * ECDH, ECMQV and ECDSA over a CurveParams.
 *
 * Shared secrets are the raw big-endian x-coordinate padded to the field
 * length; no KDF is applied. Every peer public key is fully validated
 * (not Θ, on the curve, n*P = Θ) before use.
 */

#pragma once

#include "ecc160/hex.hpp"
#include "ecc160/params.hpp"
#include "ecc160/sha1.hpp"

#include <functional>
#include <span>
#include <vector>

namespace ecc160 {

struct Signature {
    Nat r;
    Nat s;
    friend bool operator==(const Signature&, const Signature&) = default;
};

using DigestFn = std::function<std::vector<std::uint8_t>(std::span<const std::uint8_t>)>;

inline std::vector<std::uint8_t> sha1_digest_fn(std::span<const std::uint8_t> msg) {
    auto d = sha1_digest(msg);
    return {d.begin(), d.end()};
}

/// Test stub: the message itself, cut to its first 20 bytes.
inline std::vector<std::uint8_t> identity_digest_fn(std::span<const std::uint8_t> msg) {
    return {msg.begin(), msg.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(msg.size(), 20))};
}

namespace detail {

inline const MontCtx& scalar_ctx(const CurveParams& c) {
    if (!c.scalar)
        throw Error(Errc::out_of_range, "curve order is not odd; scalar arithmetic unavailable");
    return *c.scalar;
}

inline Nat mod_n(const CurveParams& c, const Nat& v) { return reduce(scalar_ctx(c), v); }

/// Value in the scalar shape, or nullopt if it cannot fit.
inline std::optional<Nat> as_scalar(const CurveParams& c, const Nat& v) {
    try {
        return v.reshaped(c.n().limb_count(), c.n().limb_width());
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline bool in_scalar_range(const CurveParams& c, const std::optional<Nat>& v) {
    return v && !v->is_zero() && compare(*v, c.n()) == std::strong_ordering::less;
}

inline FieldElem scalar_elem(const CurveParams& c, const Nat& v) { return to_mont(c.scalar, mod_n(c, v)); }

}  // namespace detail

/// Throws invalid_point unless P is a finite curve point of order dividing n.
inline void validate_public_key(const CurveParams& c, const AffinePoint& P) {
    if (P.infinity)
        throw Error(Errc::invalid_point, "public key is the point at infinity");
    if (!is_on_curve(c.curve, P))
        throw Error(Errc::invalid_point, "public key is not on " + c.name());
    if (!scalar_mult(c.curve, c.n(), P).infinity)
        throw Error(Errc::invalid_point, "public key is not in the order-n subgroup");
}

inline std::vector<std::uint8_t> ecdh_shared(const CurveParams& c, const KeyPair& mine, const AffinePoint& peer) {
    validate_public_key(c, peer);
    AffinePoint S = scalar_mult(c.curve, mine.d, peer);
    if (S.infinity)
        throw Error(Errc::degenerate_result, "shared point is the point at infinity");
    return S.x_plain().to_bytes(c.curve.field_bytes());
}

/// r = x(kG) mod n, s = k^-1 (e + d r) mod n. Throws nonce_retry if r or s is 0.
inline Signature ecdsa_sign(const CurveParams& c, const KeyPair& key, const Nat& e, const Nat& k) {
    auto ks = detail::as_scalar(c, k);
    if (!detail::in_scalar_range(c, ks))
        throw Error(Errc::out_of_range, "nonce must be in [1, n-1]");
    AffinePoint R = scalar_mult(c.curve, *ks, c.G);
    Nat r = detail::mod_n(c, R.x_plain());
    if (r.is_zero())
        throw Error(Errc::nonce_retry, "r = 0, choose another nonce");
    FieldElem kinv = mont_inv(detail::scalar_elem(c, *ks));
    FieldElem sum = mod_add(detail::scalar_elem(c, e), mont_mul(detail::scalar_elem(c, key.d), detail::scalar_elem(c, r)));
    Nat s = from_mont(mont_mul(kinv, sum));
    if (s.is_zero())
        throw Error(Errc::nonce_retry, "s = 0, choose another nonce");
    return {r, s};
}

/// Draws fresh nonces until signing succeeds.
template <WordSource G>
Signature ecdsa_sign_random(const CurveParams& c, const KeyPair& key, const Nat& e, G& rng, unsigned max_attempts = 4096) {
    const std::size_t bits = c.n().bit_length();
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        Nat k = random_bits(bits, c.n().limb_count(), c.n().limb_width(), rng);
        if (k.is_zero() || compare(k, c.n()) != std::strong_ordering::less)
            continue;
        try {
            return ecdsa_sign(c, key, e, k);
        } catch (const Error& err) {
            if (err.code() != Errc::nonce_retry)
                throw;
        }
    }
    throw Error(Errc::rng_failure, "no usable nonce after " + std::to_string(max_attempts) + " draws");
}

/// Out-of-range r or s, or an unusable public key, verify as false.
inline bool ecdsa_verify(const CurveParams& c, const AffinePoint& pub, const Nat& e, const Signature& sig) {
    auto r = detail::as_scalar(c, sig.r);
    auto s = detail::as_scalar(c, sig.s);
    if (!detail::in_scalar_range(c, r) || !detail::in_scalar_range(c, s))
        return false;
    if (pub.infinity || !is_on_curve(c.curve, pub))
        return false;
    FieldElem w = mont_inv(detail::scalar_elem(c, *s));
    Nat u1 = from_mont(mont_mul(detail::scalar_elem(c, e), w));
    Nat u2 = from_mont(mont_mul(detail::scalar_elem(c, *r), w));
    OpCounters ctr;
    JacobianPoint X = point_add(c.curve, scalar_mult_jacobian(c.curve, u1, c.G, ctr),
                                scalar_mult_jacobian(c.curve, u2, pub, ctr), ctr);
    if (X.is_infinity())
        return false;
    return detail::mod_n(c, to_affine(c.curve, X).x_plain()) == *r;
}

/// (x mod 2^f) + 2^f with f = ceil(bitlen(n) / 2).
inline Nat mqv_avf(const CurveParams& c, const AffinePoint& P) {
    const std::size_t f = (c.n().bit_length() + 1) / 2;
    const Nat x = P.x_plain();
    Nat v = c.scalar_zero();
    const unsigned w = v.limb_width();
    auto set = [&](std::size_t i) { v.set_limb(i / w, v.limb(i / w) | (Nat::Limb{1} << (i % w))); };
    for (std::size_t i = 0; i < f && i < x.capacity_bits(); ++i)
        if (x.bit(i))
            set(i);
    set(f);
    return v;
}

/// Two-ephemeral MQV core without key confirmation:
/// s = (k + avf(R) d) mod n, S = h s (R' + avf(R') Q'), output x(S).
inline std::vector<std::uint8_t> ecmqv_shared(const CurveParams& c, const KeyPair& static_kp, const KeyPair& eph_kp,
                                              const AffinePoint& peer_static, const AffinePoint& peer_eph) {
    validate_public_key(c, peer_static);
    validate_public_key(c, peer_eph);
    FieldElem implicit = mod_add(detail::scalar_elem(c, eph_kp.d),
                                 mont_mul(detail::scalar_elem(c, mqv_avf(c, eph_kp.Q)), detail::scalar_elem(c, static_kp.d)));
    Nat s = from_mont(implicit);
    AffinePoint T = affine_add(c.curve, peer_eph, scalar_mult(c.curve, mqv_avf(c, peer_eph), peer_static));
    AffinePoint S = scalar_mult(c.curve, s, T);
    if (c.h() != 1)
        S = scalar_mult(c.curve, Nat::from_u64(c.h(), 2, 16), S);
    if (S.infinity)
        throw Error(Errc::degenerate_result, "MQV shared point is the point at infinity");
    return S.x_plain().to_bytes(c.curve.field_bytes());
}

/// Digest as an integer, cut to its top bitlen(n) bits if longer, then mod n.
inline Nat digest_for_curve(std::span<const std::uint8_t> message, const CurveParams& c,
                            const DigestFn& digest = sha1_digest_fn) {
    const auto h = digest(message);
    if (h.size() * 8 > Nat::kMaxLimbs * Nat::kDefaultWidth)
        throw Error(Errc::overflow, "digest longer than 1024 bits");
    Nat v = Nat::from_bytes(h, Nat::kMaxLimbs, Nat::kDefaultWidth);
    const std::size_t nbits = c.n().bit_length();
    for (std::size_t len = v.bit_length(); len > nbits; --len)
        v = shr1(v).value;
    return detail::mod_n(c, v);
}

inline Nat digest_for_curve(std::string_view message, const CurveParams& c, const DigestFn& digest = sha1_digest_fn) {
    return digest_for_curve(std::span(reinterpret_cast<const std::uint8_t*>(message.data()), message.size()), c, digest);
}

// ------------------------------------------------------------------------
// Serialization

inline std::string signature_to_hex(const CurveParams& c, const Signature& sig) {
    return sig.r.to_hex(c.scalar_bytes()) + sig.s.to_hex(c.scalar_bytes());
}

inline Signature signature_from_hex(const CurveParams& c, std::string_view hex) {
    const std::size_t digits = 2 * c.scalar_bytes();
    if (hex.size() != 2 * digits)
        throw Error(Errc::invalid_encoding, "signature must be " + std::to_string(2 * digits) + " hex digits");
    const std::size_t t = c.n().limb_count();
    const unsigned w = c.n().limb_width();
    return {Nat::from_hex(hex.substr(0, digits), t, w), Nat::from_hex(hex.substr(digits), t, w)};
}

inline std::string point_to_hex(const CurveParams& c, const AffinePoint& P) {
    return bytes_to_hex(encode_point(c.curve, P));
}

inline AffinePoint point_from_hex(const CurveParams& c, std::string_view hex) {
    return decode_point(c.curve, hex_to_bytes(hex));
}

}  // namespace ecc160
