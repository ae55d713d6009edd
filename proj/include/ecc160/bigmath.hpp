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
 * Fixed-capacity multi-precision naturals.
 *
 * A Nat is t limbs of w bits each, little-endian limb order. The shape
 * (t, w) is fixed at construction; arithmetic never widens, and operands
 * of different shapes are rejected. The default w = 16 matches a 16-bit
 * DSP word; small widths (w = 4) keep exhaustive tests tiny.
 */

#pragma once

#include "ecc160/error.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecc160 {

class Nat {
public:
    using Limb = std::uint32_t;

    static constexpr std::size_t kMaxLimbs = 64;
    static constexpr unsigned kMaxWidth = 30;
    static constexpr unsigned kDefaultWidth = 16;

    Nat() : Nat(1, kDefaultWidth) {}

    Nat(std::size_t limbs, unsigned width = kDefaultWidth) : t_(limbs), w_(width) {
        if (limbs == 0 || limbs > kMaxLimbs)
            throw Error(Errc::out_of_range, "limb count must be in [1, 64]");
        if (width == 0 || width > kMaxWidth)
            throw Error(Errc::out_of_range, "limb width must be in [1, 30]");
    }

    static Nat from_u64(std::uint64_t v, std::size_t limbs, unsigned width = kDefaultWidth) {
        Nat r(limbs, width);
        std::size_t bit = 0;
        while (v != 0) {
            if (bit >= r.capacity_bits())
                throw Error(Errc::overflow, "value does not fit in " + std::to_string(r.capacity_bits()) + " bits");
            r.limbs_[bit / width] |= static_cast<Limb>(v & 1u) << (bit % width);
            v >>= 1;
            ++bit;
        }
        return r;
    }

    /// Parses big-endian hex (either case, any digit count, optional 0x).
    static Nat from_hex(std::string_view s, std::size_t limbs, unsigned width = kDefaultWidth) {
        if (s.starts_with("0x") || s.starts_with("0X"))
            s.remove_prefix(2);
        if (s.empty())
            throw Error(Errc::invalid_hex, "empty hex string");
        Nat r(limbs, width);
        std::size_t pos = 0;
        for (auto it = s.rbegin(); it != s.rend(); ++it, pos += 4) {
            int v = hex_value(*it);
            if (v < 0)
                throw Error(Errc::invalid_hex, std::string("non-hex character '") + *it + "'");
            for (int k = 0; k < 4; ++k)
                if ((v >> k) & 1)
                    r.set_bit_or_overflow(pos + static_cast<std::size_t>(k));
        }
        return r;
    }

    static Nat from_bytes(std::span<const std::uint8_t> be, std::size_t limbs, unsigned width = kDefaultWidth) {
        Nat r(limbs, width);
        std::size_t pos = 0;
        for (auto it = be.rbegin(); it != be.rend(); ++it, pos += 8)
            for (int k = 0; k < 8; ++k)
                if ((*it >> k) & 1)
                    r.set_bit_or_overflow(pos + static_cast<std::size_t>(k));
        return r;
    }

    std::size_t limb_count() const noexcept { return t_; }
    unsigned limb_width() const noexcept { return w_; }
    std::size_t capacity_bits() const noexcept { return t_ * w_; }
    Limb limb_mask() const noexcept { return static_cast<Limb>((Limb{1} << w_) - 1); }

    Limb limb(std::size_t i) const {
        if (i >= t_)
            throw Error(Errc::out_of_range, "limb index");
        return limbs_[i];
    }
    void set_limb(std::size_t i, Limb v) {
        if (i >= t_)
            throw Error(Errc::out_of_range, "limb index");
        if (v > limb_mask())
            throw Error(Errc::overflow, "limb value exceeds 2^w");
        limbs_[i] = v;
    }
    std::span<const Limb> limbs() const noexcept { return {limbs_.data(), t_}; }

    bool bit(std::size_t i) const {
        if (i >= capacity_bits())
            throw Error(Errc::out_of_range, "bit index " + std::to_string(i));
        return (limbs_[i / w_] >> (i % w_)) & 1u;
    }

    std::size_t bit_length() const noexcept {
        for (std::size_t i = t_; i-- > 0;) {
            if (limbs_[i] != 0) {
                std::size_t n = 0;
                for (Limb v = limbs_[i]; v != 0; v >>= 1)
                    ++n;
                return i * w_ + n;
            }
        }
        return 0;
    }

    std::size_t hamming_weight() const noexcept {
        std::size_t n = 0;
        for (std::size_t i = 0; i < t_; ++i)
            n += static_cast<std::size_t>(__builtin_popcount(limbs_[i]));
        return n;
    }

    bool is_zero() const noexcept {
        for (std::size_t i = 0; i < t_; ++i)
            if (limbs_[i] != 0)
                return false;
        return true;
    }
    bool is_odd() const noexcept { return limbs_[0] & 1u; }

    bool same_shape(const Nat& o) const noexcept { return t_ == o.t_ && w_ == o.w_; }

    /// Same value in another shape; throws overflow if it does not fit.
    Nat reshaped(std::size_t limbs, unsigned width = kDefaultWidth) const {
        Nat r(limbs, width);
        std::size_t n = bit_length();
        for (std::size_t i = 0; i < n; ++i)
            if (bit(i))
                r.set_bit_or_overflow(i);
        return r;
    }

    std::uint64_t to_u64() const {
        if (bit_length() > 64)
            throw Error(Errc::overflow, "value exceeds 64 bits");
        std::uint64_t v = 0;
        for (std::size_t i = bit_length(); i-- > 0;)
            v = (v << 1) | static_cast<std::uint64_t>(bit(i));
        return v;
    }

    /// Minimal even-length lowercase hex ("00" for zero).
    std::string to_hex() const {
        std::size_t bytes = (bit_length() + 7) / 8;
        return to_hex(bytes == 0 ? 1 : bytes);
    }

    /// Fixed-width lowercase hex of exactly 2*bytes digits.
    std::string to_hex(std::size_t bytes) const {
        static constexpr char digits[] = "0123456789abcdef";
        auto raw = to_bytes(bytes);
        std::string s;
        s.reserve(2 * bytes);
        for (auto b : raw) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 15]);
        }
        return s;
    }

    std::vector<std::uint8_t> to_bytes(std::size_t bytes) const {
        if (bit_length() > 8 * bytes)
            throw Error(Errc::overflow, "value does not fit in " + std::to_string(bytes) + " bytes");
        std::vector<std::uint8_t> out(bytes, 0);
        std::size_t n = bit_length();
        for (std::size_t i = 0; i < n; ++i)
            if (bit(i))
                out[bytes - 1 - i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
        return out;
    }

    // Limbs past t_ stay zero, so member-wise equality is shape + value.
    friend bool operator==(const Nat&, const Nat&) = default;

private:
    static int hex_value(char c) noexcept {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    }

    void set_bit_or_overflow(std::size_t i) {
        if (i >= capacity_bits())
            throw Error(Errc::overflow, "value does not fit in " + std::to_string(capacity_bits()) + " bits");
        limbs_[i / w_] |= Limb{1} << (i % w_);
    }

    std::size_t t_;
    unsigned w_;
    std::array<Limb, kMaxLimbs> limbs_{};
};

struct NatCarry {
    Nat value;
    bool carry;
};

namespace detail {

inline void require_same_shape(const Nat& a, const Nat& b) {
    if (!a.same_shape(b))
        throw Error(Errc::shape_mismatch,
                    "operands have shapes (t=" + std::to_string(a.limb_count()) + ", w=" +
                        std::to_string(a.limb_width()) + ") and (t=" + std::to_string(b.limb_count()) +
                        ", w=" + std::to_string(b.limb_width()) + ")");
}

}  // namespace detail

/// (a + b) mod 2^(wt), plus the carry out of the top limb.
inline NatCarry add(const Nat& a, const Nat& b) {
    detail::require_same_shape(a, b);
    Nat r(a.limb_count(), a.limb_width());
    const unsigned w = a.limb_width();
    const Nat::Limb mask = a.limb_mask();
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.limb_count(); ++i) {
        std::uint64_t s = std::uint64_t{a.limb(i)} + b.limb(i) + carry;
        r.set_limb(i, static_cast<Nat::Limb>(s & mask));
        carry = s >> w;
    }
    return {r, carry != 0};
}

/// (a - b) mod 2^(wt); borrow is set iff a < b.
inline NatCarry sub(const Nat& a, const Nat& b) {
    detail::require_same_shape(a, b);
    Nat r(a.limb_count(), a.limb_width());
    const Nat::Limb mask = a.limb_mask();
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limb_count(); ++i) {
        std::int64_t d = std::int64_t{a.limb(i)} - b.limb(i) - borrow;
        borrow = d < 0 ? 1 : 0;
        if (d < 0)
            d += std::int64_t{mask} + 1;
        r.set_limb(i, static_cast<Nat::Limb>(d));
    }
    return {r, borrow != 0};
}

inline std::strong_ordering compare(const Nat& a, const Nat& b) {
    detail::require_same_shape(a, b);
    for (std::size_t i = a.limb_count(); i-- > 0;) {
        if (a.limb(i) != b.limb(i))
            return a.limb(i) < b.limb(i) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

/// 2a mod 2^(wt); carry is the bit shifted out of the top.
inline NatCarry shl1(const Nat& a) {
    Nat r(a.limb_count(), a.limb_width());
    const unsigned w = a.limb_width();
    const Nat::Limb mask = a.limb_mask();
    Nat::Limb in = 0;
    for (std::size_t i = 0; i < a.limb_count(); ++i) {
        Nat::Limb v = a.limb(i);
        r.set_limb(i, ((v << 1) | in) & mask);
        in = (v >> (w - 1)) & 1u;
    }
    return {r, in != 0};
}

/// floor((a + carry_in * 2^(wt)) / 2); carry reports the dropped low bit.
inline NatCarry shr1(const Nat& a, bool carry_in = false) {
    Nat r(a.limb_count(), a.limb_width());
    const unsigned w = a.limb_width();
    Nat::Limb in = carry_in ? 1u : 0u;
    for (std::size_t i = a.limb_count(); i-- > 0;) {
        Nat::Limb v = a.limb(i);
        r.set_limb(i, (v >> 1) | (in << (w - 1)));
        in = v & 1u;
    }
    return {r, in != 0};
}

inline bool bit(const Nat& a, std::size_t i) { return a.bit(i); }
inline std::size_t bit_length(const Nat& a) noexcept { return a.bit_length(); }

}  // namespace ecc160
