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
 * SHA-1 (RFC 3174). Used as the 160-bit message digest for signatures.
 */

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace ecc160 {

using Sha1Digest = std::array<std::uint8_t, 20>;

class Sha1 {
public:
    Sha1() { reset(); }

    void reset() {
        h_ = {0x67452301u, 0xefcdab89u, 0x98badcfeu, 0x10325476u, 0xc3d2e1f0u};
        buffered_ = 0;
        length_ = 0;
    }

    void update(std::span<const std::uint8_t> data) {
        for (std::uint8_t byte : data) {
            block_[buffered_++] = byte;
            if (buffered_ == 64) {
                compress();
                buffered_ = 0;
            }
        }
        length_ += static_cast<std::uint64_t>(data.size());
    }

    void update(std::string_view s) {
        update(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
    }

    Sha1Digest finish() {
        const std::uint64_t bit_len = length_ * 8;
        block_[buffered_++] = 0x80;
        if (buffered_ > 56) {
            while (buffered_ < 64)
                block_[buffered_++] = 0;
            compress();
            buffered_ = 0;
        }
        while (buffered_ < 56)
            block_[buffered_++] = 0;
        for (int i = 7; i >= 0; --i)
            block_[buffered_++] = static_cast<std::uint8_t>(bit_len >> (8 * i));
        compress();

        Sha1Digest out{};
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t k = 0; k < 4; ++k)
                out[4 * i + k] = static_cast<std::uint8_t>(h_[i] >> (24 - 8 * k));
        reset();
        return out;
    }

private:
    static std::uint32_t rotl(std::uint32_t v, int n) { return (v << n) | (v >> (32 - n)); }

    void compress() {
        std::array<std::uint32_t, 80> w{};
        for (std::size_t i = 0; i < 16; ++i)
            w[i] = (std::uint32_t{block_[4 * i]} << 24) | (std::uint32_t{block_[4 * i + 1]} << 16) |
                   (std::uint32_t{block_[4 * i + 2]} << 8) | std::uint32_t{block_[4 * i + 3]};
        for (std::size_t i = 16; i < 80; ++i)
            w[i] = rotl(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

        std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4];
        for (std::size_t i = 0; i < 80; ++i) {
            std::uint32_t f, k;
            if (i < 20) {
                f = (b & c) | (~b & d);
                k = 0x5a827999u;
            } else if (i < 40) {
                f = b ^ c ^ d;
                k = 0x6ed9eba1u;
            } else if (i < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8f1bbcdcu;
            } else {
                f = b ^ c ^ d;
                k = 0xca62c1d6u;
            }
            const std::uint32_t tmp = rotl(a, 5) + f + e + k + w[i];
            e = d;
            d = c;
            c = rotl(b, 30);
            b = a;
            a = tmp;
        }
        h_[0] += a;
        h_[1] += b;
        h_[2] += c;
        h_[3] += d;
        h_[4] += e;
    }

    std::array<std::uint32_t, 5> h_{};
    std::array<std::uint8_t, 64> block_{};
    std::size_t buffered_ = 0;
    std::uint64_t length_ = 0;
};

inline Sha1Digest sha1_digest(std::span<const std::uint8_t> message) {
    Sha1 h;
    h.update(message);
    return h.finish();
}

inline Sha1Digest sha1_digest(std::string_view message) {
    Sha1 h;
    h.update(message);
    return h.finish();
}

}  // namespace ecc160
