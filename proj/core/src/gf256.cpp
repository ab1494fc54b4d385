// SPDX-License-Identifier: Apache-2.0

#include "frcodes/gf256.hpp"

#include <array>

#include "frcodes/errors.hpp"

namespace frcodes::gf256 {

namespace {

struct Tables {
    std::array<std::uint8_t, 512> exp{};
    std::array<std::uint8_t, 256> log{};
};

// Discrete log/antilog tables over the generator 0x03.
Tables make_tables() {
    Tables t;
    std::uint8_t x = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[i] = x;
        t.log[x] = static_cast<std::uint8_t>(i);
        const std::uint8_t xtime =
            static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1B : 0x00));
        x = static_cast<std::uint8_t>(xtime ^ x);  // multiply by 0x03
    }
    for (int i = 255; i < 512; ++i) t.exp[i] = t.exp[i - 255];
    return t;
}

const Tables kTables = make_tables();

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    return kTables.exp[kTables.log[a] + kTables.log[b]];
}

std::uint8_t inv(std::uint8_t a) {
    if (a == 0) throw ArgumentError("0 has no inverse in GF(256)");
    return kTables.exp[(255 - kTables.log[a]) % 255];
}

std::uint8_t pow(std::uint8_t base, unsigned exponent) {
    if (exponent == 0) return 1;
    if (base == 0) return 0;
    return kTables.exp[(static_cast<unsigned>(kTables.log[base]) * exponent) % 255];
}

std::optional<std::vector<std::uint8_t>> invert_matrix(std::vector<std::uint8_t> m,
                                                       std::size_t dim) {
    std::vector<std::uint8_t> out(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) out[i * dim + i] = 1;

    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && m[pivot * dim + col] == 0) ++pivot;
        if (pivot == dim) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = 0; j < dim; ++j) {
                std::swap(m[pivot * dim + j], m[col * dim + j]);
                std::swap(out[pivot * dim + j], out[col * dim + j]);
            }
        }
        const std::uint8_t scale = inv(m[col * dim + col]);
        for (std::size_t j = 0; j < dim; ++j) {
            m[col * dim + j] = mul(m[col * dim + j], scale);
            out[col * dim + j] = mul(out[col * dim + j], scale);
        }
        for (std::size_t row = 0; row < dim; ++row) {
            if (row == col) continue;
            const std::uint8_t factor = m[row * dim + col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                m[row * dim + j] ^= mul(factor, m[col * dim + j]);
                out[row * dim + j] ^= mul(factor, out[col * dim + j]);
            }
        }
    }
    return out;
}

}  // namespace frcodes::gf256
