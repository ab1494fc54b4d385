// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace frcodes::gf256 {

// Arithmetic in GF(2^8) with reduction polynomial x^8 + x^4 + x^3 + x + 1.

std::uint8_t mul(std::uint8_t a, std::uint8_t b);

/// Multiplicative inverse; throws ArgumentError for 0.
std::uint8_t inv(std::uint8_t a);

std::uint8_t pow(std::uint8_t base, unsigned exponent);

/// Gauss-Jordan inverse of a dim x dim row-major matrix.
/// Returns nullopt when the matrix is singular.
std::optional<std::vector<std::uint8_t>> invert_matrix(std::vector<std::uint8_t> m,
                                                       std::size_t dim);

}  // namespace frcodes::gf256
