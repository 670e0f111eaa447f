#pragma once

// Little-endian 64-bit limb primitives shared by the Fermat ring and the
// integer multiplier.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace circulant::limbs {

using Limb = std::uint64_t;
using Limbs = std::vector<Limb>;

inline constexpr unsigned kLimbBits = 64;

void trim(Limbs &x);

/// Significant-limb count (ignores high zero limbs).
std::size_t significant(std::span<const Limb> x) noexcept;

std::size_t bit_length(std::span<const Limb> x) noexcept;

/// -1, 0, 1 by value; lengths may differ.
int compare(std::span<const Limb> x, std::span<const Limb> y) noexcept;

/// acc += x; acc must be at least as long as x. Returns the carry out.
Limb add_in_place(std::span<Limb> acc, std::span<const Limb> x) noexcept;

/// acc -= x; acc must be at least as long as x. Returns the borrow out.
Limb sub_in_place(std::span<Limb> acc, std::span<const Limb> x) noexcept;

/// O(|x| |y|) product; result has |x| + |y| limbs.
Limbs mul_schoolbook(std::span<const Limb> x, std::span<const Limb> y);

/// x * 2^bits, written into `len` limbs (bits beyond are dropped).
Limbs shift_left(std::span<const Limb> x, std::size_t bits, std::size_t len);

/// floor(x / 2^bits), written into `len` limbs.
Limbs shift_right(std::span<const Limb> x, std::size_t bits, std::size_t len);

/// x mod 2^bits, written into `len` limbs.
Limbs low_bits(std::span<const Limb> x, std::size_t bits, std::size_t len);

/// acc += x * 2^bit_offset, growing acc as needed.
void add_shifted(Limbs &acc, std::span<const Limb> x, std::size_t bit_offset);

/// Bits [offset, offset + count) of x as a little-endian limb vector.
Limbs extract_bits(std::span<const Limb> x, std::size_t offset, std::size_t count);

}  // namespace circulant::limbs
