#pragma once

#include <cstdint>
#include <span>

/*! \file kernels.hpp
  \brief Butterfly transforms over dense 2^n arrays.

  Each transform comes in a serial reference form and an OpenMP form. The
  OpenMP form splits every butterfly stage over independent lanes and is
  bit-identical to the serial one; small inputs fall back to the serial loop.
*/

namespace mixpoly::kernels
{

/// Arrays shorter than this many elements are not worth a parallel region.
inline constexpr std::uint64_t parallel_threshold = std::uint64_t{ 1 } << 14;

/// In-place mod-2 Moebius transform of a packed table of 2^n bits
/// (a[k] ^= a[k ^ bit] for every k with that bit set, for each bit). Self-inverse.
void mobius_serial( std::span<std::uint64_t> words, unsigned n );
void mobius_parallel( std::span<std::uint64_t> words, unsigned n );

/// In-place unnormalized Walsh-Hadamard transform: v <- H v with
/// H[r][c] = (-1)^popcount(r & c). Applying it twice multiplies by 2^n.
void wht_serial( std::span<std::int64_t> values );
void wht_parallel( std::span<std::int64_t> values );

} // namespace mixpoly::kernels
