#include <mixpoly/kernels.hpp>

#include <bit>
#include <cassert>
#include <cstddef>

namespace mixpoly::kernels
{

namespace
{

// Lanes whose index bit j is 0, for the six in-word stages.
constexpr std::uint64_t low_lanes[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull };

void mobius_in_word( std::span<std::uint64_t> words, unsigned stages )
{
  for ( auto& w : words )
  {
    for ( unsigned j = 0u; j < stages; ++j )
    {
      w ^= ( w & low_lanes[j] ) << ( 1u << j );
    }
  }
}

} // namespace

void mobius_serial( std::span<std::uint64_t> words, unsigned n )
{
  assert( words.size() == ( n <= 6u ? 1u : std::size_t{ 1 } << ( n - 6u ) ) );
  mobius_in_word( words, n < 6u ? n : 6u );
  for ( std::size_t step = 1u; step < words.size(); step <<= 1u )
  {
    for ( std::size_t w = 0u; w < words.size(); ++w )
    {
      if ( w & step )
      {
        words[w] ^= words[w ^ step];
      }
    }
  }
}

void mobius_parallel( std::span<std::uint64_t> words, unsigned n )
{
  if ( words.size() * 64u < parallel_threshold )
  {
    mobius_serial( words, n );
    return;
  }
  auto const size = static_cast<std::ptrdiff_t>( words.size() );
  auto* data = words.data();

#pragma omp parallel for schedule( static )
  for ( std::ptrdiff_t w = 0; w < size; ++w )
  {
    auto v = data[w];
    for ( unsigned j = 0u; j < 6u; ++j )
    {
      v ^= ( v & low_lanes[j] ) << ( 1u << j );
    }
    data[w] = v;
  }

  for ( std::ptrdiff_t step = 1; step < size; step <<= 1 )
  {
    // Each pair (lo, lo | step) is owned by exactly one iteration.
    auto const half = size / 2;
#pragma omp parallel for schedule( static )
    for ( std::ptrdiff_t i = 0; i < half; ++i )
    {
      auto const lo = ( ( i & ~( step - 1 ) ) << 1 ) | ( i & ( step - 1 ) );
      data[lo | step] ^= data[lo];
    }
  }
}

void wht_serial( std::span<std::int64_t> values )
{
  assert( std::has_single_bit( values.size() ) );
  for ( std::size_t h = 1u; h < values.size(); h <<= 1u )
  {
    for ( std::size_t base = 0u; base < values.size(); base += h << 1u )
    {
      for ( std::size_t k = base; k < base + h; ++k )
      {
        auto const a = values[k];
        auto const b = values[k + h];
        values[k] = a + b;
        values[k + h] = a - b;
      }
    }
  }
}

void wht_parallel( std::span<std::int64_t> values )
{
  if ( values.size() < parallel_threshold )
  {
    wht_serial( values );
    return;
  }
  auto const size = static_cast<std::ptrdiff_t>( values.size() );
  auto const half = size / 2;
  auto* data = values.data();
  for ( std::ptrdiff_t h = 1; h < size; h <<= 1 )
  {
#pragma omp parallel for schedule( static )
    for ( std::ptrdiff_t i = 0; i < half; ++i )
    {
      auto const lo = ( ( i & ~( h - 1 ) ) << 1 ) | ( i & ( h - 1 ) );
      auto const a = data[lo];
      auto const b = data[lo + h];
      data[lo] = a + b;
      data[lo + h] = a - b;
    }
  }
}

} // namespace mixpoly::kernels
