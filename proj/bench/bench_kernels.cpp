#include <mixpoly/kernels.hpp>
#include <mixpoly/reduce.hpp>
#include <mixpoly/funclib.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace k = mixpoly::kernels;

namespace
{

std::vector<std::uint64_t> random_words( unsigned n )
{
  std::mt19937_64 rng( n );
  std::vector<std::uint64_t> w( n >= 6u ? ( std::size_t{ 1 } << ( n - 6u ) ) : 1u );
  for ( auto& x : w )
    x = rng();
  return w;
}

std::vector<std::int64_t> random_signs( unsigned n )
{
  std::mt19937_64 rng( n );
  std::vector<std::int64_t> v( std::size_t{ 1 } << n );
  for ( auto& x : v )
    x = ( rng() & 1u ) ? 1 : -1;
  return v;
}

template<void ( *Kernel )( std::span<std::uint64_t>, unsigned )>
void bm_mobius( benchmark::State& state )
{
  auto const n = static_cast<unsigned>( state.range( 0 ) );
  auto w = random_words( n );
  for ( auto _ : state )
  {
    Kernel( w, n );
    benchmark::DoNotOptimize( w.data() );
  }
  state.SetItemsProcessed( state.iterations() * ( std::int64_t{ 1 } << n ) );
}

template<void ( *Kernel )( std::span<std::int64_t> )>
void bm_wht( benchmark::State& state )
{
  auto v = random_signs( static_cast<unsigned>( state.range( 0 ) ) );
  for ( auto _ : state )
  {
    // Two applications scale by 2^n; reset occasionally to stay far from overflow.
    Kernel( v );
    benchmark::DoNotOptimize( v.data() );
    state.PauseTiming();
    for ( auto& x : v )
      x = x > 0 ? 1 : -1;
    state.ResumeTiming();
  }
  state.SetItemsProcessed( state.iterations() * static_cast<std::int64_t>( v.size() ) );
}

void bm_algorithm1( benchmark::State& state )
{
  auto const t = mixpoly::prime_function( static_cast<unsigned>( state.range( 0 ) ) );
  for ( auto _ : state )
    benchmark::DoNotOptimize( mixpoly::algorithm1( t ) );
}

} // namespace

BENCHMARK( bm_mobius<k::mobius_serial> )->DenseRange( 12, 24, 4 );
BENCHMARK( bm_mobius<k::mobius_parallel> )->DenseRange( 12, 24, 4 );
BENCHMARK( bm_wht<k::wht_serial> )->DenseRange( 12, 20, 4 );
BENCHMARK( bm_wht<k::wht_parallel> )->DenseRange( 12, 20, 4 );
BENCHMARK( bm_algorithm1 )->DenseRange( 8, 14, 2 )->Unit( benchmark::kMillisecond );

BENCHMARK_MAIN();
