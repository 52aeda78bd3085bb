#pragma once

// Generators and brute-force oracles shared by the unit and acceptance suites.
// Oracles here never call the transform kernels they are used to check.

#include <mixpoly/anf.hpp>
#include <mixpoly/mixed.hpp>
#include <mixpoly/truth_table.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace mixpoly::testing
{

inline truth_table random_table( unsigned n, std::mt19937_64& rng )
{
  truth_table t( n );
  for ( auto& w : t.words() )
  {
    w = rng();
  }
  t.mask_unused();
  return t;
}

inline x_polynomial random_anf( unsigned n, std::mt19937_64& rng )
{
  std::vector<std::uint32_t> masks;
  auto const size = std::uint64_t{ 1 } << n;
  for ( std::uint64_t m = 0u; m < size; ++m )
  {
    if ( rng() & 1u )
      masks.push_back( static_cast<std::uint32_t>( m ) );
  }
  return x_polynomial{ n, masks };
}

inline mixed_monomial random_mixed_monomial( unsigned n, std::mt19937_64& rng )
{
  mixed_monomial m;
  for ( unsigned i = 1u; i <= n; ++i )
  {
    switch ( rng() % 3u )
    {
    case 1: m.x |= var_bit( n, i ); break;
    case 2: m.y |= var_bit( n, i ); break;
    default: break;
    }
  }
  return m;
}

inline mixed_polynomial random_mixed( unsigned n, std::size_t max_terms, std::mt19937_64& rng )
{
  std::vector<mixed_monomial> terms( rng() % ( max_terms + 1u ) );
  for ( auto& m : terms )
    m = random_mixed_monomial( n, rng );
  return make_mixed_polynomial( n, std::move( terms ) );
}

/// Value of f at a by direct definition: literal by literal, term by term.
inline bool naive_mixed_value( const mixed_polynomial& p, input_index a )
{
  bool value = false;
  for ( auto const& m : p.terms )
  {
    bool term = true;
    for ( unsigned i = 1u; i <= p.n; ++i )
    {
      bool const bit = ( a >> ( p.n - i ) ) & 1u;
      switch ( m.at( p.n, i ) )
      {
      case literal::x: term = term && bit; break;
      case literal::y: term = term && !bit; break;
      case literal::absent: break;
      }
    }
    value ^= term;
  }
  return value;
}

inline truth_table naive_mixed_table( const mixed_polynomial& p )
{
  truth_table t( p.n );
  for ( std::uint64_t a = 0u; a < t.num_bits(); ++a )
    t.set( static_cast<input_index>( a ), naive_mixed_value( p, static_cast<input_index>( a ) ) );
  return t;
}

/// ANF coefficient of monomial m is the XOR of f over all inputs that are subsets of m.
inline x_polynomial naive_anf( const truth_table& t )
{
  x_polynomial p{ t.num_vars(), {} };
  for ( std::uint64_t m = 0u; m < t.num_bits(); ++m )
  {
    bool c = false;
    for ( std::uint64_t k = 0u; k < t.num_bits(); ++k )
    {
      if ( ( k & m ) == k )
        c ^= t.get( static_cast<input_index>( k ) );
    }
    if ( c )
      p.monomials.push_back( static_cast<std::uint32_t>( m ) );
  }
  return p;
}

} // namespace mixpoly::testing
