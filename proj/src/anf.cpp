#include <mixpoly/anf.hpp>
#include <mixpoly/kernels.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mixpoly
{

x_polynomial make_x_polynomial( unsigned n, std::vector<std::uint32_t> masks )
{
  std::sort( masks.begin(), masks.end() );
  x_polynomial p{ n, {} };
  p.monomials.reserve( masks.size() );
  for ( std::size_t i = 0u; i < masks.size(); )
  {
    auto j = i;
    while ( j < masks.size() && masks[j] == masks[i] )
    {
      ++j;
    }
    if ( ( j - i ) % 2u == 1u )
    {
      p.monomials.push_back( masks[i] );
    }
    i = j;
  }
  return p;
}

x_polynomial anf_from_table( const truth_table& t )
{
  auto coeffs = t;
  kernels::mobius_parallel( coeffs.words(), coeffs.num_vars() );

  x_polynomial p{ t.num_vars(), {} };
  p.monomials.reserve( coeffs.count_ones() );
  auto const words = coeffs.words();
  for ( std::size_t w = 0u; w < words.size(); ++w )
  {
    for ( auto bits = words[w]; bits != 0u; bits &= bits - 1u )
    {
      p.monomials.push_back( static_cast<std::uint32_t>( w * 64u + std::countr_zero( bits ) ) );
    }
  }
  return p;
}

truth_table table_from_anf( const x_polynomial& p )
{
  truth_table t( p.n );
  for ( auto m : p.monomials )
  {
    t.words()[m >> 6] ^= std::uint64_t{ 1 } << ( m & 63u );
  }
  kernels::mobius_parallel( t.words(), t.num_vars() );
  return t;
}

bool anf_evaluate( const x_polynomial& p, input_index k )
{
  if ( k >= ( std::uint64_t{ 1 } << p.n ) )
  {
    throw std::out_of_range( "input index out of range" );
  }
  bool value = false;
  for ( auto m : p.monomials )
  {
    value ^= ( k & m ) == m;
  }
  return value;
}

std::string monomial_string( unsigned n, std::uint32_t mask )
{
  if ( mask == 0u )
  {
    return "1";
  }
  std::string out;
  for ( unsigned i = 1u; i <= n; ++i )
  {
    if ( mask & var_bit( n, i ) )
    {
      out += 'x';
      out += std::to_string( i );
    }
  }
  return out;
}

std::string to_string( const x_polynomial& p )
{
  if ( p.monomials.empty() )
  {
    return "0";
  }
  std::string out;
  for ( auto m : p.monomials )
  {
    if ( !out.empty() )
    {
      out += '+';
    }
    out += monomial_string( p.n, m );
  }
  return out;
}

} // namespace mixpoly
