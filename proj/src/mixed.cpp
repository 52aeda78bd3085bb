#include <mixpoly/errors.hpp>
#include <mixpoly/mixed.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace mixpoly
{

namespace
{

unsigned code( const mixed_monomial& m, std::uint32_t bit ) noexcept
{
  return ( m.x & bit ) ? 1u : ( ( m.y & bit ) ? 2u : 0u );
}

void check_input( unsigned n, input_index a )
{
  if ( a >= ( std::uint64_t{ 1 } << n ) )
  {
    throw std::out_of_range( "input index out of range" );
  }
}

} // namespace

unsigned mixed_monomial::degree() const noexcept
{
  return static_cast<unsigned>( std::popcount( x ) + std::popcount( y ) );
}

bool canonical_less( const mixed_monomial& a, const mixed_monomial& b ) noexcept
{
  auto const diff = ( a.x ^ b.x ) | ( a.y ^ b.y );
  if ( diff == 0u )
  {
    return false;
  }
  auto const bit = std::bit_floor( diff );
  return code( a, bit ) < code( b, bit );
}

std::size_t mixed_polynomial::num_literals() const noexcept
{
  std::size_t total = 0u;
  for ( auto const& m : terms )
  {
    total += m.degree();
  }
  return total;
}

mixed_polynomial make_mixed_polynomial( unsigned n, std::vector<mixed_monomial> terms )
{
  std::sort( terms.begin(), terms.end(), canonical_less );
  mixed_polynomial p{ n, {} };
  p.terms.reserve( terms.size() );
  for ( std::size_t i = 0u; i < terms.size(); )
  {
    auto j = i;
    while ( j < terms.size() && terms[j] == terms[i] )
    {
      ++j;
    }
    if ( ( j - i ) % 2u == 1u )
    {
      p.terms.push_back( terms[i] );
    }
    i = j;
  }
  return p;
}

mixed_monomial dnf_atom( input_index a, unsigned n )
{
  check_input( n, a );
  auto const full = static_cast<std::uint32_t>( ( std::uint64_t{ 1 } << n ) - 1u );
  return mixed_monomial{ a, ~a & full };
}

mixed_polynomial theorem2_representation( const truth_table& t )
{
  auto const n = t.num_vars();
  auto const split = split_support( t );
  auto const half = t.num_bits() / 2u;

  std::vector<mixed_monomial> terms;
  if ( split.s1.size() <= half )
  {
    terms.reserve( split.s1.size() );
    for ( auto a : split.s1 )
    {
      terms.push_back( dnf_atom( a, n ) );
    }
  }
  else
  {
    terms.reserve( split.s0.size() + 1u );
    terms.push_back( mixed_monomial{} );
    for ( auto a : split.s0 )
    {
      terms.push_back( dnf_atom( a, n ) );
    }
  }
  return make_mixed_polynomial( n, std::move( terms ) );
}

bool mixed_evaluate( const mixed_polynomial& p, input_index a )
{
  check_input( p.n, a );
  bool value = false;
  for ( auto const& m : p.terms )
  {
    value ^= m.evaluate( a );
  }
  return value;
}

truth_table table_from_mixed( const mixed_polynomial& p )
{
  truth_table t( p.n );
  auto const full = static_cast<std::uint32_t>( t.num_bits() - 1u );
  auto words = t.words();
  for ( auto const& m : p.terms )
  {
    auto const free = full & ~( m.x | m.y );
    auto sub = free;
    while ( true )
    {
      auto const k = m.x | sub;
      words[k >> 6] ^= std::uint64_t{ 1 } << ( k & 63u );
      if ( sub == 0u )
        break;
      sub = ( sub - 1u ) & free;
    }
  }
  return t;
}

x_polynomial substitute_y( const mixed_polynomial& p )
{
  // Dense coefficient buffer over all 2^n monomials; toggling implements mod-2 cancellation.
  truth_table coeffs( p.n );
  auto words = coeffs.words();
  for ( auto const& m : p.terms )
  {
    auto sub = m.y;
    while ( true )
    {
      auto const k = m.x | sub;
      words[k >> 6] ^= std::uint64_t{ 1 } << ( k & 63u );
      if ( sub == 0u )
        break;
      sub = ( sub - 1u ) & m.y;
    }
  }

  x_polynomial out{ p.n, {} };
  for ( std::size_t w = 0u; w < words.size(); ++w )
  {
    for ( auto bits = words[w]; bits != 0u; bits &= bits - 1u )
    {
      out.monomials.push_back( static_cast<std::uint32_t>( w * 64u + std::countr_zero( bits ) ) );
    }
  }
  return out;
}

mixed_polynomial mixed_from_anf( const x_polynomial& p )
{
  mixed_polynomial out{ p.n, {} };
  out.terms.reserve( p.monomials.size() );
  for ( auto m : p.monomials )
  {
    out.terms.push_back( mixed_monomial{ m, 0u } );
  }
  // Ascending masks are already canonical when no y literal is present.
  return out;
}

std::string to_string( unsigned n, const mixed_monomial& m )
{
  if ( m.x == 0u && m.y == 0u )
  {
    return "1";
  }
  std::string out;
  for ( unsigned i = 1u; i <= n; ++i )
  {
    switch ( m.at( n, i ) )
    {
    case literal::x:
      out += 'x';
      break;
    case literal::y:
      out += 'y';
      break;
    case literal::absent:
      continue;
    }
    out += std::to_string( i );
  }
  return out;
}

std::string to_string( const mixed_polynomial& p )
{
  if ( p.terms.empty() )
  {
    return "0";
  }
  std::string out;
  for ( auto const& m : p.terms )
  {
    if ( !out.empty() )
    {
      out += '+';
    }
    out += to_string( p.n, m );
  }
  return out;
}

mixed_polynomial parse_mixed_polynomial( std::string_view text, unsigned n )
{
  std::string s;
  for ( char ch : text )
  {
    if ( !std::isspace( static_cast<unsigned char>( ch ) ) )
    {
      s += ch;
    }
  }
  if ( s.empty() )
  {
    throw parse_error( "empty polynomial" );
  }
  if ( s == "0" )
  {
    return mixed_polynomial{ n, {} };
  }

  std::vector<mixed_monomial> terms;
  std::size_t pos = 0u;
  while ( true )
  {
    auto const end = std::min( s.find( '+', pos ), s.size() );
    auto const term = std::string_view( s ).substr( pos, end - pos );
    if ( term.empty() )
    {
      throw parse_error( "empty term at position " + std::to_string( pos ) );
    }

    mixed_monomial m;
    if ( term != "1" )
    {
      std::size_t i = 0u;
      while ( i < term.size() )
      {
        auto const kind = term[i];
        if ( kind != 'x' && kind != 'y' )
        {
          throw parse_error( "unexpected character '" + std::string( 1u, kind ) + "' in term '" + std::string( term ) + "'" );
        }
        ++i;
        unsigned index = 0u;
        auto const start = i;
        while ( i < term.size() && std::isdigit( static_cast<unsigned char>( term[i] ) ) && index <= max_vars )
        {
          index = index * 10u + static_cast<unsigned>( term[i] - '0' );
          ++i;
        }
        if ( i == start || index < 1u || index > n )
        {
          throw parse_error( "variable index out of range [1, " + std::to_string( n ) + "] in term '" + std::string( term ) + "'" );
        }
        auto const bit = var_bit( n, index );
        if ( ( m.x | m.y ) & bit )
        {
          throw parse_error( "position " + std::to_string( index ) + " repeated in term '" + std::string( term ) + "'" );
        }
        ( kind == 'x' ? m.x : m.y ) |= bit;
      }
    }
    terms.push_back( m );

    if ( end == s.size() )
    {
      break;
    }
    pos = end + 1u;
  }
  return make_mixed_polynomial( n, std::move( terms ) );
}

} // namespace mixpoly
