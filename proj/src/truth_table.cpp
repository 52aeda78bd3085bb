#include <mixpoly/errors.hpp>
#include <mixpoly/truth_table.hpp>

#include <bit>
#include <charconv>
#include <stdexcept>

namespace mixpoly
{

namespace
{

std::size_t word_count( unsigned n )
{
  return n <= 6u ? 1u : std::size_t{ 1 } << ( n - 6u );
}

void check_vars( unsigned n )
{
  if ( n < 1u || n > max_vars )
  {
    throw std::invalid_argument( "variable count must be in [1, 24], got " + std::to_string( n ) );
  }
}

} // namespace

truth_table::truth_table( unsigned n )
    : n_( n )
{
  check_vars( n );
  words_.assign( word_count( n ), 0u );
}

bool truth_table::get( input_index k ) const
{
  if ( k >= num_bits() )
  {
    throw std::out_of_range( "input index out of range" );
  }
  return ( words_[k >> 6] >> ( k & 63u ) ) & 1u;
}

void truth_table::set( input_index k, bool value )
{
  if ( k >= num_bits() )
  {
    throw std::out_of_range( "input index out of range" );
  }
  auto const bit = std::uint64_t{ 1 } << ( k & 63u );
  if ( value )
    words_[k >> 6] |= bit;
  else
    words_[k >> 6] &= ~bit;
}

std::uint64_t truth_table::count_ones() const noexcept
{
  std::uint64_t total = 0u;
  for ( auto w : words_ )
  {
    total += std::popcount( w );
  }
  return total;
}

void truth_table::mask_unused() noexcept
{
  if ( n_ < 6u )
  {
    words_[0] &= ( std::uint64_t{ 1 } << ( 1u << n_ ) ) - 1u;
  }
}

truth_table from_predicate( unsigned n, const std::function<bool( input_index )>& pred )
{
  truth_table t( n );
  auto const size = t.num_bits();
  for ( std::uint64_t k = 0u; k < size; ++k )
  {
    if ( pred( static_cast<input_index>( k ) ) )
    {
      t.words()[k >> 6] |= std::uint64_t{ 1 } << ( k & 63u );
    }
  }
  return t;
}

support_split split_support( const truth_table& t )
{
  support_split split;
  auto const ones = t.count_ones();
  split.s1.reserve( ones );
  split.s0.reserve( t.num_bits() - ones );
  for ( std::uint64_t k = 0u; k < t.num_bits(); ++k )
  {
    auto const idx = static_cast<input_index>( k );
    ( t.get( idx ) ? split.s1 : split.s0 ).push_back( idx );
  }
  return split;
}

std::int64_t first_mismatch( const truth_table& a, const truth_table& b )
{
  if ( a.num_vars() != b.num_vars() )
  {
    throw std::invalid_argument( "truth tables have different variable counts" );
  }
  auto const wa = a.words();
  auto const wb = b.words();
  for ( std::size_t i = 0u; i < wa.size(); ++i )
  {
    if ( auto const diff = wa[i] ^ wb[i]; diff != 0u )
    {
      return static_cast<std::int64_t>( i * 64u + std::countr_zero( diff ) );
    }
  }
  return -1;
}

std::string emit_table( const truth_table& t )
{
  std::string out = "n " + std::to_string( t.num_vars() ) + "\n";
  out.reserve( out.size() + t.num_bits() + 1u );
  for ( std::uint64_t k = 0u; k < t.num_bits(); ++k )
  {
    out.push_back( t.get( static_cast<input_index>( k ) ) ? '1' : '0' );
  }
  out.push_back( '\n' );
  return out;
}

truth_table parse_table( std::string_view text )
{
  auto const eol = text.find( '\n' );
  if ( eol == std::string_view::npos )
  {
    throw parse_error( "truth table: missing header line" );
  }
  auto header = text.substr( 0u, eol );
  if ( !header.empty() && header.back() == '\r' )
  {
    header.remove_suffix( 1u );
  }
  if ( header.size() < 3u || header.substr( 0u, 2u ) != "n " )
  {
    throw parse_error( "truth table: header must be 'n <k>'" );
  }
  unsigned n = 0u;
  auto const digits = header.substr( 2u );
  auto const [ptr, ec] = std::from_chars( digits.data(), digits.data() + digits.size(), n );
  if ( ec != std::errc{} || ptr != digits.data() + digits.size() )
  {
    throw parse_error( "truth table: bad variable count in header" );
  }
  if ( n < 1u || n > max_vars )
  {
    throw parse_error( "truth table: variable count out of range [1, 24]" );
  }

  auto body = text.substr( eol + 1u );
  if ( !body.empty() && body.back() == '\n' )
  {
    body.remove_suffix( 1u );
  }
  if ( !body.empty() && body.back() == '\r' )
  {
    body.remove_suffix( 1u );
  }

  truth_table t( n );
  if ( body.size() != t.num_bits() )
  {
    throw parse_error( "truth table: expected " + std::to_string( t.num_bits() ) + " bits, got " +
                       std::to_string( body.size() ) );
  }
  for ( std::size_t k = 0u; k < body.size(); ++k )
  {
    switch ( body[k] )
    {
    case '0':
      break;
    case '1':
      t.words()[k >> 6] |= std::uint64_t{ 1 } << ( k & 63u );
      break;
    default:
      throw parse_error( "truth table: illegal character at position " + std::to_string( k ) );
    }
  }
  return t;
}

} // namespace mixpoly
