#include <mixpoly/dyadic.hpp>
#include <mixpoly/errors.hpp>

#include <bit>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace mixpoly
{

namespace
{

std::int64_t shift_checked( std::int64_t value, unsigned shift )
{
  if ( value == 0 )
  {
    return 0;
  }
  auto const mag = value < 0 ? -static_cast<std::uint64_t>( value ) : static_cast<std::uint64_t>( value );
  if ( shift >= 63u || ( mag >> ( 62u - shift ) ) != 0u )
  {
    throw std::overflow_error( "dyadic: numerator overflow" );
  }
  return value * ( std::int64_t{ 1 } << shift );
}

} // namespace

dyadic::dyadic( std::int64_t num, unsigned exp )
    : num_( num ), exp_( exp )
{
  if ( num_ == 0 )
  {
    exp_ = 0u;
    return;
  }
  auto const twos = static_cast<unsigned>( std::countr_zero( static_cast<std::uint64_t>( num_ ) ) );
  auto const drop = twos < exp_ ? twos : exp_;
  num_ >>= drop;
  exp_ -= drop;
}

std::int64_t dyadic::scaled_numerator( unsigned target_exp ) const
{
  if ( target_exp < exp_ )
  {
    throw std::invalid_argument( "dyadic: target exponent below own exponent" );
  }
  return shift_checked( num_, target_exp - exp_ );
}

dyadic operator+( const dyadic& a, const dyadic& b )
{
  auto const exp = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  auto const x = a.scaled_numerator( exp );
  auto const y = b.scaled_numerator( exp );
  std::int64_t sum = 0;
  if ( __builtin_add_overflow( x, y, &sum ) )
  {
    throw std::overflow_error( "dyadic: sum overflow" );
  }
  return dyadic( sum, exp );
}

std::strong_ordering operator<=>( const dyadic& a, const dyadic& b )
{
  return ( a - b ).sign() <=> 0;
}

std::string dyadic::to_string() const
{
  auto out = std::to_string( num_ );
  if ( exp_ > 0u )
  {
    out += '/';
    out += std::to_string( denominator() );
  }
  return out;
}

dyadic parse_dyadic( std::string_view text )
{
  auto const slash = text.find( '/' );
  auto const num_text = text.substr( 0u, slash );
  std::int64_t num = 0;
  auto const* first = num_text.data();
  auto const* last = first + num_text.size();
  if ( first != last && *first == '+' )
  {
    ++first;
  }
  auto [ptr, ec] = std::from_chars( first, last, num );
  if ( first == last || ec != std::errc{} || ptr != last )
  {
    throw parse_error( "bad coefficient '" + std::string( text ) + "'" );
  }
  if ( slash == std::string_view::npos )
  {
    return dyadic( num );
  }
  auto const den_text = text.substr( slash + 1u );
  std::uint64_t den = 0u;
  auto [dptr, dec] = std::from_chars( den_text.data(), den_text.data() + den_text.size(), den );
  if ( den_text.empty() || dec != std::errc{} || dptr != den_text.data() + den_text.size() || !std::has_single_bit( den ) )
  {
    throw parse_error( "coefficient denominator must be a power of two in '" + std::string( text ) + "'" );
  }
  return dyadic( num, static_cast<unsigned>( std::countr_zero( den ) ) );
}

} // namespace mixpoly
