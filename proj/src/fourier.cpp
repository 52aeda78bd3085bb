#include <mixpoly/errors.hpp>
#include <mixpoly/fourier.hpp>
#include <mixpoly/kernels.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <stdexcept>

namespace mixpoly
{

namespace
{

void check_row( unsigned n, std::uint32_t row )
{
  if ( row >= ( std::uint64_t{ 1 } << n ) )
  {
    throw std::out_of_range( "row index out of range" );
  }
}

unsigned common_exponent( const std::vector<dyadic>& values )
{
  unsigned exp = 0u;
  for ( auto const& v : values )
  {
    exp = std::max( exp, v.exponent() );
  }
  return exp;
}

// Scales to a common denominator and checks that 2^n-term sums stay in range.
std::vector<std::int64_t> scaled_for_transform( const std::vector<dyadic>& values, unsigned exp, unsigned n )
{
  std::vector<std::int64_t> out( values.size() );
  auto const limit = std::int64_t{ 1 } << ( 62u - n );
  for ( std::size_t i = 0u; i < values.size(); ++i )
  {
    out[i] = values[i].scaled_numerator( exp );
    if ( out[i] >= limit || out[i] <= -limit )
    {
      throw std::overflow_error( "Walsh-Hadamard transform: value magnitude too large" );
    }
  }
  return out;
}

} // namespace

dyadic pm_polynomial::coefficient( std::uint32_t mask ) const
{
  auto const it = std::lower_bound( terms.begin(), terms.end(), mask,
                                    []( auto const& term, std::uint32_t m ) { return term.first < m; } );
  return it != terms.end() && it->first == mask ? it->second : dyadic{};
}

pm_polynomial make_pm_polynomial( unsigned n, std::vector<std::pair<std::uint32_t, dyadic>> terms )
{
  std::map<std::uint32_t, dyadic> merged;
  for ( auto const& [mask, coeff] : terms )
  {
    if ( mask >= ( std::uint64_t{ 1 } << n ) )
    {
      throw std::out_of_range( "monomial mask out of range" );
    }
    merged[mask] += coeff;
  }
  pm_polynomial p{ n, {} };
  for ( auto const& [mask, coeff] : merged )
  {
    if ( !coeff.is_zero() )
    {
      p.terms.emplace_back( mask, coeff );
    }
  }
  return p;
}

int hadamard_entry( unsigned n, std::uint32_t row, std::uint32_t column )
{
  check_row( n, row );
  check_row( n, column );
  return ( std::popcount( row & column ) & 1 ) ? -1 : 1;
}

pm_vector pm_values( const truth_table& t )
{
  auto const n = t.num_vars();
  pm_vector b{ n, std::vector<dyadic>( t.num_bits() ) };
  for ( std::uint32_t r = 0u; r < t.num_bits(); ++r )
  {
    b.values[r] = t.get( row_to_input( n, r ) ) ? 1 : -1;
  }
  return b;
}

pm_polynomial wht_solve( const pm_vector& b )
{
  if ( b.n < 1u || b.n > max_vars || b.values.size() != ( std::size_t{ 1 } << b.n ) )
  {
    throw std::invalid_argument( "value vector must have length 2^n" );
  }
  auto const exp = common_exponent( b.values );
  auto work = scaled_for_transform( b.values, exp, b.n );
  kernels::wht_parallel( work );

  pm_polynomial p{ b.n, {} };
  for ( std::uint32_t c = 0u; c < work.size(); ++c )
  {
    if ( work[c] != 0 )
    {
      p.terms.emplace_back( c, dyadic( work[c], exp + b.n ) );
    }
  }
  return p;
}

dyadic pm_evaluate( const pm_polynomial& p, std::uint32_t row )
{
  check_row( p.n, row );
  dyadic value;
  for ( auto const& [mask, coeff] : p.terms )
  {
    value += ( std::popcount( row & mask ) & 1 ) ? -coeff : coeff;
  }
  return value;
}

pm_vector pm_evaluate_all( const pm_polynomial& p )
{
  std::vector<dyadic> dense( std::size_t{ 1 } << p.n );
  for ( auto const& [mask, coeff] : p.terms )
  {
    dense[mask] = coeff;
  }
  auto const exp = common_exponent( dense );
  auto work = scaled_for_transform( dense, exp, p.n );
  kernels::wht_parallel( work );

  pm_vector out{ p.n, std::vector<dyadic>( work.size() ) };
  for ( std::size_t r = 0u; r < work.size(); ++r )
  {
    out.values[r] = dyadic( work[r], exp );
  }
  return out;
}

bool sign_represents( const pm_polynomial& p, const truth_table& t )
{
  if ( p.n != t.num_vars() )
  {
    return false;
  }
  auto const values = pm_evaluate_all( p );
  for ( std::uint32_t r = 0u; r < values.values.size(); ++r )
  {
    auto const want = t.get( row_to_input( p.n, r ) ) ? 1 : -1;
    if ( values.values[r].sign() != want )
    {
      return false;
    }
  }
  return true;
}

std::optional<signed_monomial> single_monomial_sign_search( const truth_table& t )
{
  auto const n = t.num_vars();
  auto const size = static_cast<std::uint32_t>( t.num_bits() );
  auto const b = pm_values( t );
  for ( std::uint32_t mask = 0u; mask < size; ++mask )
  {
    for ( int sign : { 1, -1 } )
    {
      bool ok = true;
      for ( std::uint32_t r = 0u; r < size && ok; ++r )
      {
        ok = sign * hadamard_entry( n, r, mask ) == b.values[r].sign();
      }
      if ( ok )
      {
        return signed_monomial{ mask, sign };
      }
    }
  }
  return std::nullopt;
}

std::string to_string( const pm_polynomial& p )
{
  if ( p.terms.empty() )
  {
    return "0";
  }
  auto terms = p.terms;
  std::sort( terms.begin(), terms.end(), []( auto const& a, auto const& b ) {
    auto const da = std::popcount( a.first );
    auto const db = std::popcount( b.first );
    return da != db ? da < db : a.first > b.first;
  } );

  std::string out;
  for ( auto const& [mask, coeff] : terms )
  {
    auto const negative = coeff.sign() < 0;
    if ( out.empty() )
    {
      out += negative ? "-" : "";
    }
    else
    {
      out += negative ? " - " : " + ";
    }
    auto const magnitude = negative ? -coeff : coeff;
    if ( mask == 0u )
    {
      out += magnitude.to_string();
      continue;
    }
    if ( magnitude != dyadic( 1 ) )
    {
      out += magnitude.to_string();
      out += '*';
    }
    for ( unsigned i = 1u; i <= p.n; ++i )
    {
      if ( mask & var_bit( p.n, i ) )
      {
        out += 'x';
        out += std::to_string( i );
      }
    }
  }
  return out;
}

pm_polynomial parse_pm_polynomial( std::string_view text, unsigned n )
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
    return pm_polynomial{ n, {} };
  }

  std::vector<std::pair<std::uint32_t, dyadic>> terms;
  std::size_t pos = 0u;
  while ( pos < s.size() )
  {
    bool negative = false;
    if ( s[pos] == '+' || s[pos] == '-' )
    {
      negative = s[pos] == '-';
      ++pos;
    }
    else if ( pos != 0u )
    {
      throw parse_error( "expected '+' or '-' at position " + std::to_string( pos ) );
    }

    dyadic coeff = 1;
    if ( pos < s.size() && std::isdigit( static_cast<unsigned char>( s[pos] ) ) )
    {
      auto const end = s.find_first_of( "*+-", pos );
      coeff = parse_dyadic( std::string_view( s ).substr( pos, end - pos ) );
      pos = end == std::string::npos ? s.size() : end;
      if ( pos < s.size() && s[pos] == '*' )
      {
        ++pos;
        if ( pos >= s.size() || s[pos] != 'x' )
        {
          throw parse_error( "expected monomial after '*'" );
        }
      }
      else
      {
        terms.emplace_back( 0u, negative ? -coeff : coeff );
        continue;
      }
    }
    if ( pos >= s.size() || s[pos] != 'x' )
    {
      throw parse_error( "expected coefficient or monomial at position " + std::to_string( pos ) );
    }

    std::uint32_t mask = 0u;
    while ( pos < s.size() && s[pos] == 'x' )
    {
      ++pos;
      unsigned index = 0u;
      auto const start = pos;
      while ( pos < s.size() && std::isdigit( static_cast<unsigned char>( s[pos] ) ) )
      {
        index = index * 10u + static_cast<unsigned>( s[pos] - '0' );
        if ( index > max_vars )
        {
          break;
        }
        ++pos;
      }
      if ( pos == start || index < 1u || index > n )
      {
        throw parse_error( "variable index out of range in monomial" );
      }
      if ( mask & var_bit( n, index ) )
      {
        throw parse_error( "repeated variable x" + std::to_string( index ) + " in monomial" );
      }
      mask |= var_bit( n, index );
    }
    terms.emplace_back( mask, negative ? -coeff : coeff );
  }
  return make_pm_polynomial( n, std::move( terms ) );
}

} // namespace mixpoly
