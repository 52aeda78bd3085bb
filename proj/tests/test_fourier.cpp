#include <doctest.h>

#include <mixpoly/errors.hpp>
#include <mixpoly/fourier.hpp>

#include "test_util.hpp"

#include <stdexcept>

using namespace mixpoly;

namespace
{

// Coordinates of row r, listed the way the +-1 cube vertices are enumerated:
// (+1+1+1), (+1+1-1), (+1-1+1), ... with x_1 first.
std::vector<int> vertex( unsigned n, std::uint32_t r )
{
  std::vector<int> v( n );
  for ( unsigned i = 0u; i < n; ++i )
    v[i] = ( ( r >> ( n - 1u - i ) ) & 1u ) ? -1 : 1;
  return v;
}

// Product of the coordinates selected by the monomial, index by index.
int monomial_at_vertex( unsigned n, std::uint32_t mask, const std::vector<int>& v )
{
  int value = 1;
  for ( unsigned i = 1u; i <= n; ++i )
    if ( mask & var_bit( n, i ) )
      value *= v[i - 1u];
  return value;
}

truth_table ones_at( unsigned n, std::initializer_list<input_index> ks )
{
  truth_table t( n );
  for ( auto k : ks )
    t.set( k, true );
  return t;
}

pm_vector random_dyadic_vector( unsigned n, std::mt19937_64& rng )
{
  pm_vector b{ n, std::vector<dyadic>( std::size_t{ 1 } << n ) };
  for ( auto& v : b.values )
    v = dyadic( static_cast<std::int64_t>( rng() % 41u ) - 20, static_cast<unsigned>( rng() % 4u ) );
  return b;
}

} // namespace

TEST_CASE( "dyadic arithmetic is exact and normalized" )
{
  CHECK( dyadic( 4, 3u ) == dyadic( 1, 1u ) );
  CHECK( dyadic( 4, 3u ).to_string() == "1/2" );
  CHECK( dyadic( 0, 5u ) == dyadic() );
  CHECK( ( dyadic( 1, 1u ) + dyadic( 1, 2u ) ).to_string() == "3/4" );
  CHECK( ( dyadic( 1, 1u ) + dyadic( 1, 1u ) ) == dyadic( 1 ) );
  CHECK( ( dyadic( 1, 2u ) - dyadic( 3, 2u ) ).to_string() == "-1/2" );
  CHECK( dyadic( -3, 3u ) < dyadic( 0 ) );
  CHECK( dyadic( 5, 2u ) > dyadic( 1 ) );
  CHECK( parse_dyadic( "-3/4" ) == dyadic( -3, 2u ) );
  CHECK( parse_dyadic( "7" ) == dyadic( 7 ) );
  CHECK_THROWS_AS( parse_dyadic( "1/3" ), parse_error );
  CHECK_THROWS_AS( parse_dyadic( "x" ), parse_error );
  CHECK_THROWS_AS( dyadic( std::int64_t{ 1 } << 62 ) + dyadic( std::int64_t{ 1 } << 62 ), std::overflow_error );
}

TEST_CASE( "hadamard_entry follows the monomial and vertex orderings" )
{
  // monomial z (mask 1) at vertex (+1, +1, -1)
  CHECK( hadamard_entry( 3u, 1u, 1u ) == monomial_at_vertex( 3u, 1u, vertex( 3u, 1u ) ) );
  CHECK( hadamard_entry( 3u, 1u, 1u ) == -1 );

  for ( std::uint32_t c = 0u; c < 16u; ++c )
    CHECK( hadamard_entry( 4u, 0u, c ) == 1 );

  // H_2: monomials {1, x} at vertices (+1), (-1)
  CHECK( hadamard_entry( 1u, 0u, 0u ) == 1 );
  CHECK( hadamard_entry( 1u, 0u, 1u ) == 1 );
  CHECK( hadamard_entry( 1u, 1u, 0u ) == 1 );
  CHECK( hadamard_entry( 1u, 1u, 1u ) == -1 );

  CHECK_THROWS_AS( hadamard_entry( 3u, 8u, 0u ), std::out_of_range );
}

TEST_CASE( "hadamard entries equal explicit monomial values" )
{
  for ( unsigned n = 1u; n <= 6u; ++n )
  {
    auto const size = 1u << n;
    bool agree = true;
    for ( std::uint32_t r = 0u; r < size; ++r )
    {
      auto const v = vertex( n, r );
      for ( std::uint32_t c = 0u; c < size; ++c )
        agree = agree && hadamard_entry( n, r, c ) == monomial_at_vertex( n, c, v );
    }
    CHECK( agree );
  }
}

TEST_CASE( "Hadamard matrix is symmetric with orthogonal columns" )
{
  for ( unsigned n = 1u; n <= 6u; ++n )
  {
    auto const size = 1u << n;
    bool symmetric = true;
    bool orthogonal = true;
    for ( std::uint32_t c1 = 0u; c1 < size; ++c1 )
    {
      for ( std::uint32_t c2 = 0u; c2 < size; ++c2 )
      {
        symmetric = symmetric && hadamard_entry( n, c1, c2 ) == hadamard_entry( n, c2, c1 );
        long dot = 0;
        for ( std::uint32_t r = 0u; r < size; ++r )
          dot += hadamard_entry( n, r, c1 ) * hadamard_entry( n, r, c2 );
        orthogonal = orthogonal && dot == ( c1 == c2 ? static_cast<long>( size ) : 0L );
      }
    }
    CHECK( symmetric );
    CHECK( orthogonal );
  }
}

TEST_CASE( "pm_values maps 1 to +1 at the complemented row" )
{
  auto const b = pm_values( ones_at( 3u, { 6u, 7u } ) );
  std::vector<dyadic> const expected{ 1, 1, -1, -1, -1, -1, -1, -1 };
  CHECK( b.values == expected );
}

TEST_CASE( "wht_solve examples" )
{
  auto const fig1b = wht_solve( pm_values( ones_at( 3u, { 6u, 7u } ) ) );
  CHECK( fig1b.num_terms() == 4u );
  CHECK( fig1b.coefficient( 0u ) == dyadic( -1, 1u ) );
  CHECK( fig1b.coefficient( var_bit( 3u, 1u ) ) == dyadic( 1, 1u ) );
  CHECK( fig1b.coefficient( var_bit( 3u, 2u ) ) == dyadic( 1, 1u ) );
  CHECK( fig1b.coefficient( var_bit( 3u, 1u ) | var_bit( 3u, 2u ) ) == dyadic( 1, 1u ) );
  CHECK( to_string( fig1b ) == "-1/2 + 1/2*x1 + 1/2*x2 + 1/2*x1x2" );

  pm_vector ones{ 4u, std::vector<dyadic>( 16u, dyadic( 1 ) ) };
  auto const constant = wht_solve( ones );
  CHECK( constant.terms == std::vector<std::pair<std::uint32_t, dyadic>>{ { 0u, dyadic( 1 ) } } );

  pm_vector parity{ 4u, std::vector<dyadic>( 16u ) };
  for ( std::uint32_t r = 0u; r < 16u; ++r )
    parity.values[r] = hadamard_entry( 4u, r, 15u );
  auto const full = wht_solve( parity );
  CHECK( full.terms == std::vector<std::pair<std::uint32_t, dyadic>>{ { 15u, dyadic( 1 ) } } );

  CHECK_THROWS_AS( wht_solve( pm_vector{ 3u, std::vector<dyadic>( 7u ) } ), std::invalid_argument );
}

TEST_CASE( "wht_solve agrees with the explicit matrix product" )
{
  std::mt19937_64 rng( 31u );
  for ( unsigned n = 1u; n <= 6u; ++n )
  {
    auto const b = random_dyadic_vector( n, rng );
    auto const p = wht_solve( b );
    auto const size = 1u << n;
    bool agree = true;
    for ( std::uint32_t c = 0u; c < size; ++c )
    {
      dyadic sum;
      for ( std::uint32_t r = 0u; r < size; ++r )
        sum += hadamard_entry( n, c, r ) == 1 ? b.values[r] : -b.values[r];
      agree = agree && p.coefficient( c ) == dyadic( sum.numerator(), sum.exponent() + n );
    }
    CHECK( agree );
  }
}

TEST_CASE( "wht_solve round-trips values exactly" )
{
  std::mt19937_64 rng( 32u );
  for ( unsigned n = 1u; n <= 12u; ++n )
  {
    auto const t = testing::random_table( n, rng );
    auto const b = pm_values( t );
    auto const p = wht_solve( b );
    CHECK( pm_evaluate_all( p ).values == b.values );

    bool multiples = true;
    for ( auto const& [mask, coeff] : p.terms )
      multiples = multiples && coeff.exponent() <= n;
    CHECK( multiples );

    auto const d = random_dyadic_vector( n, rng );
    CHECK( pm_evaluate_all( wht_solve( d ) ).values == d.values );
  }
}

TEST_CASE( "pm_evaluate agrees with the fast evaluation" )
{
  std::mt19937_64 rng( 33u );
  for ( unsigned n = 1u; n <= 8u; ++n )
  {
    auto const p = wht_solve( random_dyadic_vector( n, rng ) );
    auto const all = pm_evaluate_all( p );
    bool agree = true;
    for ( std::uint32_t r = 0u; r < all.values.size(); ++r )
      agree = agree && pm_evaluate( p, r ) == all.values[r];
    CHECK( agree );
  }
}

TEST_CASE( "pm_evaluate examples" )
{
  auto const sign_and = parse_pm_polynomial( "x1 + x2 - 1", 3u );
  CHECK( pm_evaluate( sign_and, 0u ) == dyadic( 1 ) );
  CHECK( pm_evaluate( pm_polynomial{ 3u, { { 0u, dyadic( 1 ) } } }, 5u ) == dyadic( 1 ) );

  auto const exact_and = parse_pm_polynomial( "-1/2 + 1/2*x1 + 1/2*x2 + 1/2*x1x2", 3u );
  for ( std::uint32_t r = 4u; r < 8u; ++r )
    CHECK( pm_evaluate( exact_and, r ) == dyadic( -1 ) );
  CHECK_THROWS_AS( pm_evaluate( exact_and, 8u ), std::out_of_range );
}

TEST_CASE( "sign_represents" )
{
  auto const and12 = ones_at( 3u, { 6u, 7u } );
  auto const fig1c = ones_at( 3u, { 1u, 7u } );
  CHECK( sign_represents( parse_pm_polynomial( "x1 + x2 - 1", 3u ), and12 ) );
  CHECK( sign_represents( parse_pm_polynomial( "-1 + x3 + x1x2", 3u ), fig1c ) );
  CHECK_FALSE( sign_represents( parse_pm_polynomial( "1", 3u ), and12 ) );
  // x1 + x2 vanishes where the coordinates disagree
  CHECK_FALSE( sign_represents( parse_pm_polynomial( "x1 + x2", 3u ), and12 ) );
  CHECK_FALSE( sign_represents( parse_pm_polynomial( "x1 + x2 - 1", 4u ), and12 ) );
}

TEST_CASE( "the unique +-1 polynomial sign represents its own function" )
{
  std::mt19937_64 rng( 34u );
  for ( unsigned n = 1u; n <= 10u; ++n )
  {
    auto const t = testing::random_table( n, rng );
    CHECK( sign_represents( wht_solve( pm_values( t ) ), t ) );
  }
}

TEST_CASE( "single_monomial_sign_search" )
{
  CHECK_FALSE( single_monomial_sign_search( ones_at( 3u, { 6u, 7u } ) ).has_value() );

  truth_table parity( 4u );
  for ( std::uint32_t k = 0u; k < 16u; ++k )
    parity.set( k, hadamard_entry( 4u, row_to_input( 4u, k ), 15u ) == 1 );
  CHECK( single_monomial_sign_search( parity ) == signed_monomial{ 15u, 1 } );

  CHECK( single_monomial_sign_search( truth_table( 3u ) ) == signed_monomial{ 0u, -1 } );
}

TEST_CASE( "only the sign of a single monomial's coefficient matters" )
{
  std::mt19937_64 rng( 35u );
  std::vector<dyadic> const scales{ dyadic( 1, 2u ), dyadic( 3 ), dyadic( 17, 3u ) };
  for ( int rep = 0; rep < 30; ++rep )
  {
    auto const t = testing::random_table( 3u, rng );
    for ( std::uint32_t mask = 0u; mask < 8u; ++mask )
    {
      for ( int sign : { 1, -1 } )
      {
        auto const unit = sign_represents( pm_polynomial{ 3u, { { mask, dyadic( sign ) } } }, t );
        for ( auto const& s : scales )
        {
          auto const c = sign > 0 ? s : -s;
          CHECK( sign_represents( pm_polynomial{ 3u, { { mask, c } } }, t ) == unit );
        }
      }
    }
  }
}

TEST_CASE( "pm text round trip" )
{
  std::mt19937_64 rng( 36u );
  for ( unsigned n = 1u; n <= 6u; ++n )
  {
    auto const p = wht_solve( random_dyadic_vector( n, rng ) );
    CHECK( parse_pm_polynomial( to_string( p ), n ) == p );
  }
  CHECK( to_string( parse_pm_polynomial( "x1+x2-1", 3u ) ) == "-1 + x1 + x2" );
  CHECK( to_string( pm_polynomial{ 2u, {} } ) == "0" );
  CHECK( parse_pm_polynomial( "0", 2u ).terms.empty() );
  CHECK( parse_pm_polynomial( "x1 - x1", 2u ).terms.empty() );
  CHECK( to_string( parse_pm_polynomial( "-x2 - 3/4*x1x2", 2u ) ) == "-x2 - 3/4*x1x2" );
  CHECK_THROWS_AS( parse_pm_polynomial( "x3", 2u ), parse_error );
  CHECK_THROWS_AS( parse_pm_polynomial( "x1x1", 2u ), parse_error );
  CHECK_THROWS_AS( parse_pm_polynomial( "1/2*", 2u ), parse_error );
  CHECK_THROWS_AS( parse_pm_polynomial( "y1", 2u ), parse_error );
  CHECK_THROWS_AS( parse_pm_polynomial( "", 2u ), parse_error );
}
