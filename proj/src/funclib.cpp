#include <mixpoly/fourier.hpp>
#include <mixpoly/funclib.hpp>
#include <mixpoly/mixed.hpp>

#include <stdexcept>

namespace mixpoly
{

bool is_prime( std::uint64_t k )
{
  if ( k < 2u )
    return false;
  if ( k % 2u == 0u )
    return k == 2u;
  for ( std::uint64_t d = 3u; d * d <= k; d += 2u )
  {
    if ( k % d == 0u )
      return false;
  }
  return true;
}

bool is_sum_of_two_squares( std::uint64_t k )
{
  for ( std::uint64_t a = 0u; 2u * a * a <= k; ++a )
  {
    auto const rest = k - a * a;
    auto b = a;
    while ( b * b < rest )
    {
      ++b;
    }
    if ( b * b == rest )
      return true;
  }
  return false;
}

truth_table prime_function( unsigned n )
{
  return from_predicate( n, []( input_index k ) { return is_prime( k ); } );
}

truth_table sum_two_squares_function( unsigned n )
{
  return from_predicate( n, []( input_index k ) { return is_sum_of_two_squares( k ); } );
}

truth_table family_function( std::string_view family, unsigned n )
{
  if ( family == "prime" )
    return prime_function( n );
  if ( family == "sum2sq" )
    return sum_two_squares_function( n );
  throw std::invalid_argument( "unknown function family '" + std::string( family ) + "'" );
}

const std::vector<reference_polynomial>& references()
{
  using enum reference_kind;
  static const std::vector<reference_polynomial> table = {
      { "p4", mixed, 4u, "x1x2x4+x1x3x4+y1x2x4+y1y2x3", 4u, "prime" },
      { "p5", mixed, 5u, "y1y2y3x4+y1y2x3x5+x2x3y4x5+x1y2y3x5+x1x3x4x5+y1x2y3x4x5", 6u, "prime" },
      { "p6", mixed, 6u,
        "y1y2y3y4x5+y1y2y3x4x6+y2x3y4x5x6+y1x3x4y5x6"
        "+y1x2y3y4x6+y1x2x4x5x6+x1y3x4y5x6+x1y2x3x5x6"
        "+x1x3y4x5x6+x1y2x3y4y5x6+x1x2x3x4y5x6",
        11u, "prime" },
      { "example1_stage1", mixed, 4u,
        "1+y1y2x3x4+y1x2x3y4+y1x2x3x4+x1y2x3x4+x1x2y3y4+x1x2x3y4+x1x2x3x4", 8u, "sum2sq" },
      { "example1_round1", mixed, 4u, "1+y1x3x4+x2x3y4+x1x3x4+x1x2y3y4", 5u, "sum2sq" },
      { "example1_final", mixed, 4u, "1+x3x4+x2x3y4+x1x2y3y4", 4u, "sum2sq" },
      { "eq6_anf", mixed, 3u, "1+x1+x2+x3+x1x2+x1x3+x2x3+x1x2x3", 8u, "zero_indicator" },
      { "eq6_mixed", mixed, 3u, "y1y2y3", 1u, "zero_indicator" },
      { "fig1b_anf", mixed, 3u, "x1x2", 1u, "and12" },
      { "fig1b_fourier", pm_exact, 3u, "-1/2 + 1/2*x1 + 1/2*x2 + 1/2*x1x2", 4u, "and12" },
      { "fig1b_sign", pm_sign, 3u, "x1 + x2 - 1", 3u, "and12" },
      { "fig1c_anf", mixed, 3u, "x3+x1x3+x2x3", 3u, "z_xeqy" },
      { "fig1c_sign", pm_sign, 3u, "-1 + x3 + x1x2", 3u, "z_xeqy" },
  };
  return table;
}

const reference_polynomial& reference( std::string_view name )
{
  for ( auto const& ref : references() )
  {
    if ( ref.name == name )
      return ref;
  }
  throw std::invalid_argument( "unknown reference polynomial '" + std::string( name ) + "'" );
}

truth_table reference_target( const reference_polynomial& ref )
{
  if ( ref.target == "and12" )
    return from_predicate( 3u, []( input_index k ) { return k == 6u || k == 7u; } );
  if ( ref.target == "z_xeqy" )
    return from_predicate( 3u, []( input_index k ) { return k == 1u || k == 7u; } );
  if ( ref.target == "zero_indicator" )
    return from_predicate( 3u, []( input_index k ) { return k == 0u; } );
  return family_function( ref.target, ref.n );
}

std::size_t reference_term_count( const reference_polynomial& ref )
{
  if ( ref.kind == reference_kind::mixed )
    return parse_mixed_polynomial( ref.payload, ref.n ).num_terms();
  return parse_pm_polynomial( ref.payload, ref.n ).num_terms();
}

std::int64_t check_reference( const reference_polynomial& ref, const truth_table& target )
{
  if ( ref.n != target.num_vars() )
  {
    throw std::invalid_argument( "reference '" + ref.name + "' has " + std::to_string( ref.n ) +
                                 " variables, target has " + std::to_string( target.num_vars() ) );
  }
  if ( ref.kind == reference_kind::mixed )
  {
    return first_mismatch( table_from_mixed( parse_mixed_polynomial( ref.payload, ref.n ) ), target );
  }

  auto const values = pm_evaluate_all( parse_pm_polynomial( ref.payload, ref.n ) );
  for ( std::uint32_t k = 0u; k < values.values.size(); ++k )
  {
    auto const r = row_to_input( ref.n, k );
    auto const want = target.get( k ) ? 1 : -1;
    auto const& v = values.values[r];
    auto const ok = ref.kind == reference_kind::pm_exact ? v == dyadic( want ) : v.sign() == want;
    if ( !ok )
      return k;
  }
  return -1;
}

} // namespace mixpoly
