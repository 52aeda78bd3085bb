#pragma once

#include <mixpoly/truth_table.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mixpoly
{

/// Indicator of primality on {0, ..., 2^n - 1} (trial division).
truth_table prime_function( unsigned n );

/// Indicator of k = a^2 + b^2 with integers a, b >= 0.
truth_table sum_two_squares_function( unsigned n );

bool is_prime( std::uint64_t k );
bool is_sum_of_two_squares( std::uint64_t k );

/// Builds a named family table: "prime" or "sum2sq".
truth_table family_function( std::string_view family, unsigned n );

enum class reference_kind
{
  mixed,    ///< exact GF(2) polynomial in x/y literals (pure-x ANF included)
  pm_exact, ///< exact +-1 polynomial, values must equal the +-1 function
  pm_sign   ///< +-1 polynomial that must sign represent the function
};

/// Polynomial transcribed from the literature together with the function it encodes.
struct reference_polynomial
{
  std::string name;
  reference_kind kind;
  unsigned n;
  std::string payload;
  std::size_t expected_terms;
  std::string target; ///< "prime", "sum2sq", or a fixed n=3 table "and12", "z_xeqy", "zero_indicator"
};

const std::vector<reference_polynomial>& references();

/// Throws std::invalid_argument for an unknown name.
const reference_polynomial& reference( std::string_view name );

/// Truth table of the function the reference is meant to represent.
truth_table reference_target( const reference_polynomial& ref );

/// Number of terms after parsing the payload.
std::size_t reference_term_count( const reference_polynomial& ref );

/// First input where the reference disagrees with `target`, or -1.
/// Throws std::invalid_argument when variable counts differ.
std::int64_t check_reference( const reference_polynomial& ref, const truth_table& target );

} // namespace mixpoly
