#pragma once

#include <mixpoly/anf.hpp>
#include <mixpoly/truth_table.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

/*! \file mixed.hpp
  \brief Polynomials over x_i and complemented literals y_i = x_i + 1 (mod 2).

  A point a of {0,1}^n assigns x_i = a_i and y_i = a_i + 1, so every mixed
  polynomial is a Boolean function of a. The substitution y_i -> x_i + 1 maps
  it onto the unique ANF of that function.
*/

namespace mixpoly
{

enum class literal : std::uint8_t
{
  absent,
  x,
  y
};

/// Product of literals, one per position; stored as two disjoint masks in
/// input-index layout. Both masks empty is the constant 1.
struct mixed_monomial
{
  std::uint32_t x = 0u;
  std::uint32_t y = 0u;

  literal at( unsigned n, unsigned i ) const noexcept
  {
    auto const bit = var_bit( n, i );
    return ( x & bit ) ? literal::x : ( ( y & bit ) ? literal::y : literal::absent );
  }
  unsigned degree() const noexcept;

  /// Value at input a: every x literal set in a and every y literal clear.
  bool evaluate( input_index a ) const noexcept { return ( a & x ) == x && ( a & y ) == 0u; }

  friend bool operator==( const mixed_monomial&, const mixed_monomial& ) = default;
};

/// Canonical order: per position ABSENT < X < Y, position 1 first.
bool canonical_less( const mixed_monomial& a, const mixed_monomial& b ) noexcept;

/// GF(2) sum of distinct mixed monomials, in canonical order.
struct mixed_polynomial
{
  unsigned n = 1u;
  std::vector<mixed_monomial> terms;

  std::size_t num_terms() const noexcept { return terms.size(); }
  std::size_t num_literals() const noexcept;

  friend bool operator==( const mixed_polynomial&, const mixed_polynomial& ) = default;
};

/// Sorts canonically; terms occurring an even number of times cancel.
mixed_polynomial make_mixed_polynomial( unsigned n, std::vector<mixed_monomial> terms );

/// The DNF atom that is 1 exactly at input a: x_i where a_i = 1, y_i where a_i = 0.
mixed_monomial dnf_atom( input_index a, unsigned n );

/// Sum of the atoms of S_1 when |S_1| <= 2^(n-1), otherwise 1 + sum of the atoms of S_0.
mixed_polynomial theorem2_representation( const truth_table& t );

bool mixed_evaluate( const mixed_polynomial& p, input_index a );

/// Full evaluation table, toggling the subcube of each term.
truth_table table_from_mixed( const mixed_polynomial& p );

/// Expands every y_i as x_i + 1 and reduces mod 2.
x_polynomial substitute_y( const mixed_polynomial& p );

mixed_polynomial mixed_from_anf( const x_polynomial& p );

std::string to_string( unsigned n, const mixed_monomial& m );

/// "y1x3x4+x2+1"-style text in canonical order; "0" for the zero polynomial.
std::string to_string( const mixed_polynomial& p );

/// Parses terms joined by '+' (whitespace ignored). Literals within a term may
/// appear in any order but a position may not repeat. Throws parse_error.
mixed_polynomial parse_mixed_polynomial( std::string_view text, unsigned n );

} // namespace mixpoly
