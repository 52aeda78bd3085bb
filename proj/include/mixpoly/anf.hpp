#pragma once

#include <mixpoly/truth_table.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mixpoly
{

/*! \brief Multilinear GF(2) polynomial (algebraic normal form).

  Each monomial is a variable-subset mask laid out like an input index
  (x_1 in the most significant of the n bits); mask 0 is the constant 1.
  Monomials are kept sorted ascending and unique.
*/
struct x_polynomial
{
  unsigned n = 1u;
  std::vector<std::uint32_t> monomials;

  std::size_t num_terms() const noexcept { return monomials.size(); }

  friend bool operator==( const x_polynomial&, const x_polynomial& ) = default;
};

/// Builds a polynomial from arbitrary masks; repeated masks cancel in pairs.
x_polynomial make_x_polynomial( unsigned n, std::vector<std::uint32_t> masks );

/// The unique ANF of t, via the packed Moebius butterfly.
x_polynomial anf_from_table( const truth_table& t );

truth_table table_from_anf( const x_polynomial& p );

bool anf_evaluate( const x_polynomial& p, input_index k );

/// Text form: "x1x3+x2+1"-style, ascending mask order, "0" for the zero polynomial.
std::string to_string( const x_polynomial& p );

/// Literal list of one mask, e.g. "x1x3x4", or "1" for the empty mask.
std::string monomial_string( unsigned n, std::uint32_t mask );

} // namespace mixpoly
