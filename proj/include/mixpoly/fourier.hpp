#pragma once

#include <mixpoly/dyadic.hpp>
#include <mixpoly/truth_table.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/*! \file fourier.hpp
  \brief The {-1,+1} world: Hadamard basis, exact Walsh-Hadamard coefficients
  and sign representations.

  Row r of a value vector is the point of {-1,+1}^n whose coordinate x_i is -1
  exactly when bit (n - i) of r is set, so row 0 is (+1, ..., +1). A monomial
  mask c evaluates to (-1)^popcount(r & c) at row r. Function values map
  1 -> +1 and 0 -> -1, and a coordinate +1 stands for input bit 1, so row r
  carries the truth-table entry at input index r ^ (2^n - 1).
*/

namespace mixpoly
{

/// Values at the 2^n rows of {-1,+1}^n.
struct pm_vector
{
  unsigned n = 1u;
  std::vector<dyadic> values;
};

/// Real polynomial over the +-1 monomial basis with exact dyadic coefficients.
/// Terms are sorted by mask and carry nonzero coefficients only.
struct pm_polynomial
{
  unsigned n = 1u;
  std::vector<std::pair<std::uint32_t, dyadic>> terms;

  std::size_t num_terms() const noexcept { return terms.size(); }
  dyadic coefficient( std::uint32_t mask ) const;

  friend bool operator==( const pm_polynomial&, const pm_polynomial& ) = default;
};

pm_polynomial make_pm_polynomial( unsigned n, std::vector<std::pair<std::uint32_t, dyadic>> terms );

constexpr input_index row_to_input( unsigned n, std::uint32_t row )
{
  return row ^ ( ( std::uint32_t{ 1 } << n ) - 1u );
}

int hadamard_entry( unsigned n, std::uint32_t row, std::uint32_t column );

/// +-1 values of t in row order.
pm_vector pm_values( const truth_table& t );

/// Unique coefficients x = 2^-n H b.
pm_polynomial wht_solve( const pm_vector& b );

dyadic pm_evaluate( const pm_polynomial& p, std::uint32_t row );

/// Values of p at every row, via the fast transform.
pm_vector pm_evaluate_all( const pm_polynomial& p );

/// True iff p is nonzero at every row with the sign of the function value.
bool sign_represents( const pm_polynomial& p, const truth_table& t );

struct signed_monomial
{
  std::uint32_t mask;
  int sign;

  friend bool operator==( const signed_monomial&, const signed_monomial& ) = default;
};

/// Exhaustive search over all masks and both signs, ascending mask, +1 before -1.
std::optional<signed_monomial> single_monomial_sign_search( const truth_table& t );

/// "-1/2 + 1/2*x1 + 1/2*x2 + 1/2*x1x2": terms by degree, then by variable
/// indices; unit coefficients are left implicit.
std::string to_string( const pm_polynomial& p );

/// Accepts the to_string grammar with optional whitespace and any term order.
pm_polynomial parse_pm_polynomial( std::string_view text, unsigned n );

} // namespace mixpoly
