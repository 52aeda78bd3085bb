#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mixpoly
{

/*! \brief Exact dyadic rational num / 2^exp.

  Always normalized: exp >= 0, and num is odd whenever exp > 0. Zero is {0, 0}.
*/
class dyadic
{
public:
  constexpr dyadic() = default;
  constexpr dyadic( std::int64_t integer ) : num_( integer ) {}
  dyadic( std::int64_t num, unsigned exp );

  std::int64_t numerator() const noexcept { return num_; }
  unsigned exponent() const noexcept { return exp_; }
  std::int64_t denominator() const noexcept { return std::int64_t{ 1 } << exp_; }

  int sign() const noexcept { return ( num_ > 0 ) - ( num_ < 0 ); }
  bool is_zero() const noexcept { return num_ == 0; }

  /// The value scaled to denominator 2^target_exp; target_exp must be >= exponent().
  std::int64_t scaled_numerator( unsigned target_exp ) const;

  dyadic operator-() const { return dyadic( -num_, exp_ ); }
  friend dyadic operator+( const dyadic& a, const dyadic& b );
  friend dyadic operator-( const dyadic& a, const dyadic& b ) { return a + ( -b ); }
  dyadic& operator+=( const dyadic& other ) { return *this = *this + other; }

  friend bool operator==( const dyadic&, const dyadic& ) = default;
  friend std::strong_ordering operator<=>( const dyadic& a, const dyadic& b );

  /// "3", "-1/2", "5/8".
  std::string to_string() const;

private:
  std::int64_t num_ = 0;
  unsigned exp_ = 0u;
};

/// Parses "a" or "a/2^k" written as a decimal fraction, e.g. "-3/4". Throws parse_error.
dyadic parse_dyadic( std::string_view text );

} // namespace mixpoly
