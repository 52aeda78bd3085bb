#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mixpoly
{

/// Largest supported variable count; tables are stored densely.
inline constexpr unsigned max_vars = 24u;

/// Input index of a Boolean function: bit (n - i) carries x_i, so x_1 is the
/// most significant bit. Variable-subset masks use the same bit layout.
using input_index = std::uint32_t;

/// Bit of `mask` that carries variable x_i (1-based) for an n-variable function.
constexpr std::uint32_t var_bit( unsigned n, unsigned i )
{
  return std::uint32_t{ 1 } << ( n - i );
}

/*! \brief Complete truth table of f: {0,1}^n -> {0,1}, packed 64 entries per word.

  Entry k is f(a) where a is the binary expansion of k with x_1 as the most
  significant bit. When n < 6 the unused high bits of the single word are zero.
*/
class truth_table
{
public:
  /// All-zero table over n variables; throws std::invalid_argument unless 1 <= n <= 24.
  explicit truth_table( unsigned n );

  unsigned num_vars() const noexcept { return n_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t{ 1 } << n_; }

  bool get( input_index k ) const;
  void set( input_index k, bool value );
  std::uint64_t count_ones() const noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Clears bits beyond 2^n in the last word after raw word edits.
  void mask_unused() noexcept;

  friend bool operator==( const truth_table&, const truth_table& ) = default;

private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

truth_table from_predicate( unsigned n, const std::function<bool( input_index )>& pred );

/// Inputs split by function value (S_0, S_1), each in ascending order.
struct support_split
{
  std::vector<input_index> s0;
  std::vector<input_index> s1;
};

support_split split_support( const truth_table& t );

/// First input where the two tables differ, or -1 when equal. Tables must share n.
std::int64_t first_mismatch( const truth_table& a, const truth_table& b );

/// Text form: "n <k>\n" followed by 2^k characters '0'/'1' and a newline.
std::string emit_table( const truth_table& t );

/// Inverse of emit_table; the trailing newline is optional. Throws parse_error.
truth_table parse_table( std::string_view text );

} // namespace mixpoly
