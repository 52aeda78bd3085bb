#pragma once

#include <mixpoly/reduce.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace mixpoly
{

/// One restricted-prime row of the comparison table.
struct report_row
{
  std::string function_name;
  unsigned n = 0u;
  std::optional<std::size_t> paper_sign_count; ///< published sign-representation count
  std::optional<std::size_t> paper_own_count;  ///< published count for the mixed x/y method
  std::size_t our_count = 0u;
  double our_fraction = 0.0; ///< our_count / 2^n
  bool verified = false;     ///< result evaluates to the prime table on every input
  std::chrono::nanoseconds elapsed{ 0 };
};

std::optional<std::size_t> published_sign_count( unsigned n );
std::optional<std::size_t> published_own_count( unsigned n );

/// Runs algorithm1 on p_4 .. p_max_n. Rows may be computed concurrently and
/// are returned in order of n. Throws std::invalid_argument unless 4 <= max_n <= 16.
std::vector<report_row> compute_table1( unsigned max_n, merge_mode mode = merge_mode::generalized );

/// Deterministic table text (no timings); tab-separated when `tsv`.
std::string format_table1( const std::vector<report_row>& rows, bool tsv = false );

/// Timing lines, one per row plus a total, each starting with "time".
std::string format_timings( const std::vector<report_row>& rows, std::chrono::nanoseconds total );

/// count / 2^n as a percentage with two decimals, e.g. "17.97%".
std::string format_percent( std::size_t count, unsigned n );

} // namespace mixpoly
