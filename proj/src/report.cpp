#include <mixpoly/funclib.hpp>
#include <mixpoly/report.hpp>

#include <cstdio>
#include <stdexcept>

namespace mixpoly
{

std::optional<std::size_t> published_sign_count( unsigned n )
{
  switch ( n )
  {
  case 4: return 7u;
  case 5: return 17u;
  case 6: return 39u;
  case 7: return 82u;
  case 8: return 147u;
  case 9: return 315u;
  case 10: return 633u;
  case 11: return 1259u;
  default: return std::nullopt;
  }
}

std::optional<std::size_t> published_own_count( unsigned n )
{
  switch ( n )
  {
  case 4: return 4u;
  case 5: return 6u;
  case 6: return 11u;
  case 7: return 23u;
  case 8: return 38u;
  case 9: return 66u;
  case 10: return 115u;
  case 11: return 202u;
  case 12: return 366u;
  default: return std::nullopt;
  }
}

std::vector<report_row> compute_table1( unsigned max_n, merge_mode mode )
{
  if ( max_n < 4u || max_n > 16u )
  {
    throw std::invalid_argument( "--max-n must be in [4, 16]" );
  }
  std::vector<report_row> rows( max_n - 3u );

#pragma omp parallel for schedule( dynamic, 1 )
  for ( int i = static_cast<int>( rows.size() ) - 1; i >= 0; --i )
  {
    auto const n = static_cast<unsigned>( i ) + 4u;
    auto const table = prime_function( n );
    auto const result = algorithm1( table, mode );

    auto& row = rows[i];
    row.function_name = "p" + std::to_string( n );
    row.n = n;
    row.paper_sign_count = published_sign_count( n );
    row.paper_own_count = published_own_count( n );
    row.our_count = result.poly.num_terms();
    row.our_fraction = static_cast<double>( row.our_count ) / static_cast<double>( table.num_bits() );
    row.verified = table_from_mixed( result.poly ) == table;
    row.elapsed = result.report.elapsed;
  }
  return rows;
}

std::string format_percent( std::size_t count, unsigned n )
{
  char buf[32];
  std::snprintf( buf, sizeof buf, "%.2f%%", 100.0 * static_cast<double>( count ) / static_cast<double>( std::uint64_t{ 1 } << n ) );
  return buf;
}

std::string format_table1( const std::vector<report_row>& rows, bool tsv )
{
  auto const count_cell = [&]( std::optional<std::size_t> count, unsigned n ) -> std::string {
    if ( !count )
      return "-";
    return std::to_string( *count ) + ( tsv ? "\t" : " (" ) + format_percent( *count, n ) + ( tsv ? "" : ")" );
  };
  auto const delta_cell = [&]( const report_row& row ) -> std::string {
    if ( !row.paper_own_count )
      return "-";
    char buf[32];
    auto const paper = static_cast<double>( *row.paper_own_count );
    std::snprintf( buf, sizeof buf, "%+.1f%%", 100.0 * ( static_cast<double>( row.our_count ) - paper ) / paper );
    return buf;
  };

  std::string out;
  char buf[256];
  if ( tsv )
  {
    out += "function\tn\tpaper_sign\tpaper_sign_pct\tpaper_own\tpaper_own_pct\tours\tours_pct\tdelta_vs_paper_own\tbound\tverified\n";
    for ( auto const& row : rows )
    {
      auto const sign = row.paper_sign_count ? count_cell( row.paper_sign_count, row.n ) : std::string( "-\t-" );
      auto const own = row.paper_own_count ? count_cell( row.paper_own_count, row.n ) : std::string( "-\t-" );
      out += row.function_name + '\t' + std::to_string( row.n ) + '\t' + sign + '\t' + own + '\t' +
             std::to_string( row.our_count ) + '\t' + format_percent( row.our_count, row.n ) + '\t' + delta_cell( row ) +
             '\t' + std::to_string( std::uint64_t{ 1 } << ( row.n - 1u ) ) + '\t' + ( row.verified ? "yes" : "no" ) + '\n';
    }
    return out;
  }

  std::snprintf( buf, sizeof buf, "%-9s %3s  %-18s %-18s %-18s %-8s %6s  %s\n", "function", "n", "paper sign-repr",
                 "paper mixed", "ours", "delta", "bound", "verified" );
  out += buf;
  for ( auto const& row : rows )
  {
    auto const ours = std::to_string( row.our_count ) + " (" + format_percent( row.our_count, row.n ) + ")";
    std::snprintf( buf, sizeof buf, "%-9s %3u  %-18s %-18s %-18s %-8s %6llu  %s\n", row.function_name.c_str(), row.n,
                   count_cell( row.paper_sign_count, row.n ).c_str(), count_cell( row.paper_own_count, row.n ).c_str(),
                   ours.c_str(), delta_cell( row ).c_str(),
                   static_cast<unsigned long long>( std::uint64_t{ 1 } << ( row.n - 1u ) ), row.verified ? "yes" : "no" );
    out += buf;
  }
  return out;
}

std::string format_timings( const std::vector<report_row>& rows, std::chrono::nanoseconds total )
{
  std::string out;
  char buf[128];
  for ( auto const& row : rows )
  {
    std::snprintf( buf, sizeof buf, "time %s %.3f ms\n", row.function_name.c_str(),
                   std::chrono::duration<double, std::milli>( row.elapsed ).count() );
    out += buf;
  }
  std::snprintf( buf, sizeof buf, "time total %.3f ms\n", std::chrono::duration<double, std::milli>( total ).count() );
  out += buf;
  return out;
}

} // namespace mixpoly
