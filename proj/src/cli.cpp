#include <mixpoly/anf.hpp>
#include <mixpoly/cli.hpp>
#include <mixpoly/errors.hpp>
#include <mixpoly/fourier.hpp>
#include <mixpoly/funclib.hpp>
#include <mixpoly/mixed.hpp>
#include <mixpoly/reduce.hpp>
#include <mixpoly/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mixpoly
{

namespace
{

class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw usage_error( "cannot read '" + path + "'" );
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct source_options
{
  std::string func;
  unsigned n = 0u;
  std::string table_file;

  void attach( CLI::App& cmd )
  {
    auto* f = cmd.add_option( "--func", func, "Named function family" )->check( CLI::IsMember( { "prime", "sum2sq" } ) );
    auto* t = cmd.add_option( "--table", table_file, "Truth-table file" );
    cmd.add_option( "--n", n, "Variable count for --func" )->check( CLI::Range( 1u, max_vars ) );
    f->excludes( t );
  }

  bool given() const { return !table_file.empty() || !func.empty(); }

  truth_table load() const
  {
    if ( !table_file.empty() )
    {
      return parse_table( read_file( table_file ) );
    }
    if ( func.empty() )
    {
      throw usage_error( "one of --func or --table is required" );
    }
    if ( n == 0u )
    {
      throw usage_error( "--func requires --n" );
    }
    return family_function( func, n );
  }
};

merge_mode parse_mode( const std::string& mode )
{
  return mode == "paper" ? merge_mode::paper : merge_mode::generalized;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Polynomial representations of Boolean functions over x and complemented y literals", "mixpoly" };
  app.require_subcommand( 1 );

  // repr
  auto* repr = app.add_subcommand( "repr", "Print a polynomial representation of a function" );
  source_options repr_source;
  repr_source.attach( *repr );
  std::string method = "mixed";
  std::string mode = "generalized";
  bool reduce = false;
  bool trace = false;
  repr->add_option( "--method", method, "anf | fourier | mixed" )->check( CLI::IsMember( { "anf", "fourier", "mixed" } ) );
  repr->add_flag( "--reduce", reduce, "Run the term-reduction algorithm (mixed only)" );
  repr->add_option( "--mode", mode, "Merge rule: generalized | paper" )->check( CLI::IsMember( { "generalized", "paper" } ) );
  repr->add_flag( "--trace", trace, "List merge events in the report" );

  // verify
  auto* verify = app.add_subcommand( "verify", "Check a polynomial against a function on every input" );
  source_options verify_source;
  verify_source.attach( *verify );
  std::string poly_file;
  std::string ref_name;
  std::string kind = "mixed";
  auto* poly_opt = verify->add_option( "--poly", poly_file, "Polynomial file" );
  auto* ref_opt = verify->add_option( "--ref", ref_name, "Built-in reference polynomial name" );
  poly_opt->excludes( ref_opt );
  verify->add_option( "--kind", kind, "Polynomial file kind: mixed | fourier | sign" )
      ->check( CLI::IsMember( { "mixed", "fourier", "sign" } ) );

  // table1
  auto* table1 = app.add_subcommand( "table1", "Term counts for the restricted prime functions" );
  unsigned max_n = 12u;
  bool tsv = false;
  std::string table_mode = "generalized";
  table1->add_option( "--max-n", max_n, "Largest n (4..16)" )->check( CLI::Range( 4u, 16u ) );
  table1->add_flag( "--tsv", tsv, "Tab-separated output" );
  table1->add_option( "--mode", table_mode, "Merge rule: generalized | paper" )
      ->check( CLI::IsMember( { "generalized", "paper" } ) );

  std::vector<const char*> argv{ "mixpoly" };
  for ( auto const& a : args )
  {
    argv.push_back( a.c_str() );
  }

  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( const CLI::ParseError& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( repr->parsed() )
    {
      auto const t = repr_source.load();
      if ( reduce && method != "mixed" )
      {
        throw usage_error( "--reduce requires --method mixed" );
      }
      if ( method == "anf" )
      {
        out << to_string( anf_from_table( t ) ) << '\n';
      }
      else if ( method == "fourier" )
      {
        out << to_string( wht_solve( pm_values( t ) ) ) << '\n';
      }
      else if ( reduce )
      {
        auto const result = algorithm1( t, parse_mode( mode ) );
        out << to_string( result.poly ) << '\n';
        out << to_string( result.report, trace );
      }
      else
      {
        out << to_string( theorem2_representation( t ) ) << '\n';
      }
      return exit_ok;
    }

    if ( verify->parsed() )
    {
      std::int64_t mismatch = -1;
      // A built-in reference defaults to the function it was published for.
      auto const target = !ref_name.empty() && !verify_source.given() ? reference_target( reference( ref_name ) )
                                                                       : verify_source.load();
      if ( !ref_name.empty() )
      {
        mismatch = check_reference( reference( ref_name ), target );
      }
      else if ( !poly_file.empty() )
      {
        auto const text = read_file( poly_file );
        reference_polynomial ref{ poly_file, reference_kind::mixed, target.num_vars(), text, 0u, "" };
        if ( kind == "fourier" )
          ref.kind = reference_kind::pm_exact;
        else if ( kind == "sign" )
          ref.kind = reference_kind::pm_sign;
        mismatch = check_reference( ref, target );
      }
      else
      {
        throw usage_error( "one of --poly or --ref is required" );
      }
      if ( mismatch >= 0 )
      {
        out << "mismatch at input " << mismatch << '\n';
        return exit_mismatch;
      }
      out << "verified on all " << target.num_bits() << " inputs\n";
      return exit_ok;
    }

    if ( table1->parsed() )
    {
      auto const start = std::chrono::steady_clock::now();
      auto const rows = compute_table1( max_n, parse_mode( table_mode ) );
      auto const total = std::chrono::steady_clock::now() - start;
      out << format_table1( rows, tsv );
      out << format_timings( rows, std::chrono::duration_cast<std::chrono::nanoseconds>( total ) );
      for ( auto const& row : rows )
      {
        if ( !row.verified )
          return exit_mismatch;
      }
      return exit_ok;
    }
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

} // namespace mixpoly
