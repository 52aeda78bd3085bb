#include <mixpoly/reduce.hpp>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <type_traits>
#include <unordered_map>

namespace mixpoly
{

namespace
{

unsigned merge_code( const mixed_monomial& m, std::uint32_t bit ) noexcept
{
  return ( m.x & bit ) ? 2u : ( ( m.y & bit ) ? 1u : 0u );
}

std::uint64_t key( const mixed_monomial& m ) noexcept
{
  return ( std::uint64_t{ m.x } << 32u ) | m.y;
}

} // namespace

std::string to_string( merge_mode mode )
{
  return mode == merge_mode::paper ? "paper" : "generalized";
}

bool merge_order_less( const mixed_monomial& a, const mixed_monomial& b ) noexcept
{
  auto const diff = ( a.x ^ b.x ) | ( a.y ^ b.y );
  if ( diff == 0u )
  {
    return false;
  }
  auto const bit = std::bit_floor( diff );
  return merge_code( a, bit ) < merge_code( b, bit );
}

std::optional<mixed_monomial> try_merge( const mixed_monomial& a, const mixed_monomial& b, merge_mode mode ) noexcept
{
  auto const diff = ( a.x ^ b.x ) | ( a.y ^ b.y );
  if ( !std::has_single_bit( diff ) )
  {
    return std::nullopt;
  }
  auto const in_a = ( ( a.x | a.y ) & diff ) != 0u;
  auto const in_b = ( ( b.x | b.y ) & diff ) != 0u;
  auto const rest = mixed_monomial{ a.x & ~diff, a.y & ~diff };
  if ( in_a && in_b )
  {
    // x_i + y_i = 1
    return rest;
  }
  if ( mode == merge_mode::paper )
  {
    return std::nullopt;
  }
  // m + m x_i = m y_i and m + m y_i = m x_i
  auto const& present = in_a ? a : b;
  if ( present.x & diff )
  {
    return mixed_monomial{ rest.x, rest.y | diff };
  }
  return mixed_monomial{ rest.x | diff, rest.y };
}

merge_result merge_round( const mixed_polynomial& p, merge_mode mode )
{
  merge_result result;
  auto order = p.terms;
  std::sort( order.begin(), order.end(), merge_order_less );

  std::unordered_map<std::uint64_t, std::uint32_t> position;
  position.reserve( order.size() * 2u );
  for ( std::uint32_t i = 0u; i < order.size(); ++i )
  {
    position.emplace( key( order[i] ), i );
  }

  std::vector<bool> used( order.size(), false );
  std::vector<mixed_monomial> merged;
  auto const n = p.n;

  for ( std::uint32_t i = 0u; i < order.size(); ++i )
  {
    if ( used[i] )
    {
      continue;
    }
    auto const& m = order[i];
    auto best = static_cast<std::uint32_t>( order.size() );
    for ( unsigned pos = 1u; pos <= n; ++pos )
    {
      auto const bit = var_bit( n, pos );
      auto const base = mixed_monomial{ m.x & ~bit, m.y & ~bit };
      mixed_monomial candidates[3] = { base, { base.x | bit, base.y }, { base.x, base.y | bit } };
      for ( auto const& c : candidates )
      {
        if ( c == m )
          continue;
        if ( mode == merge_mode::paper && ( c == base || m == base ) )
          continue;
        auto const it = position.find( key( c ) );
        if ( it != position.end() && it->second > i && it->second < best && !used[it->second] )
        {
          best = it->second;
        }
      }
    }
    if ( best == order.size() )
    {
      continue;
    }
    used[i] = used[best] = true;
    auto const combined = *try_merge( m, order[best], mode );
    merged.push_back( combined );
    result.trace.push_back( merge_event{ 2u, 1u, m, order[best], combined, false } );
  }

  std::vector<mixed_monomial> next;
  next.reserve( order.size() );
  for ( std::uint32_t i = 0u; i < order.size(); ++i )
  {
    if ( !used[i] )
    {
      next.push_back( order[i] );
    }
  }
  next.insert( next.end(), merged.begin(), merged.end() );
  result.poly = make_mixed_polynomial( n, std::move( next ) );

  if ( !result.trace.empty() )
  {
    result.rounds = 1u;
    for ( auto& e : result.trace )
    {
      e.cancelled = !std::binary_search( result.poly.terms.begin(), result.poly.terms.end(), e.merged, canonical_less );
    }
  }
  return result;
}

merge_result merge_fixpoint( const mixed_polynomial& p, merge_mode mode )
{
  merge_result result{ p, {}, 0u };
  while ( true )
  {
    auto step = merge_round( result.poly, mode );
    if ( step.rounds == 0u )
    {
      break;
    }
    ++result.rounds;
    for ( auto& e : step.trace )
    {
      e.round = result.rounds;
      result.trace.push_back( e );
    }
    result.poly = std::move( step.poly );
  }
  return result;
}

merge_result substitution_pass( const mixed_polynomial& p, merge_mode mode )
{
  auto result = merge_fixpoint( mixed_from_anf( substitute_y( p ) ), mode );
  for ( auto& e : result.trace )
  {
    e.stage = 3u;
  }
  return result;
}

reduction_result algorithm1( const truth_table& t, merge_mode mode )
{
  auto const start = std::chrono::steady_clock::now();

  reduction_result out;
  auto& report = out.report;
  report.n = t.num_vars();
  report.mode = mode;

  auto const stage1 = theorem2_representation( t );
  report.initial_terms = stage1.num_terms();

  auto stage2 = merge_fixpoint( stage1, mode );
  report.after_merge_terms = stage2.poly.num_terms();

  report.substituted_terms = substitute_y( stage2.poly ).num_terms();
  auto stage3 = substitution_pass( stage2.poly, mode );
  report.after_substitution_terms = stage3.poly.num_terms();

  auto const prefer_stage3 = [&] {
    if ( stage3.poly.num_terms() != stage2.poly.num_terms() )
      return stage3.poly.num_terms() < stage2.poly.num_terms();
    return stage3.poly.num_literals() < stage2.poly.num_literals();
  }();

  report.merge_trace = std::move( stage2.trace );
  report.merge_trace.insert( report.merge_trace.end(), stage3.trace.begin(), stage3.trace.end() );
  out.poly = prefer_stage3 ? std::move( stage3.poly ) : std::move( stage2.poly );
  report.selected_stage = prefer_stage3 ? 3u : 2u;
  report.selected_terms = out.poly.num_terms();
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>( std::chrono::steady_clock::now() - start );
  return out;
}

std::string to_string( const reduction_report& report, bool with_trace )
{
  std::string out;
  auto const line = [&]( const char* name, auto value ) {
    out += name;
    out += '=';
    if constexpr ( std::is_convertible_v<decltype( value ), std::string> )
      out += value;
    else
      out += std::to_string( value );
    out += '\n';
  };
  line( "n", report.n );
  line( "mode", to_string( report.mode ) );
  line( "initial_terms", report.initial_terms );
  line( "after_merge_terms", report.after_merge_terms );
  line( "substituted_terms", report.substituted_terms );
  line( "after_substitution_terms", report.after_substitution_terms );
  line( "selected_terms", report.selected_terms );
  line( "selected_stage", report.selected_stage );
  line( "merges", report.merge_trace.size() );
  if ( with_trace )
  {
    for ( auto const& e : report.merge_trace )
    {
      out += e.cancelled ? "cancel" : "merge";
      out += " stage=" + std::to_string( e.stage ) + " round=" + std::to_string( e.round ) + " ";
      out += to_string( report.n, e.first ) + " + " + to_string( report.n, e.second ) + " -> " +
             to_string( report.n, e.merged ) + '\n';
    }
  }
  char buf[64];
  std::snprintf( buf, sizeof buf, "elapsed_ms=%.3f\n", std::chrono::duration<double, std::milli>( report.elapsed ).count() );
  out += buf;
  return out;
}

} // namespace mixpoly
