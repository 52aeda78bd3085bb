#pragma once

#include <mixpoly/mixed.hpp>
#include <mixpoly/truth_table.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

/*! \file reduce.hpp
  \brief Term reduction by pair merging with x_i + y_i = 1.

  Two monomials that agree everywhere except at one position merge into one.
  The paper rule only merges an x_i/y_i pair. The generalized rule also uses
  m + m x_i = m y_i and m + m y_i = m x_i.

  A merge round visits terms in merge order (ascending atom index: per
  position ABSENT < Y < X, position 1 first). Each unused term is paired with
  the first later unused term it merges with, so every term takes part in at
  most one merge per round. Merged terms join the polynomial after the round,
  cancelling against equal terms mod 2. Rounds repeat until one merges nothing.
*/

namespace mixpoly
{

enum class merge_mode
{
  generalized,
  paper
};

std::string to_string( merge_mode mode );

/// Order used to scan for merge partners: ascending atom index with absent literals first.
bool merge_order_less( const mixed_monomial& a, const mixed_monomial& b ) noexcept;

std::optional<mixed_monomial> try_merge( const mixed_monomial& a, const mixed_monomial& b,
                                         merge_mode mode = merge_mode::generalized ) noexcept;

struct merge_event
{
  unsigned stage = 2u; ///< 2 for the initial merge, 3 for the re-merge after substitution.
  unsigned round = 1u;
  mixed_monomial first;
  mixed_monomial second;
  mixed_monomial merged;
  bool cancelled = false; ///< merged term annihilated against an equal term.
};

struct merge_result
{
  mixed_polynomial poly;
  std::vector<merge_event> trace;
  unsigned rounds = 0u;
};

/// One merge round; `rounds` is 1 when anything merged, else 0.
merge_result merge_round( const mixed_polynomial& p, merge_mode mode = merge_mode::generalized );

/// Repeats merge rounds until no pair of remaining terms merges.
merge_result merge_fixpoint( const mixed_polynomial& p, merge_mode mode = merge_mode::generalized );

/// Substitutes y_i -> x_i + 1, re-injects the ANF and merges to a fixpoint.
merge_result substitution_pass( const mixed_polynomial& p, merge_mode mode = merge_mode::generalized );

struct reduction_report
{
  unsigned n = 1u;
  merge_mode mode = merge_mode::generalized;
  std::size_t initial_terms = 0u;
  std::size_t after_merge_terms = 0u;
  std::size_t substituted_terms = 0u; ///< ANF size before the stage-3 re-merge.
  std::size_t after_substitution_terms = 0u;
  std::size_t selected_terms = 0u;
  unsigned selected_stage = 2u;
  std::vector<merge_event> merge_trace;
  std::chrono::nanoseconds elapsed{ 0 };
};

struct reduction_result
{
  mixed_polynomial poly;
  reduction_report report;
};

/// Support-based construction, merge fixpoint, substitution pass, then keeps the
/// candidate with fewest terms (then fewest literals, then the stage-2 one).
reduction_result algorithm1( const truth_table& t, merge_mode mode = merge_mode::generalized );

/// Deterministic key=value block; `elapsed_ms` is the last line. With
/// `with_trace`, one line per merge event follows the counts.
std::string to_string( const reduction_report& report, bool with_trace = false );

} // namespace mixpoly
