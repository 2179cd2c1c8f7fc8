/* sfqmap: multiphase SFQ technology mapping
 * Copyright (C) 2025-2026  sfqmap authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

#include "sfqmap/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace sfqmap
{

const char* to_string( SolveStatus status )
{
  switch ( status )
  {
  case SolveStatus::optimal: return "optimal";
  case SolveStatus::feasible: return "feasible";
  case SolveStatus::infeasible: return "infeasible";
  case SolveStatus::timeout_no_solution: return "timeout-no-solution";
  }
  return "?";
}

VarId ConstraintModel::add_int_var( std::string name, int64_t lower, int64_t upper )
{
  if ( lower > upper )
    throw std::invalid_argument( "int var '" + name + "': lower > upper" );
  names_.push_back( std::move( name ) );
  lower_.push_back( lower );
  upper_.push_back( upper );
  is_bool_.push_back( false );
  return static_cast<VarId>( names_.size() - 1 );
}

VarId ConstraintModel::add_bool_var( std::string name )
{
  names_.push_back( std::move( name ) );
  lower_.push_back( 0 );
  upper_.push_back( 1 );
  is_bool_.push_back( true );
  return static_cast<VarId>( names_.size() - 1 );
}

void ConstraintModel::check_terms( std::vector<LinearTerm> const& terms ) const
{
  for ( auto const& t : terms )
  {
    if ( t.var >= num_vars() )
      throw std::invalid_argument( "linear term references undeclared variable" );
  }
}

void ConstraintModel::add_linear( std::vector<LinearTerm> terms, Cmp cmp, int64_t bound )
{
  check_terms( terms );
  linear_.push_back( { std::move( terms ), cmp, bound } );
}

void ConstraintModel::add_clause( std::vector<Literal> literals )
{
  for ( auto const& l : literals )
  {
    if ( l.var >= num_vars() || !is_bool_[l.var] )
      throw std::invalid_argument( "clause literal must reference a declared bool var" );
  }
  clauses_.push_back( std::move( literals ) );
}

void ConstraintModel::force_literal( Literal literal )
{
  if ( literal.var >= num_vars() || !is_bool_[literal.var] )
    throw std::invalid_argument( "forced literal must reference a declared bool var" );
  forced_.push_back( literal );
}

void ConstraintModel::set_objective( std::vector<LinearTerm> terms )
{
  check_terms( terms );
  objective_ = std::move( terms );
}

namespace
{

/* Internal search state.  All linear constraints are normalized to
 * `sum(terms) <= bound`; the dynamic objective bound is kept as one
 * extra row whose bound tightens on every incumbent. */
class Searcher
{
public:
  Searcher( ConstraintModel const& model, SolverBudget const& budget )
      : model_( model ), budget_( budget )
  {
    const uint32_t nv = model.num_vars();
    lo_.resize( nv );
    hi_.resize( nv );
    for ( VarId v = 0; v < nv; ++v )
    {
      lo_[v] = model.lower( v );
      hi_[v] = model.upper( v );
    }

    for ( auto const& c : model.linear_constraints() )
    {
      if ( c.cmp == Cmp::le || c.cmp == Cmp::eq )
        add_row( c.terms, c.bound, /*negate=*/false );
      if ( c.cmp == Cmp::ge || c.cmp == Cmp::eq )
        add_row( c.terms, c.bound, /*negate=*/true );
    }

    // Objective bound row (index kept; bound starts inactive).
    objective_row_ = ~0u;
    if ( !model.objective().empty() )
    {
      objective_row_ = static_cast<uint32_t>( rows_.size() );
      std::vector<LinearTerm> terms = model.objective();
      int64_t bound = 0;
      for ( auto const& t : terms )
        bound += t.coeff > 0 ? t.coeff * hi_[t.var] : t.coeff * lo_[t.var];
      add_row( terms, bound, false );
    }

    var_rows_.resize( nv );
    for ( uint32_t r = 0; r < rows_.size(); ++r )
    {
      for ( auto const& t : rows_[r].terms )
        var_rows_[t.var].push_back( r );
    }
    var_clauses_.resize( nv );
    auto const& clauses = model.clauses();
    for ( uint32_t ci = 0; ci < clauses.size(); ++ci )
    {
      for ( auto const& l : clauses[ci] )
        var_clauses_[l.var].push_back( ci );
    }

    start_ = std::chrono::steady_clock::now();
  }

  Solution run()
  {
    Solution result;

    bool root_ok = true;
    for ( auto const& l : model_.forced_literals() )
    {
      if ( !fix_bool( l ) )
      {
        root_ok = false;
        break;
      }
    }
    if ( root_ok )
    {
      for ( uint32_t r = 0; r < rows_.size() && root_ok; ++r )
        queue_row( r );
      for ( uint32_t c = 0; c < model_.clauses().size() && root_ok; ++c )
        queue_clause( c );
      root_ok = propagate();
    }

    if ( root_ok )
    {
      objective_floor_ = 0;
      for ( auto const& t : model_.objective() )
        objective_floor_ += t.coeff > 0 ? t.coeff * lo_[t.var] : t.coeff * hi_[t.var];
      search( 0 );
    }

    result.stats.nodes = nodes_;
    result.stats.wall_s = elapsed_s();
    if ( has_incumbent_ )
    {
      result.assignment = best_;
      result.objective_value = best_obj_;
      result.status = stopped_ ? SolveStatus::feasible : SolveStatus::optimal;
    }
    else
    {
      result.status = stopped_ ? SolveStatus::timeout_no_solution : SolveStatus::infeasible;
    }
    return result;
  }

private:
  struct Row
  {
    std::vector<LinearTerm> terms;
    int64_t bound{};
  };

  struct TrailEntry
  {
    VarId var{};
    int64_t lo{}, hi{};
  };

  void add_row( std::vector<LinearTerm> const& terms, int64_t bound, bool negate )
  {
    Row row;
    row.terms.reserve( terms.size() );
    for ( auto const& t : terms )
      row.terms.push_back( { negate ? -t.coeff : t.coeff, t.var } );
    row.bound = negate ? -bound : bound;
    rows_.push_back( std::move( row ) );
  }

  double elapsed_s() const
  {
    return std::chrono::duration<double>( std::chrono::steady_clock::now() - start_ ).count();
  }

  bool budget_exceeded()
  {
    if ( stopped_ )
      return true;
    if ( budget_.node_limit != 0 && nodes_ >= budget_.node_limit )
      stopped_ = true;
    if ( !stopped_ && budget_.time_limit_s > 0.0 && ( nodes_ % 256 == 0 ) &&
         elapsed_s() > budget_.time_limit_s )
      stopped_ = true;
    return stopped_;
  }

  bool set_lo( VarId v, int64_t value )
  {
    if ( value <= lo_[v] )
      return true;
    trail_.push_back( { v, lo_[v], hi_[v] } );
    lo_[v] = value;
    if ( lo_[v] > hi_[v] )
      return false;
    touch( v );
    return true;
  }

  bool set_hi( VarId v, int64_t value )
  {
    if ( value >= hi_[v] )
      return true;
    trail_.push_back( { v, lo_[v], hi_[v] } );
    hi_[v] = value;
    if ( lo_[v] > hi_[v] )
      return false;
    touch( v );
    return true;
  }

  bool fix_bool( Literal l )
  {
    return l.positive ? set_lo( l.var, 1 ) : set_hi( l.var, 0 );
  }

  void touch( VarId v )
  {
    for ( auto r : var_rows_[v] )
      queue_row( r );
    for ( auto c : var_clauses_[v] )
      queue_clause( c );
  }

  void queue_row( uint32_t r )
  {
    if ( !row_queued_.empty() && row_queued_[r] )
      return;
    if ( row_queued_.empty() )
      row_queued_.assign( rows_.size(), false );
    row_queued_[r] = true;
    row_queue_.push_back( r );
  }

  void queue_clause( uint32_t c )
  {
    if ( clause_queued_.empty() )
      clause_queued_.assign( model_.clauses().size(), false );
    if ( clause_queued_[c] )
      return;
    clause_queued_[c] = true;
    clause_queue_.push_back( c );
  }

  // Bounds-consistency on one <=-row; returns false on conflict.
  bool propagate_row( Row const& row )
  {
    int64_t min_activity = 0;
    for ( auto const& t : row.terms )
      min_activity += t.coeff > 0 ? t.coeff * lo_[t.var] : t.coeff * hi_[t.var];
    if ( min_activity > row.bound )
      return false;

    const int64_t slack = row.bound - min_activity;
    for ( auto const& t : row.terms )
    {
      if ( t.coeff > 0 )
      {
        // t.coeff * (x - lo) <= slack
        const int64_t max_x = lo_[t.var] + slack / t.coeff;
        if ( max_x < hi_[t.var] && !set_hi( t.var, max_x ) )
          return false;
      }
      else if ( t.coeff < 0 )
      {
        const int64_t min_x = hi_[t.var] - slack / ( -t.coeff );
        if ( min_x > lo_[t.var] && !set_lo( t.var, min_x ) )
          return false;
      }
    }
    return true;
  }

  bool propagate_clause( std::vector<Literal> const& clause )
  {
    uint32_t unfixed = 0;
    Literal unit{};
    for ( auto const& l : clause )
    {
      if ( lo_[l.var] == hi_[l.var] )
      {
        const bool value = lo_[l.var] != 0;
        if ( value == l.positive )
          return true; // satisfied
      }
      else
      {
        ++unfixed;
        unit = l;
      }
    }
    if ( unfixed == 0 )
      return false;
    if ( unfixed == 1 )
      return fix_bool( unit );
    return true;
  }

  bool propagate()
  {
    while ( !row_queue_.empty() || !clause_queue_.empty() )
    {
      while ( !row_queue_.empty() )
      {
        const uint32_t r = row_queue_.back();
        row_queue_.pop_back();
        row_queued_[r] = false;
        int64_t saved_bound = rows_[r].bound;
        if ( r == objective_row_ && has_incumbent_ )
          rows_[r].bound = best_obj_ - 1;
        const bool ok = propagate_row( rows_[r] );
        rows_[r].bound = saved_bound;
        if ( !ok )
          return false;
      }
      while ( !clause_queue_.empty() )
      {
        const uint32_t c = clause_queue_.back();
        clause_queue_.pop_back();
        clause_queued_[c] = false;
        if ( !propagate_clause( model_.clauses()[c] ) )
          return false;
      }
    }
    return true;
  }

  void clear_queues()
  {
    for ( auto r : row_queue_ )
      row_queued_[r] = false;
    row_queue_.clear();
    for ( auto c : clause_queue_ )
      clause_queued_[c] = false;
    clause_queue_.clear();
  }

  void record_incumbent()
  {
    int64_t obj = 0;
    for ( auto const& t : model_.objective() )
      obj += t.coeff * lo_[t.var];
    if ( !has_incumbent_ || obj < best_obj_ )
    {
      has_incumbent_ = true;
      best_obj_ = obj;
      best_.assign( lo_.begin(), lo_.end() );
      if ( best_obj_ == objective_floor_ )
        proven_done_ = true; // objective cannot improve further
    }
  }

  VarId first_unfixed( VarId from ) const
  {
    for ( VarId v = from; v < model_.num_vars(); ++v )
    {
      if ( lo_[v] != hi_[v] )
        return v;
    }
    return ~0u;
  }

  void search( VarId from )
  {
    const VarId v = first_unfixed( from );
    if ( v == ~0u )
    {
      record_incumbent();
      return;
    }

    const int64_t lo = lo_[v];
    const int64_t hi = hi_[v];
    for ( int64_t value = lo; value <= hi; ++value )
    {
      ++nodes_;
      if ( budget_exceeded() )
        return;

      const size_t mark = trail_.size();
      bool ok = set_lo( v, value ) && set_hi( v, value );
      if ( ok && has_incumbent_ && objective_row_ != ~0u )
        queue_row( objective_row_ );
      ok = ok && propagate();
      if ( ok )
        search( v + 1 );
      else
        clear_queues();

      // Chronological backtrack.
      while ( trail_.size() > mark )
      {
        auto const& e = trail_.back();
        lo_[e.var] = e.lo;
        hi_[e.var] = e.hi;
        trail_.pop_back();
      }
      clear_queues();

      if ( stopped_ || proven_done_ )
        return;
    }
  }

  ConstraintModel const& model_;
  SolverBudget const& budget_;
  std::chrono::steady_clock::time_point start_;

  std::vector<int64_t> lo_, hi_;
  std::vector<Row> rows_;
  uint32_t objective_row_{ ~0u };
  std::vector<std::vector<uint32_t>> var_rows_;
  std::vector<std::vector<uint32_t>> var_clauses_;

  std::vector<uint32_t> row_queue_;
  std::vector<bool> row_queued_;
  std::vector<uint32_t> clause_queue_;
  std::vector<bool> clause_queued_;
  std::vector<TrailEntry> trail_;

  uint64_t nodes_{ 0 };
  bool stopped_{ false };
  bool proven_done_{ false };
  bool has_incumbent_{ false };
  int64_t best_obj_{ 0 };
  int64_t objective_floor_{ 0 };
  std::vector<int64_t> best_;
};

} // namespace

Solution solve( ConstraintModel const& model, SolverBudget const& budget, uint64_t /* seed */ )
{
  Searcher searcher( model, budget );
  return searcher.run();
}

bool verify_solution( ConstraintModel const& model, std::vector<int64_t> const& assignment )
{
  if ( assignment.size() != model.num_vars() )
    throw std::invalid_argument( "verify_solution: assignment does not cover all variables" );

  for ( VarId v = 0; v < model.num_vars(); ++v )
  {
    if ( assignment[v] < model.lower( v ) || assignment[v] > model.upper( v ) )
      return false;
  }
  for ( auto const& c : model.linear_constraints() )
  {
    int64_t lhs = 0;
    for ( auto const& t : c.terms )
      lhs += t.coeff * assignment[t.var];
    if ( c.cmp == Cmp::le && lhs > c.bound )
      return false;
    if ( c.cmp == Cmp::ge && lhs < c.bound )
      return false;
    if ( c.cmp == Cmp::eq && lhs != c.bound )
      return false;
  }
  for ( auto const& clause : model.clauses() )
  {
    bool satisfied = false;
    for ( auto const& l : clause )
    {
      if ( ( assignment[l.var] != 0 ) == l.positive )
      {
        satisfied = true;
        break;
      }
    }
    if ( !satisfied )
      return false;
  }
  for ( auto const& l : model.forced_literals() )
  {
    if ( ( assignment[l.var] != 0 ) != l.positive )
      return false;
  }
  return true;
}

std::string dump_model( ConstraintModel const& model )
{
  std::ostringstream out;
  for ( VarId v = 0; v < model.num_vars(); ++v )
  {
    out << ( model.is_bool( v ) ? "bool " : "int " ) << model.name( v );
    if ( !model.is_bool( v ) )
      out << " in [" << model.lower( v ) << ", " << model.upper( v ) << "]";
    out << "\n";
  }
  auto write_terms = [&]( std::vector<LinearTerm> const& terms ) {
    for ( size_t i = 0; i < terms.size(); ++i )
    {
      if ( i > 0 )
        out << " + ";
      if ( terms[i].coeff != 1 )
        out << terms[i].coeff << "*";
      out << model.name( terms[i].var );
    }
  };
  for ( auto const& c : model.linear_constraints() )
  {
    write_terms( c.terms );
    out << ( c.cmp == Cmp::le ? " <= " : c.cmp == Cmp::ge ? " >= " : " = " ) << c.bound << "\n";
  }
  for ( auto const& clause : model.clauses() )
  {
    out << "(";
    for ( size_t i = 0; i < clause.size(); ++i )
    {
      if ( i > 0 )
        out << " | ";
      if ( !clause[i].positive )
        out << "!";
      out << model.name( clause[i].var );
    }
    out << ")\n";
  }
  for ( auto const& l : model.forced_literals() )
    out << "force " << ( l.positive ? "" : "!" ) << model.name( l.var ) << "\n";
  if ( !model.objective().empty() )
  {
    out << "min: ";
    write_terms( model.objective() );
    out << "\n";
  }
  return out.str();
}

} // namespace sfqmap
