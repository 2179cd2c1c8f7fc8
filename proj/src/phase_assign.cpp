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

#include "sfqmap/phase_assign.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfqmap
{

int32_t sa_fanin_offset( SfqNetwork const& sfq, uint32_t fanin,
                         std::vector<uint32_t> const& fanout_counts )
{
  const bool clocked_reference =
      sfq.category_of( fanin ) == GateCategory::AS || sfq.net.is_pi( fanin );
  if ( clocked_reference && fanout_counts[fanin] <= 1 )
    return 0;
  return 1;
}

int32_t edge_offset( SfqNetwork const& sfq, uint32_t i, uint32_t j,
                     std::vector<uint32_t> const& fanout_counts )
{
  switch ( sfq.category_of( j ) )
  {
  case GateCategory::AS:
    return 1;
  case GateCategory::SA:
    return sa_fanin_offset( sfq, i, fanout_counts );
  case GateCategory::AA:
  case GateCategory::IO:
    return 0;
  }
  return 0;
}

namespace
{

int32_t clocked_depth( SfqNetwork const& sfq )
{
  int32_t max_depth = 0;
  std::vector<int32_t> depth( sfq.net.size(), 0 );
  for ( auto id : topological_order( sfq.net ) )
  {
    auto const& n = sfq.net.node( id );
    int32_t d = 0;
    for ( auto f : n.fanins )
      d = std::max( d, depth[f] );
    const auto cat = sfq.category_of( id );
    if ( cat == GateCategory::AS || cat == GateCategory::SA )
      ++d;
    depth[id] = d;
    max_depth = std::max( max_depth, d );
  }
  return max_depth;
}

} // namespace

StageBounds build_stage_bounds( SfqNetwork const& sfq, uint32_t n )
{
  const auto order = topological_order( sfq.net );
  const auto fanout_counts = sfq.net.fanout_counts();
  const int32_t np = static_cast<int32_t>( n );

  StageBounds bounds;
  bounds.sigma_max = np * ( clocked_depth( sfq ) + 1 ) - 1;
  bounds.asap.assign( sfq.net.size(), 0 );
  bounds.alap.assign( sfq.net.size(), bounds.sigma_max );

  for ( auto id : order )
  {
    auto const& node = sfq.net.node( id );
    int32_t lo = 0;
    for ( auto f : node.fanins )
      lo = std::max( lo, bounds.asap[f] + edge_offset( sfq, f, id, fanout_counts ) );
    bounds.asap[id] = lo;
  }

  for ( auto it = order.rbegin(); it != order.rend(); ++it )
  {
    auto const& node = sfq.net.node( *it );
    if ( node.kind == GateKind::PI )
      bounds.alap[*it] = std::min( bounds.alap[*it], np - 1 );
    for ( auto f : node.fanins )
    {
      bounds.alap[f] = std::min( bounds.alap[f],
                                 bounds.alap[*it] - edge_offset( sfq, f, *it, fanout_counts ) );
    }
  }

  return bounds;
}

PhaseModel build_phase_model( SfqNetwork const& sfq, uint32_t n, ObjectiveMode mode,
                              StageBounds const& bounds )
{
  const auto order = topological_order( sfq.net );
  const auto fanout_counts = sfq.net.fanout_counts();
  const auto fanouts = sfq.net.fanouts();
  const int32_t np = static_cast<int32_t>( n );

  for ( uint32_t id = 0; id < sfq.net.size(); ++id )
  {
    if ( !sfq.net.is_po( id ) && bounds.asap[id] > bounds.alap[id] )
      throw std::invalid_argument( "build_phase_model: infeasible stage bounds at node " +
                                   std::to_string( id ) );
  }

  PhaseModel pm;
  auto& model = pm.model;
  pm.sigma_var.assign( sfq.net.size(), ~0u );

  // Variable order drives the search: the shared PO epoch first, then
  // the DFF-count terms, then the stages.  Once the epoch and all count
  // variables are fixed, the rest is a pure difference system that
  // bounds propagation decides without backtracking.
  const int32_t max_epoch = bounds.sigma_max / np;
  pm.epoch_out = model.add_int_var( "Eout", 0, max_epoch );

  // One floor term b = (D + constant) div n per objective unit; the
  // numerator D is wired up after the stage variables exist.
  struct FloorTerm
  {
    VarId b{};
    int32_t constant{};
    std::vector<LinearTerm> numerator; // filled later
  };
  std::vector<FloorTerm> terms;
  auto declare_floor = [&]( std::string const& name, int32_t constant, int32_t numerator_ub ) {
    FloorTerm term;
    term.constant = constant;
    term.b = model.add_int_var( name, 0, std::max( 0, ( numerator_ub + constant ) / np ) );
    terms.push_back( term );
    return static_cast<uint32_t>( terms.size() - 1 );
  };

  // Declare count variables first (term order is the edge/gate order).
  struct EdgeTermRef
  {
    uint32_t term;
    uint32_t from, to;
  };
  struct GateTermRef
  {
    uint32_t term;
    uint32_t gate;
    int32_t m_hi;
  };
  std::vector<EdgeTermRef> edge_terms;
  std::vector<GateTermRef> gate_terms;

  if ( mode == ObjectiveMode::edge )
  {
    for ( auto id : order )
    {
      auto const& node = sfq.net.node( id );
      if ( node.kind == GateKind::PO )
        continue; // driver-to-PO edges carry the driver stage: zero term
      for ( auto f : node.fanins )
      {
        const int32_t sa = sfq.category_of( id ) == GateCategory::SA ? 1 : 0;
        const uint32_t t = declare_floor( "b" + std::to_string( f ) + "_" + std::to_string( id ),
                                          sa, bounds.alap[id] - bounds.asap[f] );
        edge_terms.push_back( { t, f, id } );
      }
    }
  }
  else
  {
    for ( auto id : order )
    {
      auto const& node = sfq.net.node( id );
      if ( node.kind == GateKind::PO || fanouts[id].empty() )
        continue;
      int32_t m_hi = bounds.alap[id];
      for ( auto a : fanouts[id] )
      {
        const int32_t sa = sfq.category_of( a ) == GateCategory::SA ? 1 : 0;
        const uint32_t stage_node = sfq.net.is_po( a ) ? id : a;
        m_hi = std::max( m_hi, bounds.alap[stage_node] + sa );
      }
      const uint32_t t =
          declare_floor( "b" + std::to_string( id ), 0, m_hi - bounds.asap[id] );
      gate_terms.push_back( { t, id, m_hi } );
    }
  }

  // Stage variables in topological order, then the max-fanout trackers.
  for ( auto id : order )
  {
    auto const& node = sfq.net.node( id );
    if ( node.kind == GateKind::PO )
      continue;
    pm.sigma_var[id] =
        model.add_int_var( "s" + std::to_string( id ), bounds.asap[id], bounds.alap[id] );
  }
  for ( auto po : sfq.net.pos() )
    pm.sigma_var[po] = pm.sigma_var[sfq.net.node( po ).fanins[0]];

  for ( auto const& ref : edge_terms )
  {
    terms[ref.term].numerator = { { 1, pm.sigma_var[ref.to] }, { -1, pm.sigma_var[ref.from] } };
  }
  for ( auto const& ref : gate_terms )
  {
    const VarId m =
        model.add_int_var( "m" + std::to_string( ref.gate ), bounds.asap[ref.gate], ref.m_hi );
    model.add_linear( { { 1, m }, { -1, pm.sigma_var[ref.gate] } }, Cmp::ge, 0 );
    for ( auto a : fanouts[ref.gate] )
    {
      if ( sfq.net.is_po( a ) )
        continue; // PO aliases the driver stage, already covered
      const int32_t sa = sfq.category_of( a ) == GateCategory::SA ? 1 : 0;
      model.add_linear( { { 1, m }, { -1, pm.sigma_var[a] } }, Cmp::ge, sa );
    }
    terms[ref.term].numerator = { { 1, m }, { -1, pm.sigma_var[ref.gate] } };
  }

  // Edge monotonicity and the SA fanin rule.
  for ( auto id : order )
  {
    auto const& node = sfq.net.node( id );
    if ( node.kind == GateKind::PO )
      continue;
    for ( auto f : node.fanins )
    {
      const int32_t offset = edge_offset( sfq, f, id, fanout_counts );
      model.add_linear( { { 1, pm.sigma_var[id] }, { -1, pm.sigma_var[f] } }, Cmp::ge, offset );
    }
  }

  // All POs share one epoch: n*Eout <= sigma(driver) <= n*Eout + n - 1.
  for ( auto po : sfq.net.pos() )
  {
    const VarId sv = pm.sigma_var[sfq.net.node( po ).fanins[0]];
    model.add_linear( { { 1, sv }, { -np, pm.epoch_out } }, Cmp::ge, 0 );
    model.add_linear( { { 1, sv }, { -np, pm.epoch_out } }, Cmp::le, np - 1 );
  }

  // Sandwich rows pin each count to its floor: n*b <= D + c <= n*b + n - 1.
  std::vector<LinearTerm> objective;
  for ( auto const& term : terms )
  {
    std::vector<LinearTerm> le1{ { np, term.b } };
    std::vector<LinearTerm> le2;
    for ( auto t : term.numerator )
    {
      le1.push_back( { -t.coeff, t.var } );
      le2.push_back( t );
    }
    le2.push_back( { -np, term.b } );
    model.add_linear( std::move( le1 ), Cmp::le, term.constant );
    model.add_linear( std::move( le2 ), Cmp::le, np - 1 - term.constant );
    objective.push_back( { 1, term.b } );
  }

  model.set_objective( std::move( objective ) );
  return pm;
}

PhaseResult assign_stages( SfqNetwork const& sfq, MappingConfig const& cfg )
{
  const auto bounds = build_stage_bounds( sfq, cfg.n );
  auto pm = build_phase_model( sfq, cfg.n, cfg.objective_mode, bounds );
  const auto solution = solve( pm.model, cfg.solver_budget, cfg.seed );

  PhaseResult result;
  result.status = solution.status;
  result.stats = solution.stats;
  result.stages.n = cfg.n;
  if ( solution.has_assignment() )
  {
    result.objective = solution.objective_value;
    result.stages.sigma.assign( sfq.net.size(), 0 );
    for ( uint32_t id = 0; id < sfq.net.size(); ++id )
      result.stages.sigma[id] = static_cast<int32_t>( solution.assignment[pm.sigma_var[id]] );
  }
  return result;
}

int64_t edge_objective_value( SfqNetwork const& sfq, StageAssignment const& stages )
{
  const int64_t n = stages.n;
  int64_t total = 0;
  for ( auto const& node : sfq.net.nodes() )
  {
    if ( node.kind == GateKind::PO )
      continue;
    const int64_t sa = sfq.category_of( node.id ) == GateCategory::SA ? 1 : 0;
    for ( auto f : node.fanins )
      total += ( stages.stage( node.id ) - stages.stage( f ) + sa ) / n;
  }
  return total;
}

int64_t gate_max_objective_value( SfqNetwork const& sfq, StageAssignment const& stages )
{
  const int64_t n = stages.n;
  const auto fanouts = sfq.net.fanouts();
  int64_t total = 0;
  for ( auto const& node : sfq.net.nodes() )
  {
    if ( node.kind == GateKind::PO || fanouts[node.id].empty() )
      continue;
    int64_t latest = stages.stage( node.id );
    for ( auto a : fanouts[node.id] )
    {
      const int64_t sa = sfq.category_of( a ) == GateCategory::SA ? 1 : 0;
      const uint32_t stage_node = sfq.net.is_po( a ) ? node.id : a;
      latest = std::max( latest, stages.stage( stage_node ) + sa );
    }
    total += ( latest - stages.stage( node.id ) ) / n;
  }
  return total;
}

ValidationReport check_stage_invariants( SfqNetwork const& sfq, StageAssignment const& stages )
{
  ValidationReport report;
  const auto fanout_counts = sfq.net.fanout_counts();
  const int32_t n = static_cast<int32_t>( stages.n );

  for ( auto const& node : sfq.net.nodes() )
  {
    if ( node.kind == GateKind::PI )
    {
      if ( stages.stage( node.id ) < 0 || stages.stage( node.id ) >= n )
        report.add( "pi-epoch", node.id, "PI outside epoch 0" );
      continue;
    }
    if ( node.kind == GateKind::PO )
    {
      if ( stages.stage( node.id ) != stages.stage( node.fanins[0] ) )
        report.add( "po-stage", node.id, "PO stage differs from driver stage" );
      continue;
    }
    for ( auto f : node.fanins )
    {
      const int32_t offset = edge_offset( sfq, f, node.id, fanout_counts );
      if ( stages.stage( node.id ) - stages.stage( f ) < offset )
        report.add( "edge", node.id,
                    "edge " + std::to_string( f ) + " -> " + std::to_string( node.id ) +
                        " violates stage offset " + std::to_string( offset ) );
    }
  }

  if ( !sfq.net.pos().empty() )
  {
    const int32_t epoch0 = stages.epoch( sfq.net.pos().front() );
    for ( auto po : sfq.net.pos() )
    {
      if ( stages.epoch( po ) != epoch0 )
        report.add( "po-epoch", po, "PO epochs differ" );
    }
  }
  return report;
}

} // namespace sfqmap
