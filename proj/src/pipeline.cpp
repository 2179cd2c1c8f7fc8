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

#include "sfqmap/pipeline.hpp"

#include "sfqmap/splitter_synth.hpp"

#include <chrono>
#include <random>

namespace sfqmap
{

MapOutcome run_mapping( Network const& source, MapOptions const& options, CostTable const& costs )
{
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  MapOutcome outcome;
  auto sfq = decompose( source, options.cfg );

  auto phase = assign_stages( sfq, options.cfg );
  outcome.phase_status = phase.status;
  const auto t1 = clock::now();
  if ( !( phase.status == SolveStatus::optimal || phase.status == SolveStatus::feasible ) )
  {
    outcome.sfq = std::move( sfq );
    return outcome;
  }

  auto split = insert_splitter_trees( sfq, phase.stages );
  auto inserted = insert_dffs( split.sfq, split.stages, options.cfg, options.jobs,
                               options.encoding );
  outcome.dff_status = inserted.overall;
  outcome.path_stats = inserted.per_path;
  const auto t2 = clock::now();

  canonicalize_aa_stages( inserted.sfq, inserted.stages );

  outcome.mapped = true;
  outcome.sfq = std::move( inserted.sfq );
  outcome.stages = std::move( inserted.stages );
  outcome.timing = verify_timing( outcome.sfq, outcome.stages, options.cfg.n );
  outcome.report = make_report( outcome.sfq, outcome.stages, options.cfg, costs,
                                outcome.phase_status, outcome.dff_status );
  outcome.report.phase_wall_s = std::chrono::duration<double>( t1 - t0 ).count();
  outcome.report.dff_wall_s = std::chrono::duration<double>( t2 - t1 ).count();
  outcome.report.total_wall_s = std::chrono::duration<double>( clock::now() - t0 ).count();
  return outcome;
}

SfqNetwork attach_categories( Network const& net )
{
  SfqNetwork sfq;
  sfq.net = net;
  sfq.category.reserve( net.size() );
  MappingConfig cfg;
  cfg.or_style = OrStyle::sa_or;
  for ( auto const& node : net.nodes() )
  {
    if ( node.kind == GateKind::PI || node.kind == GateKind::PO )
      sfq.category.push_back( GateCategory::IO );
    else if ( node.kind == GateKind::BUF )
      sfq.category.push_back( GateCategory::AS ); // tolerated in foreign netlists
    else
      sfq.category.push_back( classify( node.kind, cfg ) );
  }
  return sfq;
}

bool functionally_equivalent( Network const& a, Network const& b, uint64_t seed, uint32_t vectors )
{
  if ( a.num_pis() != b.num_pis() || a.num_pos() != b.num_pos() )
    return false;
  const uint32_t k = a.num_pis();
  const auto order_a = topological_order( a );
  const auto order_b = topological_order( b );
  if ( k <= 16 )
  {
    for ( uint64_t m = 0; m < ( 1ull << k ); ++m )
    {
      std::vector<bool> in( k );
      for ( uint32_t i = 0; i < k; ++i )
        in[i] = ( m >> i ) & 1;
      if ( simulate( a, in, order_a ) != simulate( b, in, order_b ) )
        return false;
    }
    return true;
  }
  std::mt19937_64 rng( seed );
  for ( uint32_t t = 0; t < vectors; ++t )
  {
    std::vector<bool> in( k );
    for ( uint32_t i = 0; i < k; ++i )
      in[i] = rng() & 1;
    if ( simulate( a, in, order_a ) != simulate( b, in, order_b ) )
      return false;
  }
  return true;
}

} // namespace sfqmap
