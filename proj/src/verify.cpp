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

#include "sfqmap/verify.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace sfqmap
{

ValidationReport verify_timing( SfqNetwork const& sfq, StageAssignment const& stages, uint32_t n )
{
  ValidationReport report;
  auto const& net = sfq.net;
  const int32_t np = static_cast<int32_t>( n );

  if ( stages.sigma.size() != net.size() )
  {
    report.add( "annotation", 0, "stage map does not cover the network" );
    return report;
  }

  const auto structure = validate( net );
  for ( auto const& v : structure.violations )
    report.violations.push_back( v );
  report.ok = report.ok && structure.ok;
  if ( !structure.ok )
    return report; // malformed graphs are not worth timing checks

  const auto fanouts = net.fanouts();
  auto sigma = [&]( uint32_t id ) { return stages.stage( id ); };
  auto category = [&]( uint32_t id ) { return sfq.category_of( id ); };
  auto clocked_reference = [&]( uint32_t id ) {
    // Elements whose output pulse is anchored to a clock event.
    return category( id ) != GateCategory::AA && !net.is_po( id );
  };

  // (6) fanout legality
  for ( auto const& node : net.nodes() )
  {
    const uint32_t count = static_cast<uint32_t>( fanouts[node.id].size() );
    if ( node.kind == GateKind::SPLITTER && count != 2 )
      report.add( "fanout", node.id, "splitter with fanout " + std::to_string( count ) );
    else if ( node.kind != GateKind::SPLITTER && node.kind != GateKind::PO && count > 1 )
      report.add( "fanout", node.id,
                  std::string( to_string( node.kind ) ) + " with fanout " + std::to_string( count ) );
  }

  // (1) edge monotonicity; strict into clocked gates unless the pulse
  // passes through an unclocked element first
  for ( auto const& node : net.nodes() )
  {
    if ( node.kind == GateKind::PO )
      continue;
    for ( auto f : node.fanins )
    {
      if ( sigma( f ) > sigma( node.id ) )
        report.add( "monotonic", node.id,
                    "stage drops from " + std::to_string( f ) + " to " +
                        std::to_string( node.id ) );
      else if ( category( node.id ) == GateCategory::AS && clocked_reference( f ) &&
                sigma( f ) == sigma( node.id ) )
        report.add( "monotonic", node.id,
                    "clocked gate shares stage " + std::to_string( sigma( f ) ) +
                        " with clocked fanin " + std::to_string( f ) );
    }
  }

  // (2)+(7) spacing: propagate release stages through unclocked nodes
  // and check every clocked consumer against every arriving release.
  std::vector<std::set<int32_t>> releases( net.size() );
  for ( auto id : topological_order( net ) )
  {
    auto const& node = net.node( id );
    if ( node.kind == GateKind::PO )
      continue;
    if ( clocked_reference( id ) )
    {
      releases[id].insert( sigma( id ) );
      continue;
    }
    for ( auto f : node.fanins )
      releases[id].insert( releases[f].begin(), releases[f].end() );
  }
  for ( auto const& node : net.nodes() )
  {
    if ( category( node.id ) != GateCategory::AS )
      continue;
    for ( auto f : node.fanins )
    {
      for ( auto r : releases[f] )
      {
        const int32_t gap = sigma( node.id ) - r;
        if ( gap < 1 || gap > np )
          report.add( "spacing", node.id,
                      "release at stage " + std::to_string( r ) + " reaches clocked gate " +
                          std::to_string( node.id ) + " at stage " +
                          std::to_string( sigma( node.id ) ) );
      }
    }
  }

  // (3) SA gates consume from an AS element or PI at their own stage
  for ( auto const& node : net.nodes() )
  {
    if ( category( node.id ) != GateCategory::SA )
      continue;
    for ( auto f : node.fanins )
    {
      const bool as_feed = category( f ) == GateCategory::AS || net.is_pi( f );
      if ( !as_feed || sigma( f ) != sigma( node.id ) )
        report.add( "sa-predecessor", node.id,
                    "fanin " + std::to_string( f ) + " does not clock data into SA gate " +
                        std::to_string( node.id ) + " at stage " +
                        std::to_string( sigma( node.id ) ) );
    }
  }

  // (4) PIs at epoch 0
  for ( auto pi : net.pis() )
  {
    if ( sigma( pi ) < 0 || sigma( pi ) >= np )
      report.add( "pi-epoch", pi, "PI at stage " + std::to_string( sigma( pi ) ) );
  }

  // (5) POs carry their driver stage and share one epoch
  for ( auto po : net.pos() )
  {
    if ( sigma( po ) != sigma( net.node( po ).fanins[0] ) )
      report.add( "po-stage", po, "PO stage differs from driver stage" );
  }
  if ( !net.pos().empty() )
  {
    const int32_t epoch0 = sigma( net.pos().front() ) / np;
    for ( auto po : net.pos() )
    {
      if ( sigma( po ) / np != epoch0 )
        report.add( "po-epoch", po,
                    "PO epoch " + std::to_string( sigma( po ) / np ) + " differs from " +
                        std::to_string( epoch0 ) );
    }
  }

  // unclocked elements sit at their earliest fanout stage
  for ( auto const& node : net.nodes() )
  {
    if ( category( node.id ) != GateCategory::AA || fanouts[node.id].empty() )
      continue;
    int32_t earliest = std::numeric_limits<int32_t>::max();
    for ( auto w : fanouts[node.id] )
      earliest = std::min( earliest, sigma( w ) );
    if ( sigma( node.id ) != earliest )
      report.add( "aa-late", node.id,
                  "unclocked element at stage " + std::to_string( sigma( node.id ) ) +
                      ", earliest fanout at " + std::to_string( earliest ) );
  }

  return report;
}

} // namespace sfqmap
