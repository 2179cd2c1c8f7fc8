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

#include "sfqmap/dff_insert.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace sfqmap
{

uint32_t IndependentPath::min_node() const
{
  uint32_t m = ~0u;
  for ( auto v : sources )
    m = std::min( m, v );
  for ( auto v : internal )
    m = std::min( m, v );
  for ( auto v : sinks )
    m = std::min( m, v );
  return m;
}

std::vector<IndependentPath> extract_paths( SfqNetwork const& sfq, StageAssignment const& /*stages*/ )
{
  auto const& net = sfq.net;
  const auto fanouts = net.fanouts();
  auto is_aa = [&]( uint32_t id ) { return sfq.category_of( id ) == GateCategory::AA; };

  // Maximal AA-connected regions (undirected connectivity).
  std::vector<int32_t> region_of( net.size(), -1 );
  std::vector<std::vector<uint32_t>> regions;
  for ( uint32_t seed = 0; seed < net.size(); ++seed )
  {
    if ( !is_aa( seed ) || region_of[seed] >= 0 )
      continue;
    const int32_t r = static_cast<int32_t>( regions.size() );
    std::vector<uint32_t> queue{ seed }, members;
    region_of[seed] = r;
    while ( !queue.empty() )
    {
      const uint32_t x = queue.back();
      queue.pop_back();
      members.push_back( x );
      auto visit = [&]( uint32_t y ) {
        if ( is_aa( y ) && region_of[y] < 0 )
        {
          region_of[y] = r;
          queue.push_back( y );
        }
      };
      for ( auto f : net.node( x ).fanins )
        visit( f );
      for ( auto s : fanouts[x] )
        visit( s );
    }
    std::sort( members.begin(), members.end() );
    regions.push_back( std::move( members ) );
  }

  std::vector<IndependentPath> paths( regions.size() );
  for ( size_t r = 0; r < regions.size(); ++r )
    paths[r].internal = regions[r];

  // Distribute every edge to its region, or to a trivial path.
  for ( auto const& node : net.nodes() )
  {
    for ( uint32_t slot = 0; slot < node.fanins.size(); ++slot )
    {
      const uint32_t u = node.fanins[slot];
      const uint32_t v = node.id;
      const PathEdge edge{ u, v, slot };
      if ( is_aa( u ) || is_aa( v ) )
      {
        const int32_t r = is_aa( u ) ? region_of[u] : region_of[v];
        paths[r].edges.push_back( edge );
        if ( !is_aa( u ) )
          paths[r].sources.push_back( u );
        if ( !is_aa( v ) )
          paths[r].sinks.push_back( v );
      }
      else
      {
        IndependentPath trivial;
        trivial.sources.push_back( u );
        trivial.sinks.push_back( v );
        trivial.edges.push_back( edge );
        paths.push_back( std::move( trivial ) );
      }
    }
  }

  for ( auto& p : paths )
  {
    auto dedupe = []( std::vector<uint32_t>& v ) {
      std::sort( v.begin(), v.end() );
      v.erase( std::unique( v.begin(), v.end() ), v.end() );
    };
    dedupe( p.sources );
    dedupe( p.sinks );
    std::sort( p.edges.begin(), p.edges.end(), []( PathEdge const& a, PathEdge const& b ) {
      return std::tie( a.from, a.to, a.slot ) < std::tie( b.from, b.to, b.slot );
    } );
  }

  std::stable_sort( paths.begin(), paths.end(), []( auto const& a, auto const& b ) {
    return a.min_node() < b.min_node();
  } );
  return paths;
}

namespace
{

// Path-local topology shared by site enumeration, the model builder
// and the oracle: node lists in topological order, per-node in/out
// edge indices, clocked release stages and AS-sink deadlines.
struct PathTopology
{
  std::vector<uint32_t> nodes; // topological order over sources+internal+sinks
  std::map<uint32_t, std::vector<uint32_t>> out_edges; // node -> edge indices
  std::map<uint32_t, std::vector<uint32_t>> in_edges;
  std::map<uint32_t, int32_t> ref;      // latest clocked release reaching the node
  std::map<uint32_t, int32_t> deadline; // latest admissible DFF stage at the node
};

bool in_set( std::vector<uint32_t> const& sorted, uint32_t id )
{
  return std::binary_search( sorted.begin(), sorted.end(), id );
}

PathTopology build_topology( IndependentPath const& path, SfqNetwork const& sfq,
                             StageAssignment const& stages )
{
  PathTopology topo;

  std::set<uint32_t> members( path.sources.begin(), path.sources.end() );
  members.insert( path.internal.begin(), path.internal.end() );
  members.insert( path.sinks.begin(), path.sinks.end() );

  std::map<uint32_t, uint32_t> position;
  {
    uint32_t pos = 0;
    for ( auto id : topological_order( sfq.net ) )
      position[id] = pos++;
  }
  topo.nodes.assign( members.begin(), members.end() );
  std::sort( topo.nodes.begin(), topo.nodes.end(),
             [&]( uint32_t a, uint32_t b ) { return position[a] < position[b]; } );

  for ( uint32_t e = 0; e < path.edges.size(); ++e )
  {
    topo.out_edges[path.edges[e].from].push_back( e );
    topo.in_edges[path.edges[e].to].push_back( e );
  }

  // Clocked releases forward through the AA region.
  for ( auto x : topo.nodes )
  {
    if ( !in_set( path.internal, x ) )
    {
      topo.ref[x] = stages.stage( x ); // sources/sinks release at their own stage
      continue;
    }
    int32_t r = 0;
    for ( auto e : topo.in_edges[x] )
      r = std::max( r, topo.ref[path.edges[e].from] );
    topo.ref[x] = r;
  }

  // AS-sink deadlines backwards through the AA region.
  auto consumer_deadline = [&]( uint32_t sink ) {
    return sfq.category_of( sink ) == GateCategory::AS ? stages.stage( sink ) - 1
                                                       : stages.stage( sink );
  };
  for ( auto it = topo.nodes.rbegin(); it != topo.nodes.rend(); ++it )
  {
    const uint32_t x = *it;
    if ( !in_set( path.internal, x ) )
      continue;
    int32_t dl = std::numeric_limits<int32_t>::max();
    for ( auto e : topo.out_edges[x] )
    {
      const uint32_t w = path.edges[e].to;
      dl = std::min( dl, in_set( path.internal, w ) ? topo.deadline[w] : consumer_deadline( w ) );
    }
    topo.deadline[x] = dl;
  }
  return topo;
}

} // namespace

std::vector<DffSite> enumerate_sites( IndependentPath const& path, SfqNetwork const& sfq,
                                      StageAssignment const& stages, uint32_t n )
{
  (void)n;
  const auto topo = build_topology( path, sfq, stages );
  std::vector<DffSite> sites;

  for ( uint32_t e = 0; e < path.edges.size(); ++e )
  {
    auto const& edge = path.edges[e];
    const bool from_internal = in_set( path.internal, edge.from );
    const bool to_internal = in_set( path.internal, edge.to );

    const int32_t lower =
        std::max( stages.stage( edge.from ), topo.ref.at( edge.from ) + 1 );

    int32_t upper;
    if ( to_internal )
    {
      upper = std::min( stages.stage( edge.to ), topo.deadline.at( edge.to ) );
    }
    else
    {
      upper = sfq.category_of( edge.to ) == GateCategory::AS ? stages.stage( edge.to ) - 1
                                                             : stages.stage( edge.to );
    }

    bool forced_at_sink = false;
    if ( !to_internal && sfq.category_of( edge.to ) == GateCategory::SA )
    {
      const bool direct_clocked_feed =
          !from_internal &&
          ( sfq.category_of( edge.from ) == GateCategory::AS || sfq.net.is_pi( edge.from ) ) &&
          stages.stage( edge.from ) == stages.stage( edge.to );
      if ( !direct_clocked_feed )
      {
        forced_at_sink = true;
        if ( stages.stage( edge.to ) < lower )
          throw std::invalid_argument(
              "enumerate_sites: forced site in front of SA gate " + std::to_string( edge.to ) +
              " has no admissible stage" );
      }
    }

    for ( int32_t s = lower; s <= upper; ++s )
      sites.push_back( { e, s, forced_at_sink && s == stages.stage( edge.to ) } );
  }
  return sites;
}

namespace
{

struct Traversals
{
  std::vector<std::vector<uint32_t>> list; // edge-index sequences
  bool capped{ false };
};

Traversals enumerate_traversals( IndependentPath const& path, PathTopology const& topo,
                                 uint64_t cap )
{
  Traversals result;
  std::vector<uint32_t> current;

  auto dfs = [&]( auto&& self, uint32_t node ) -> bool {
    if ( !current.empty() && in_set( path.sinks, node ) )
    {
      // Note: a node can be both sink of one edge and source of none
      // here; sinks terminate traversals.
      result.list.push_back( current );
      return result.list.size() <= cap;
    }
    auto it = topo.out_edges.find( node );
    if ( it == topo.out_edges.end() )
      return true; // dead end: no clocked sink downstream
    for ( auto e : it->second )
    {
      current.push_back( e );
      const bool ok = self( self, path.edges[e].to );
      current.pop_back();
      if ( !ok )
        return false;
    }
    return true;
  };

  for ( auto s : path.sources )
  {
    if ( !dfs( dfs, s ) )
    {
      result.capped = true;
      result.list.clear();
      return result;
    }
  }
  return result;
}

// Deduplicating helpers so overlapping traversals do not repeat rows.
struct ConstraintSink
{
  ConstraintModel& model;
  std::set<std::vector<VarId>> amo_seen;
  std::set<std::vector<Literal>> clause_seen;

  void at_most_one( std::vector<VarId> vars )
  {
    std::sort( vars.begin(), vars.end() );
    vars.erase( std::unique( vars.begin(), vars.end() ), vars.end() );
    if ( vars.size() < 2 || !amo_seen.insert( vars ).second )
      return;
    std::vector<LinearTerm> terms;
    for ( auto v : vars )
      terms.push_back( { 1, v } );
    model.add_linear( std::move( terms ), Cmp::le, 1 );
  }

  void clause( std::vector<Literal> lits )
  {
    std::sort( lits.begin(), lits.end() );
    lits.erase( std::unique( lits.begin(), lits.end() ), lits.end() );
    if ( !clause_seen.insert( lits ).second )
      return;
    model.add_clause( std::move( lits ) );
  }
};

} // namespace

InsertionModel build_insertion_model( IndependentPath const& path,
                                      std::vector<DffSite> const& sites, SfqNetwork const& sfq,
                                      StageAssignment const& stages, uint32_t n,
                                      SpacingEncoding encoding, uint64_t traversal_cap )
{
  const auto topo = build_topology( path, sfq, stages );
  const int32_t np = static_cast<int32_t>( n );

  InsertionModel im;
  auto& model = im.model;

  std::vector<std::vector<uint32_t>> sites_on_edge( path.edges.size() );
  for ( uint32_t d = 0; d < sites.size(); ++d )
  {
    im.site_var.push_back( model.add_bool_var( "d" + std::to_string( d ) ) );
    sites_on_edge[sites[d].edge].push_back( d );
  }
  for ( uint32_t d = 0; d < sites.size(); ++d )
  {
    if ( sites[d].forced )
      model.force_literal( { im.site_var[d], true } );
  }
  {
    std::vector<LinearTerm> objective;
    for ( auto v : im.site_var )
      objective.push_back( { 1, v } );
    model.set_objective( std::move( objective ) );
  }

  ConstraintSink sink{ model, {}, {} };

  auto traversals = enumerate_traversals( path, topo, traversal_cap );
  im.merged_encoding = traversals.capped;

  auto is_clocked_sink = [&]( uint32_t t ) {
    const auto cat = sfq.category_of( t );
    return cat == GateCategory::AS || cat == GateCategory::SA;
  };

  if ( !traversals.capped )
  {
    im.traversals = traversals.list.size();
    for ( auto const& trav : traversals.list )
    {
      std::vector<uint32_t> trav_sites;
      for ( auto e : trav )
        trav_sites.insert( trav_sites.end(), sites_on_edge[e].begin(), sites_on_edge[e].end() );
      std::sort( trav_sites.begin(), trav_sites.end(),
                 [&]( uint32_t a, uint32_t b ) { return sites[a].stage < sites[b].stage; } );

      // At most one DFF per stage along a traversal.
      for ( size_t i = 0; i < trav_sites.size(); )
      {
        size_t j = i;
        std::vector<VarId> group;
        while ( j < trav_sites.size() && sites[trav_sites[j]].stage == sites[trav_sites[i]].stage )
          group.push_back( im.site_var[trav_sites[j++]] );
        if ( group.size() > 1 )
          sink.at_most_one( std::move( group ) );
        i = j;
      }

      const uint32_t source = path.edges[trav.front()].from;
      const uint32_t target = path.edges[trav.back()].to;
      const int32_t r = stages.stage( source );

      if ( encoding == SpacingEncoding::eq13_literal )
      {
        // Debug mode: at least one DFF along any chain of span exactly n.
        for ( size_t i = 0; i < trav_sites.size(); ++i )
        {
          for ( size_t j = i; j < trav_sites.size(); ++j )
          {
            if ( sites[trav_sites[j]].stage - sites[trav_sites[i]].stage != np )
              continue;
            std::vector<Literal> lits;
            for ( size_t k = i; k <= j; ++k )
              lits.push_back( { im.site_var[trav_sites[k]], true } );
            sink.clause( std::move( lits ) );
          }
        }
        continue;
      }

      if ( is_clocked_sink( target ) )
      {
        // Every window of n consecutive stages strictly between the
        // clocked references must hold a DFF.
        const int32_t t_end = stages.stage( target );
        for ( int32_t a = r; a + np + 1 <= t_end; ++a )
        {
          std::vector<Literal> lits;
          for ( auto d : trav_sites )
          {
            if ( sites[d].stage > a && sites[d].stage <= a + np )
              lits.push_back( { im.site_var[d], true } );
          }
          sink.clause( std::move( lits ) ); // empty = infeasible window
        }
      }
      else
      {
        // Unclocked (PO) tail: a selected DFF needs a clocked element
        // at most n stages above it.
        for ( auto d : trav_sites )
        {
          const int32_t s = sites[d].stage;
          if ( s <= r + np )
            continue;
          std::vector<Literal> lits{ { im.site_var[d], false } };
          for ( auto e : trav_sites )
          {
            if ( sites[e].stage >= s - np && sites[e].stage <= s - 1 )
              lits.push_back( { im.site_var[e], true } );
          }
          sink.clause( std::move( lits ) );
        }
      }
    }
    return im;
  }

  // Merged encoding: window obligations propagate through AA nodes via
  // auxiliary literals instead of per-traversal rows.
  im.traversals = 0;

  // Same-stage exclusion over edge pairs that share some traversal.
  std::map<uint32_t, uint32_t> node_index;
  for ( uint32_t i = 0; i < topo.nodes.size(); ++i )
    node_index[topo.nodes[i]] = i;
  std::vector<std::vector<bool>> reach( topo.nodes.size(),
                                        std::vector<bool>( topo.nodes.size(), false ) );
  for ( auto it = topo.nodes.rbegin(); it != topo.nodes.rend(); ++it )
  {
    const uint32_t x = node_index[*it];
    reach[x][x] = true;
    auto oe = topo.out_edges.find( *it );
    if ( oe == topo.out_edges.end() )
      continue;
    for ( auto e : oe->second )
    {
      const uint32_t w = node_index[path.edges[e].to];
      for ( uint32_t k = 0; k < topo.nodes.size(); ++k )
        reach[x][k] = reach[x][k] || reach[w][k];
    }
  }
  std::map<int32_t, std::vector<uint32_t>> sites_by_stage;
  for ( uint32_t d = 0; d < sites.size(); ++d )
    sites_by_stage[sites[d].stage].push_back( d );
  for ( auto const& [stage, group] : sites_by_stage )
  {
    (void)stage;
    for ( size_t i = 0; i < group.size(); ++i )
    {
      for ( size_t j = i + 1; j < group.size(); ++j )
      {
        const auto& ei = path.edges[sites[group[i]].edge];
        const auto& ej = path.edges[sites[group[j]].edge];
        const bool ordered = reach[node_index[ei.to]][node_index[ej.from]] ||
                             reach[node_index[ej.to]][node_index[ei.from]];
        if ( ordered )
          sink.clause( { { im.site_var[group[i]], false }, { im.site_var[group[j]], false } } );
      }
    }
  }

  // Window starts that matter: between sources and clocked sinks, plus
  // the per-site tail windows.
  std::set<int32_t> window_starts;
  {
    int32_t lo = std::numeric_limits<int32_t>::max(), hi = std::numeric_limits<int32_t>::min();
    for ( auto s : path.sources )
      lo = std::min( lo, stages.stage( s ) );
    for ( auto t : path.sinks )
    {
      if ( is_clocked_sink( t ) )
        hi = std::max( hi, stages.stage( t ) - np - 1 );
    }
    for ( int32_t a = lo; a <= hi; ++a )
      window_starts.insert( a );
    for ( auto const& site : sites )
    {
      if ( site.stage - np - 1 >= lo )
        window_starts.insert( site.stage - np - 1 );
    }
  }

  auto edge_window_lits = [&]( uint32_t e, int32_t a ) {
    std::vector<Literal> lits;
    for ( auto d : sites_on_edge[e] )
    {
      if ( sites[d].stage > a && sites[d].stage <= a + np )
        lits.push_back( { im.site_var[d], true } );
    }
    return lits;
  };

  // uncovered[x][a]: some source-to-x prefix with source stage <= a has
  // no selected site inside window (a, a+n].
  std::map<std::pair<uint32_t, int32_t>, VarId> uncovered;
  auto uncovered_var = [&]( uint32_t x, int32_t a ) {
    auto key = std::make_pair( x, a );
    auto it = uncovered.find( key );
    if ( it != uncovered.end() )
      return it->second;
    const VarId v =
        model.add_bool_var( "u" + std::to_string( x ) + "_" + std::to_string( a ) );
    uncovered.emplace( key, v );
    return v;
  };

  for ( const int32_t a : window_starts )
  {
    for ( auto x : topo.nodes )
    {
      if ( !in_set( path.internal, x ) )
        continue;
      for ( auto e : topo.in_edges.at( x ) )
      {
        const uint32_t y = path.edges[e].from;
        auto lits = edge_window_lits( e, a );
        if ( in_set( path.internal, y ) )
          lits.push_back( { uncovered_var( y, a ), false } );
        else if ( stages.stage( y ) > a )
          continue; // window predates this source: no obligation
        lits.push_back( { uncovered_var( x, a ), true } );
        sink.clause( std::move( lits ) );
      }
    }
    for ( auto t : path.sinks )
    {
      if ( !is_clocked_sink( t ) || stages.stage( t ) < a + np + 1 )
        continue;
      auto ie = topo.in_edges.find( t );
      if ( ie == topo.in_edges.end() )
        continue;
      for ( auto e : ie->second )
      {
        const uint32_t y = path.edges[e].from;
        auto lits = edge_window_lits( e, a );
        if ( in_set( path.internal, y ) )
          lits.push_back( { uncovered_var( y, a ), false } );
        else if ( stages.stage( y ) > a )
          continue;
        sink.clause( std::move( lits ) );
      }
    }
  }

  // Tail rule for every site: a selected DFF needs a clocked element or
  // another DFF at most n stages above along every prefix.
  for ( uint32_t d = 0; d < sites.size(); ++d )
  {
    const int32_t s = sites[d].stage;
    const int32_t a = s - np - 1;
    const uint32_t e = sites[d].edge;
    const uint32_t y = path.edges[e].from;

    std::vector<Literal> lits{ { im.site_var[d], false } };
    for ( auto other : sites_on_edge[e] )
    {
      if ( sites[other].stage >= s - np && sites[other].stage <= s - 1 )
        lits.push_back( { im.site_var[other], true } );
    }
    if ( in_set( path.internal, y ) )
      lits.push_back( { uncovered_var( y, a ), false } );
    else if ( stages.stage( y ) > a )
      continue; // source itself is within reach
    sink.clause( std::move( lits ) );
  }

  return im;
}

std::optional<int64_t> brute_force_min_dffs( IndependentPath const& path,
                                             std::vector<DffSite> const& sites,
                                             SfqNetwork const& sfq,
                                             StageAssignment const& stages, uint32_t n )
{
  if ( sites.size() > 20 )
    throw std::invalid_argument( "brute_force_min_dffs: too many sites" );

  const auto topo = build_topology( path, sfq, stages );
  const int32_t np = static_cast<int32_t>( n );

  // Independent traversal walk (no cap: oracle instances are small).
  std::vector<std::vector<uint32_t>> traversals;
  {
    std::vector<uint32_t> current;
    auto dfs = [&]( auto&& self, uint32_t node ) -> void {
      if ( !current.empty() && in_set( path.sinks, node ) )
      {
        traversals.push_back( current );
        return;
      }
      auto it = topo.out_edges.find( node );
      if ( it == topo.out_edges.end() )
        return;
      for ( auto e : it->second )
      {
        current.push_back( e );
        self( self, path.edges[e].to );
        current.pop_back();
      }
    };
    for ( auto s : path.sources )
      dfs( dfs, s );
  }

  auto feasible = [&]( uint32_t mask ) {
    for ( uint32_t d = 0; d < sites.size(); ++d )
    {
      if ( sites[d].forced && !( mask & ( 1u << d ) ) )
        return false;
    }
    for ( auto const& trav : traversals )
    {
      std::vector<int32_t> chain{ stages.stage( path.edges[trav.front()].from ) };
      for ( auto e : trav )
      {
        std::vector<int32_t> on_edge;
        for ( uint32_t d = 0; d < sites.size(); ++d )
        {
          if ( sites[d].edge == e && ( mask & ( 1u << d ) ) )
            on_edge.push_back( sites[d].stage );
        }
        std::sort( on_edge.begin(), on_edge.end() );
        chain.insert( chain.end(), on_edge.begin(), on_edge.end() );
      }
      const uint32_t target = path.edges[trav.back()].to;
      const auto cat = sfq.category_of( target );
      if ( cat == GateCategory::AS )
        chain.push_back( stages.stage( target ) ); // consumption event; SA ends
                                                   // at its forced site, PO is unclocked
      for ( size_t i = 1; i < chain.size(); ++i )
      {
        if ( chain[i] <= chain[i - 1] )
          return false; // shared stage or reversed order along one chain
        if ( chain[i] - chain[i - 1] > np )
          return false;
      }
    }
    return true;
  };

  std::optional<int64_t> best;
  for ( uint32_t mask = 0; mask < ( 1u << sites.size() ); ++mask )
  {
    if ( !feasible( mask ) )
      continue;
    const int64_t count = __builtin_popcount( mask );
    if ( !best || count < *best )
      best = count;
  }
  return best;
}

namespace
{

int severity( SolveStatus s )
{
  switch ( s )
  {
  case SolveStatus::optimal: return 0;
  case SolveStatus::feasible: return 1;
  case SolveStatus::infeasible: return 2;
  case SolveStatus::timeout_no_solution: return 3;
  }
  return 3;
}

} // namespace

DffInsertResult insert_dffs( SfqNetwork const& sfq, StageAssignment const& stages,
                             MappingConfig const& cfg, uint32_t jobs, SpacingEncoding encoding )
{
  const auto paths = extract_paths( sfq, stages );

  struct PathSolve
  {
    std::vector<DffSite> sites;
    std::vector<uint32_t> selected; // site indices
    SolveStatus status{ SolveStatus::infeasible };
    uint64_t nodes{};
  };
  std::vector<PathSolve> solves( paths.size() );

  auto solve_path = [&]( size_t index ) {
    auto& ps = solves[index];
    ps.sites = enumerate_sites( paths[index], sfq, stages, cfg.n );
    auto im = build_insertion_model( paths[index], ps.sites, sfq, stages, cfg.n, encoding );
    const auto solution = solve( im.model, cfg.solver_budget, cfg.seed );
    ps.status = solution.status;
    ps.nodes = solution.stats.nodes;
    if ( solution.has_assignment() )
    {
      for ( uint32_t d = 0; d < ps.sites.size(); ++d )
      {
        if ( solution.assignment[im.site_var[d]] != 0 )
          ps.selected.push_back( d );
      }
    }
  };

  if ( jobs == 0 )
    jobs = std::max( 1u, std::thread::hardware_concurrency() );
  if ( jobs <= 1 || paths.size() <= 1 )
  {
    for ( size_t i = 0; i < paths.size(); ++i )
      solve_path( i );
  }
  else
  {
    std::atomic<size_t> next{ 0 };
    std::vector<std::thread> workers;
    for ( uint32_t w = 0; w < std::min<size_t>( jobs, paths.size() ); ++w )
    {
      workers.emplace_back( [&]() {
        for ( size_t i = next.fetch_add( 1 ); i < paths.size(); i = next.fetch_add( 1 ) )
          solve_path( i );
      } );
    }
    for ( auto& t : workers )
      t.join();
  }

  DffInsertResult result;
  result.sfq = sfq;
  result.stages = stages;

  // Merge in path order: node ids do not depend on thread scheduling.
  for ( size_t i = 0; i < paths.size(); ++i )
  {
    auto const& path = paths[i];
    auto const& ps = solves[i];

    PathStats stats;
    stats.sites = static_cast<uint32_t>( ps.sites.size() );
    stats.dffs = static_cast<uint32_t>( ps.selected.size() );
    stats.status = ps.status;
    stats.solver_nodes = ps.nodes;
    result.per_path.push_back( stats );
    result.total_sites += stats.sites;

    if ( severity( ps.status ) > severity( result.overall ) )
      result.overall = ps.status;
    if ( ps.status == SolveStatus::infeasible || ps.status == SolveStatus::timeout_no_solution )
      continue;

    for ( uint32_t e = 0; e < path.edges.size(); ++e )
    {
      std::vector<int32_t> chain_stages;
      for ( auto d : ps.selected )
      {
        if ( ps.sites[d].edge == e )
          chain_stages.push_back( ps.sites[d].stage );
      }
      if ( chain_stages.empty() )
        continue;
      std::sort( chain_stages.begin(), chain_stages.end() );

      auto const& edge = path.edges[e];
      uint32_t previous = edge.from;
      for ( auto s : chain_stages )
      {
        previous = result.sfq.net.add_node( GateKind::DFF, { previous } );
        result.sfq.category.push_back( GateCategory::AS );
        result.stages.sigma.push_back( s );
        ++result.total_dffs;
      }
      result.sfq.net.replace_fanin( edge.to, edge.slot, previous );
    }
  }

  return result;
}

void canonicalize_aa_stages( SfqNetwork const& sfq, StageAssignment& stages )
{
  const auto order = topological_order( sfq.net );
  const auto fanouts = sfq.net.fanouts();
  for ( auto it = order.rbegin(); it != order.rend(); ++it )
  {
    const uint32_t x = *it;
    if ( sfq.category_of( x ) != GateCategory::AA || fanouts[x].empty() )
      continue;
    int32_t latest = std::numeric_limits<int32_t>::max();
    for ( auto w : fanouts[x] )
      latest = std::min( latest, stages.sigma[w] );
    stages.sigma[x] = latest;
  }
}

} // namespace sfqmap
