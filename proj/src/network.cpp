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

#include "sfqmap/network.hpp"

#include <algorithm>
#include <cassert>

namespace sfqmap
{

const char* to_string( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::PI: return "PI";
  case GateKind::PO: return "PO";
  case GateKind::AND: return "AND";
  case GateKind::OR: return "OR";
  case GateKind::XOR: return "XOR";
  case GateKind::NOT: return "NOT";
  case GateKind::BUF: return "BUF";
  case GateKind::DFF: return "DFF";
  case GateKind::SPLITTER: return "SPLITTER";
  case GateKind::MERGER: return "MERGER";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_string( std::string const& s )
{
  static const std::pair<const char*, GateKind> table[] = {
      { "PI", GateKind::PI }, { "PO", GateKind::PO }, { "AND", GateKind::AND },
      { "OR", GateKind::OR }, { "XOR", GateKind::XOR }, { "NOT", GateKind::NOT },
      { "BUF", GateKind::BUF }, { "DFF", GateKind::DFF },
      { "SPLITTER", GateKind::SPLITTER }, { "MERGER", GateKind::MERGER } };
  for ( auto const& [name, kind] : table )
  {
    if ( s == name )
      return kind;
  }
  return std::nullopt;
}

uint32_t gate_arity( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::PI: return 0;
  case GateKind::PO:
  case GateKind::NOT:
  case GateKind::BUF:
  case GateKind::DFF:
  case GateKind::SPLITTER: return 1;
  case GateKind::AND:
  case GateKind::OR:
  case GateKind::XOR:
  case GateKind::MERGER: return 2;
  }
  return 0;
}

uint32_t Network::add_node( GateKind kind, std::vector<uint32_t> fanins )
{
  const uint32_t id = static_cast<uint32_t>( nodes_.size() );
  nodes_.push_back( { id, kind, std::move( fanins ) } );
  if ( kind == GateKind::PI )
    pis_.push_back( id );
  else if ( kind == GateKind::PO )
    pos_.push_back( id );
  return id;
}

uint32_t Network::num_gates() const
{
  return size() - num_pis() - num_pos();
}

std::vector<uint32_t> Network::fanout_counts() const
{
  std::vector<uint32_t> counts( size(), 0u );
  for ( auto const& n : nodes_ )
  {
    for ( auto f : n.fanins )
      ++counts[f];
  }
  return counts;
}

std::vector<std::vector<uint32_t>> Network::fanouts() const
{
  std::vector<std::vector<uint32_t>> result( size() );
  for ( auto const& n : nodes_ )
  {
    for ( auto f : n.fanins )
      result[f].push_back( n.id );
  }
  return result;
}

ValidationReport validate( Network const& net )
{
  ValidationReport report;

  for ( auto const& n : net.nodes() )
  {
    if ( n.fanins.size() != gate_arity( n.kind ) )
    {
      report.add( "arity", n.id,
                  std::string( to_string( n.kind ) ) + " node has " +
                      std::to_string( n.fanins.size() ) + " fanins, expected " +
                      std::to_string( gate_arity( n.kind ) ) );
    }
    for ( auto f : n.fanins )
    {
      if ( f >= net.size() )
      {
        report.add( "dangling", n.id, "fanin " + std::to_string( f ) + " does not exist" );
      }
      else if ( net.node( f ).kind == GateKind::PO )
      {
        report.add( "po-fanout", n.id, "PO " + std::to_string( f ) + " used as fanin" );
      }
    }
  }

  // Cycle detection by iterative DFS with colors.
  enum : uint8_t { white, grey, black };
  std::vector<uint8_t> color( net.size(), white );
  for ( uint32_t root = 0; root < net.size(); ++root )
  {
    if ( color[root] != white )
      continue;
    std::vector<std::pair<uint32_t, uint32_t>> stack{ { root, 0u } };
    color[root] = grey;
    while ( !stack.empty() )
    {
      auto& [id, next] = stack.back();
      auto const& fanins = net.node( id ).fanins;
      bool descended = false;
      while ( next < fanins.size() )
      {
        const uint32_t f = fanins[next++];
        if ( f >= net.size() )
          continue;
        if ( color[f] == grey )
        {
          report.add( "cycle", id, "edge " + std::to_string( f ) + " -> " + std::to_string( id ) + " closes a cycle" );
          continue;
        }
        if ( color[f] == white )
        {
          color[f] = grey;
          stack.push_back( { f, 0u } );
          descended = true;
          break;
        }
      }
      if ( !descended && ( stack.back().second >= fanins.size() ) )
      {
        color[id] = black;
        stack.pop_back();
      }
    }
  }

  return report;
}

std::vector<uint32_t> topological_order( Network const& net )
{
  std::vector<uint32_t> indegree( net.size(), 0u );
  for ( auto const& n : net.nodes() )
    indegree[n.id] = static_cast<uint32_t>( n.fanins.size() );

  auto fanout = net.fanouts();

  // Kahn's algorithm with an id-ordered frontier for determinism.
  std::vector<uint32_t> frontier;
  for ( uint32_t id = 0; id < net.size(); ++id )
  {
    if ( indegree[id] == 0u )
      frontier.push_back( id );
  }
  std::make_heap( frontier.begin(), frontier.end(), std::greater<>{} );

  std::vector<uint32_t> order;
  order.reserve( net.size() );
  while ( !frontier.empty() )
  {
    std::pop_heap( frontier.begin(), frontier.end(), std::greater<>{} );
    const uint32_t id = frontier.back();
    frontier.pop_back();
    order.push_back( id );
    for ( auto succ : fanout[id] )
    {
      if ( --indegree[succ] == 0u )
      {
        frontier.push_back( succ );
        std::push_heap( frontier.begin(), frontier.end(), std::greater<>{} );
      }
    }
  }

  if ( order.size() != net.size() )
    throw std::runtime_error( "topological_order: cycle detected" );
  return order;
}

std::vector<bool> simulate( Network const& net, std::vector<bool> const& pi_values )
{
  return simulate( net, pi_values, topological_order( net ) );
}

std::vector<bool> simulate( Network const& net, std::vector<bool> const& pi_values,
                            std::vector<uint32_t> const& order )
{
  if ( pi_values.size() != net.num_pis() )
    throw std::invalid_argument( "simulate: expected " + std::to_string( net.num_pis() ) +
                                 " input bits, got " + std::to_string( pi_values.size() ) );

  std::vector<bool> value( net.size(), false );
  for ( uint32_t i = 0; i < net.num_pis(); ++i )
    value[net.pis()[i]] = pi_values[i];

  for ( auto id : order )
  {
    auto const& n = net.node( id );
    auto in = [&]( uint32_t slot ) { return static_cast<bool>( value[n.fanins[slot]] ); };
    switch ( n.kind )
    {
    case GateKind::PI: break;
    case GateKind::PO:
    case GateKind::BUF:
    case GateKind::DFF:
    case GateKind::SPLITTER:
      value[id] = in( 0 );
      break;
    case GateKind::NOT:
      value[id] = !in( 0 );
      break;
    case GateKind::AND:
      value[id] = in( 0 ) && in( 1 );
      break;
    case GateKind::OR:
    case GateKind::MERGER:
      value[id] = in( 0 ) || in( 1 );
      break;
    case GateKind::XOR:
      value[id] = in( 0 ) != in( 1 );
      break;
    }
  }

  std::vector<bool> out( net.num_pos() );
  for ( uint32_t i = 0; i < net.num_pos(); ++i )
    out[i] = value[net.pos()[i]];
  return out;
}

} // namespace sfqmap
