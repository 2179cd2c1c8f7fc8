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

#include "sfqmap/decompose.hpp"

#include <stdexcept>

namespace sfqmap
{

const char* to_string( GateCategory category )
{
  switch ( category )
  {
  case GateCategory::AA: return "AA";
  case GateCategory::AS: return "AS";
  case GateCategory::SA: return "SA";
  case GateCategory::IO: return "IO";
  }
  return "?";
}

GateCategory classify( GateKind kind, MappingConfig const& cfg )
{
  switch ( kind )
  {
  case GateKind::SPLITTER:
  case GateKind::MERGER:
    return GateCategory::AA;
  case GateKind::NOT:
  case GateKind::XOR:
  case GateKind::DFF:
    return GateCategory::AS;
  case GateKind::AND:
    return GateCategory::SA;
  case GateKind::OR:
    return cfg.or_style == OrStyle::merger ? GateCategory::AA : GateCategory::SA;
  case GateKind::PI:
  case GateKind::PO:
  case GateKind::BUF:
    break;
  }
  throw std::invalid_argument( std::string( "classify: " ) + to_string( kind ) +
                               " is not an SFQ primitive" );
}

SfqNetwork decompose( Network const& net, MappingConfig const& cfg )
{
  // Resolve each node through DFF/BUF chains to its surviving source.
  const auto order = topological_order( net );
  std::vector<uint32_t> resolved( net.size() );
  for ( auto id : order )
  {
    auto const& n = net.node( id );
    if ( n.kind == GateKind::DFF || n.kind == GateKind::BUF )
      resolved[id] = resolved[n.fanins[0]];
    else
      resolved[id] = id;
  }

  constexpr uint32_t unmapped = ~0u;
  std::vector<uint32_t> new_id( net.size(), unmapped );

  SfqNetwork sfq;
  sfq.net.set_name( net.name() );

  auto copy_node = [&]( Node const& n ) {
    GateKind kind = n.kind;
    if ( kind == GateKind::OR && cfg.or_style == OrStyle::merger )
      kind = GateKind::MERGER;

    std::vector<uint32_t> fanins;
    fanins.reserve( n.fanins.size() );
    for ( auto f : n.fanins )
    {
      const uint32_t mapped = new_id[resolved[f]];
      if ( mapped == unmapped )
        throw std::logic_error( "decompose: fanin resolution failed" );
      fanins.push_back( mapped );
    }

    new_id[n.id] = sfq.net.add_node( kind, std::move( fanins ) );
    sfq.category.push_back( kind == GateKind::PI || kind == GateKind::PO
                                ? GateCategory::IO
                                : classify( kind, cfg ) );
  };

  // PI and PO order is preserved; gates are renumbered topologically.
  for ( auto pi : net.pis() )
    copy_node( net.node( pi ) );
  for ( auto id : order )
  {
    auto const& n = net.node( id );
    if ( n.kind == GateKind::PI || n.kind == GateKind::PO ||
         n.kind == GateKind::DFF || n.kind == GateKind::BUF )
      continue;
    copy_node( n );
  }
  for ( auto po : net.pos() )
    copy_node( net.node( po ) );

  return sfq;
}

} // namespace sfqmap
