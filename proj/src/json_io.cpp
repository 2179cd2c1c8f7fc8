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

#include "sfqmap/json_io.hpp"

#include "sfqmap/blif.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace sfqmap
{

namespace
{

using nlohmann::json;

[[noreturn]] void fail( std::string const& message )
{
  throw std::runtime_error( "json netlist: " + message );
}

} // namespace

ParsedNetlist parse_netlist_json( std::string const& text )
{
  json doc;
  try
  {
    doc = json::parse( text );
  }
  catch ( json::parse_error const& e )
  {
    throw std::runtime_error( std::string( "json netlist: " ) + e.what() );
  }

  if ( !doc.is_object() || !doc.contains( "gates" ) || !doc["gates"].is_array() )
    fail( "expected an object with a 'gates' array" );

  std::vector<json> gates( doc["gates"].begin(), doc["gates"].end() );
  std::sort( gates.begin(), gates.end(), []( json const& a, json const& b ) {
    return a.value( "id", 0u ) < b.value( "id", 0u );
  } );

  Network net( doc.value( "name", std::string( "top" ) ) );
  const uint32_t count = static_cast<uint32_t>( gates.size() );

  bool annotated = !gates.empty();
  StageAssignment stages;
  stages.n = doc.value( "phases", 1u );
  stages.sigma.assign( count, -1 );

  uint32_t expected = 0;
  for ( auto const& g : gates )
  {
    if ( !g.contains( "id" ) || !g.contains( "kind" ) )
      fail( "gate entry requires 'id' and 'kind'" );
    const uint32_t id = g["id"].get<uint32_t>();
    if ( id != expected )
      fail( "gate ids must be dense 0..N-1 (missing or duplicate id " + std::to_string( expected ) + ")" );
    ++expected;

    auto kind = gate_kind_from_string( g["kind"].get<std::string>() );
    if ( !kind )
      fail( "unknown gate kind '" + g["kind"].get<std::string>() + "'" );

    std::vector<uint32_t> fanins;
    if ( g.contains( "fanins" ) )
    {
      for ( auto const& f : g["fanins"] )
      {
        const uint32_t fid = f.get<uint32_t>();
        if ( fid >= count )
          fail( "fanin " + std::to_string( fid ) + " out of range" );
        fanins.push_back( fid );
      }
    }
    net.add_node( *kind, std::move( fanins ) );

    if ( g.contains( "stage" ) )
    {
      const int32_t sigma = g["stage"].get<int32_t>();
      stages.sigma[id] = sigma;
      const int32_t n = static_cast<int32_t>( stages.n );
      if ( g.contains( "epoch" ) && g["epoch"].get<int32_t>() != sigma / n )
        fail( "inconsistent epoch annotation on gate " + std::to_string( id ) );
      if ( g.contains( "phase" ) && g["phase"].get<int32_t>() != sigma % n )
        fail( "inconsistent phase annotation on gate " + std::to_string( id ) );
    }
    else
    {
      annotated = false;
    }
  }

  if ( doc.contains( "inputs" ) )
  {
    std::vector<uint32_t> declared;
    for ( auto const& v : doc["inputs"] )
      declared.push_back( v.get<uint32_t>() );
    if ( declared != net.pis() )
      fail( "'inputs' does not match the PI nodes" );
  }
  if ( doc.contains( "outputs" ) )
  {
    std::vector<uint32_t> declared;
    for ( auto const& v : doc["outputs"] )
      declared.push_back( v.get<uint32_t>() );
    if ( declared != net.pos() )
      fail( "'outputs' does not match the PO nodes" );
  }
  if ( net.num_pos() == 0 )
    fail( "no primary outputs" );

  ParsedNetlist result;
  result.net = std::move( net );
  if ( annotated )
    result.stages = std::move( stages );
  return result;
}

ParsedNetlist parse_netlist( std::string const& text )
{
  for ( char c : text )
  {
    if ( c == ' ' || c == '\t' || c == '\n' || c == '\r' )
      continue;
    if ( c == '{' )
      return parse_netlist_json( text );
    break;
  }
  return { parse_blif( text ), std::nullopt };
}

ParsedNetlist read_netlist( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_netlist( buffer.str() );
}

} // namespace sfqmap
