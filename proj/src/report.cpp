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

#include "sfqmap/report.hpp"

#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

namespace sfqmap
{

using nlohmann::json;

CostTable read_cost_table( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open cost table '" + path + "'" );
  json doc = json::parse( in );
  if ( !doc.is_object() )
    throw std::runtime_error( "cost table must be a JSON object" );

  CostTable table;
  for ( auto const& [key, value] : doc.items() )
  {
    if ( !key.empty() && key[0] == '_' )
      continue;
    auto kind = gate_kind_from_string( key );
    if ( !kind )
      throw std::runtime_error( "cost table: unknown gate kind '" + key + "'" );
    if ( !value.is_number_unsigned() )
      throw std::runtime_error( "cost table: '" + key + "' must be a non-negative integer" );
    table[*kind] = value.get<uint32_t>();
  }
  return table;
}

CostTable default_cost_table()
{
  // Placeholder JJ counts; see data/cost_table.json for the shipped copy.
  return {
      { GateKind::AND, 11 },  { GateKind::OR, 11 },      { GateKind::XOR, 11 },
      { GateKind::NOT, 9 },   { GateKind::DFF, 6 },      { GateKind::SPLITTER, 3 },
      { GateKind::MERGER, 5 }, { GateKind::BUF, 2 },
  };
}

int64_t count_jjs( SfqNetwork const& sfq, CostTable const& costs )
{
  int64_t total = 0;
  for ( auto const& node : sfq.net.nodes() )
  {
    if ( node.kind == GateKind::PI || node.kind == GateKind::PO )
    {
      auto it = costs.find( node.kind );
      if ( it != costs.end() )
        total += it->second;
      continue;
    }
    auto it = costs.find( node.kind );
    if ( it == costs.end() )
      throw std::invalid_argument( std::string( "count_jjs: no cost entry for " ) +
                                   to_string( node.kind ) );
    total += it->second;
  }
  return total;
}

MappingReport make_report( SfqNetwork const& sfq, StageAssignment const& stages,
                           MappingConfig const& cfg, CostTable const& costs,
                           SolveStatus phase_status, SolveStatus dff_status )
{
  MappingReport report;
  report.circuit = sfq.net.name();
  report.n = cfg.n;
  report.seed = cfg.seed;
  report.phase_status = phase_status;
  report.dff_status = dff_status;
  for ( auto const& node : sfq.net.nodes() )
  {
    if ( node.kind == GateKind::PI || node.kind == GateKind::PO )
      continue;
    ++report.gate_counts[node.kind];
  }
  report.dff_count = report.gate_counts.count( GateKind::DFF ) ? report.gate_counts[GateKind::DFF] : 0;
  report.splitter_count =
      report.gate_counts.count( GateKind::SPLITTER ) ? report.gate_counts[GateKind::SPLITTER] : 0;
  report.jj_count = count_jjs( sfq, costs );
  report.epoch_depth = 0;
  for ( auto po : sfq.net.pos() )
    report.epoch_depth = std::max( report.epoch_depth, stages.epoch( po ) );
  return report;
}

std::string emit_report_json( MappingReport const& report )
{
  json doc;
  doc["circuit"] = report.circuit;
  doc["phases"] = report.n;
  doc["throughput_factor"] = "1/" + std::to_string( report.n );
  doc["seed"] = report.seed;
  doc["epoch_depth"] = report.epoch_depth;
  doc["dff_count"] = report.dff_count;
  doc["splitter_count"] = report.splitter_count;
  doc["jj_count"] = report.jj_count;
  json counts = json::object();
  for ( auto const& [kind, count] : report.gate_counts )
    counts[to_string( kind )] = count;
  doc["gate_counts"] = counts;
  json status;
  status["phase_assignment"] = to_string( report.phase_status );
  status["dff_insertion"] = to_string( report.dff_status );
  doc["solver_status"] = status;
  return doc.dump( 2 ) + "\n";
}

std::string emit_dot( SfqNetwork const& sfq, StageAssignment const& stages )
{
  auto const& net = sfq.net;
  std::ostringstream out;
  out << "digraph \"" << net.name() << "\" {\n";
  out << "  rankdir=LR;\n";

  std::map<int32_t, std::vector<uint32_t>> by_stage;
  for ( auto const& node : net.nodes() )
  {
    const bool clocked = sfq.category_of( node.id ) == GateCategory::AS;
    out << "  n" << node.id << " [label=\"" << to_string( node.kind ) << "@"
        << stages.stage( node.id ) << " (" << stages.epoch( node.id ) << "."
        << stages.phase( node.id ) << ")\" shape=" << ( clocked ? "box" : "ellipse" ) << "];\n";
    by_stage[stages.stage( node.id )].push_back( node.id );
  }
  for ( auto const& [stage, ids] : by_stage )
  {
    (void)stage;
    out << "  { rank=same;";
    for ( auto id : ids )
      out << " n" << id << ";";
    out << " }\n";
  }
  for ( auto const& node : net.nodes() )
  {
    for ( auto f : node.fanins )
      out << "  n" << f << " -> n" << node.id << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace
{

json netlist_to_json( Network const& net, StageAssignment const* stages )
{
  json doc;
  doc["name"] = net.name();
  doc["inputs"] = net.pis();
  doc["outputs"] = net.pos();
  if ( stages != nullptr )
    doc["phases"] = stages->n;
  json gates = json::array();
  for ( auto const& node : net.nodes() )
  {
    json g;
    g["id"] = node.id;
    g["kind"] = to_string( node.kind );
    g["fanins"] = node.fanins;
    if ( stages != nullptr )
    {
      g["stage"] = stages->stage( node.id );
      g["epoch"] = stages->epoch( node.id );
      g["phase"] = stages->phase( node.id );
    }
    gates.push_back( g );
  }
  doc["gates"] = gates;
  return doc;
}

} // namespace

std::string emit_netlist( SfqNetwork const& sfq, StageAssignment const& stages )
{
  return netlist_to_json( sfq.net, &stages ).dump( 2 ) + "\n";
}

std::string emit_netlist( Network const& net )
{
  return netlist_to_json( net, nullptr ).dump( 2 ) + "\n";
}

} // namespace sfqmap
