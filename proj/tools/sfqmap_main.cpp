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

#include <CLI11.hpp>
#include <json.hpp>

#include <sfqmap/blif.hpp>
#include <sfqmap/json_io.hpp>
#include <sfqmap/pipeline.hpp>
#include <sfqmap/splitter_synth.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace
{

using namespace sfqmap;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verify = 2;
constexpr int exit_solver = 3;

struct CommonFlags
{
  std::string input;
  std::string out_dir{ "." };
  uint32_t phases{ 1 };
  std::string objective{ "gate-max" };
  std::string or_style{ "merger" };
  double time_limit{ 20.0 };
  uint64_t node_limit{ 0 };
  uint64_t seed{ 1 };
  std::string cost_table;
  std::string emit{ "all" };
  uint32_t jobs{ 0 };
  bool eq13_windows{ false };
  std::string dump_phase_model;
};

MapOptions to_options( CommonFlags const& flags )
{
  MapOptions options;
  options.cfg.n = flags.phases;
  options.cfg.objective_mode =
      flags.objective == "edge" ? ObjectiveMode::edge : ObjectiveMode::gate_max;
  options.cfg.or_style = flags.or_style == "sa-or" ? OrStyle::sa_or : OrStyle::merger;
  options.cfg.solver_budget.time_limit_s = flags.time_limit;
  options.cfg.solver_budget.node_limit = flags.node_limit;
  options.cfg.seed = flags.seed;
  options.jobs = flags.jobs;
  options.encoding =
      flags.eq13_windows ? SpacingEncoding::eq13_literal : SpacingEncoding::gap_window;
  return options;
}

CostTable load_costs( std::string const& flag_path )
{
  if ( !flag_path.empty() )
    return read_cost_table( flag_path );
  if ( const char* env = std::getenv( "SFQMAP_COST_TABLE" ); env != nullptr && *env != '\0' )
    return read_cost_table( env );
  return default_cost_table();
}

void write_file( std::filesystem::path const& path, std::string const& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot write '" + path.string() + "'" );
  out << content;
}

int run_map_one( Network const& net, CommonFlags const& flags, CostTable const& costs,
                 std::ostream& log, MapOutcome* outcome_out = nullptr )
{
  const auto options = to_options( flags );

  if ( !flags.dump_phase_model.empty() )
  {
    auto sfq = decompose( net, options.cfg );
    const auto bounds = build_stage_bounds( sfq, options.cfg.n );
    auto pm = build_phase_model( sfq, options.cfg.n, options.cfg.objective_mode, bounds );
    write_file( flags.dump_phase_model, dump_model( pm.model ) );
  }

  auto outcome = run_mapping( net, options, costs );
  if ( outcome_out != nullptr )
    *outcome_out = outcome;

  if ( !outcome.mapped )
  {
    log << net.name() << ": phase assignment " << to_string( outcome.phase_status ) << "\n";
    return exit_solver;
  }

  std::filesystem::create_directories( flags.out_dir );
  const std::filesystem::path dir( flags.out_dir );
  if ( flags.emit == "all" || flags.emit == "json" )
    write_file( dir / "report.json", emit_report_json( outcome.report ) );
  if ( flags.emit == "all" || flags.emit == "netlist" )
    write_file( dir / "mapped.json", emit_netlist( outcome.sfq, outcome.stages ) );
  if ( flags.emit == "all" || flags.emit == "dot" )
    write_file( dir / "mapped.dot", emit_dot( outcome.sfq, outcome.stages ) );

  char timing[64];
  std::snprintf( timing, sizeof timing, "%.2f", outcome.report.total_wall_s );
  log << net.name() << " n=" << flags.phases << " #DFF=" << outcome.report.dff_count
      << " #splitters=" << outcome.report.splitter_count << " #JJ=" << outcome.report.jj_count
      << " phase=" << to_string( outcome.phase_status )
      << " dff=" << to_string( outcome.dff_status )
      << " verify=" << ( outcome.timing.ok ? "ok" : "FAIL" ) << " (" << timing << " s)\n";

  if ( !outcome.solved() )
    return exit_solver;
  if ( !outcome.timing.ok )
  {
    for ( auto const& v : outcome.timing.violations )
      log << "  violation [" << v.rule << "] node " << v.node << ": " << v.message << "\n";
    return exit_verify;
  }
  return exit_ok;
}

int cmd_map( CommonFlags const& flags )
{
  auto parsed = read_netlist( flags.input );
  auto report = validate( parsed.net );
  if ( !report.ok )
  {
    for ( auto const& v : report.violations )
      std::cerr << "invalid netlist [" << v.rule << "] node " << v.node << ": " << v.message
                << "\n";
    return exit_usage;
  }
  return run_map_one( parsed.net, flags, load_costs( flags.cost_table ), std::cout );
}

int cmd_sweep( CommonFlags const& flags, std::vector<uint32_t> const& phase_list )
{
  auto parsed = read_netlist( flags.input );
  auto report = validate( parsed.net );
  if ( !report.ok )
  {
    std::cerr << "invalid netlist\n";
    return exit_usage;
  }
  const auto costs = load_costs( flags.cost_table );

  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "n,dff_count,jj_count,status\n";
  int worst = exit_ok;
  for ( auto n : phase_list )
  {
    CommonFlags per = flags;
    per.phases = n;
    per.out_dir = ( std::filesystem::path( flags.out_dir ) / ( "n" + std::to_string( n ) ) )
                      .string();
    MapOutcome outcome;
    const int rc = run_map_one( parsed.net, per, costs, std::cout, &outcome );
    worst = std::max( worst, rc );

    nlohmann::json row;
    row["n"] = n;
    if ( outcome.mapped )
    {
      row["dff_count"] = outcome.report.dff_count;
      row["jj_count"] = outcome.report.jj_count;
    }
    const char* status = !outcome.mapped ? to_string( outcome.phase_status )
                         : outcome.phase_status == SolveStatus::feasible ||
                                 outcome.dff_status == SolveStatus::feasible
                             ? "feasible"
                             : to_string( outcome.dff_status );
    row["status"] = status;
    rows.push_back( row );
    csv << n << "," << ( outcome.mapped ? std::to_string( outcome.report.dff_count ) : "" ) << ","
        << ( outcome.mapped ? std::to_string( outcome.report.jj_count ) : "" ) << "," << status
        << "\n";
  }

  std::filesystem::create_directories( flags.out_dir );
  write_file( std::filesystem::path( flags.out_dir ) / "sweep.json", rows.dump( 2 ) + "\n" );
  write_file( std::filesystem::path( flags.out_dir ) / "sweep.csv", csv.str() );
  return worst;
}

int cmd_verify( CommonFlags const& flags )
{
  auto parsed = read_netlist( flags.input );
  if ( !parsed.stages.has_value() )
  {
    std::cerr << "input carries no stage annotations\n";
    return exit_usage;
  }
  auto sfq = attach_categories( parsed.net );
  const auto report = verify_timing( sfq, *parsed.stages, parsed.stages->n );
  for ( auto const& v : report.violations )
    std::cout << "violation [" << v.rule << "] node " << v.node << ": " << v.message << "\n";
  std::cout << parsed.net.name() << " verify=" << ( report.ok ? "ok" : "FAIL" ) << "\n";
  return report.ok ? exit_ok : exit_verify;
}

int cmd_stats( CommonFlags const& flags )
{
  auto parsed = read_netlist( flags.input );
  auto const& net = parsed.net;
  std::map<GateKind, uint32_t> counts;
  for ( auto const& node : net.nodes() )
    ++counts[node.kind];
  std::cout << net.name() << ": " << net.num_pis() << " PIs, " << net.num_pos() << " POs, "
            << net.num_gates() << " gates\n";
  for ( auto const& [kind, count] : counts )
    std::cout << "  " << to_string( kind ) << ": " << count << "\n";
  auto report = validate( net );
  std::cout << "valid: " << ( report.ok ? "yes" : "no" ) << "\n";
  return report.ok ? exit_ok : exit_usage;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "multiphase SFQ technology mapping" };
  app.require_subcommand( 1 );

  CommonFlags flags;
  std::vector<uint32_t> phase_list{ 1, 2, 4, 7 };

  auto add_common = [&]( CLI::App* cmd, bool with_mapping ) {
    cmd->add_option( "input", flags.input, "netlist file (BLIF or native JSON)" )->required();
    if ( with_mapping )
    {
      cmd->add_option( "-o,--out", flags.out_dir, "output directory" );
      cmd->add_option( "--objective", flags.objective, "objective mode" )
          ->check( CLI::IsMember( { "gate-max", "edge" } ) );
      cmd->add_option( "--or-style", flags.or_style, "OR realization" )
          ->check( CLI::IsMember( { "merger", "sa-or" } ) );
      cmd->add_option( "--time-limit", flags.time_limit, "solver wall-clock limit per solve, seconds (0 = none)" );
      cmd->add_option( "--node-limit", flags.node_limit, "solver node limit per solve (0 = none)" );
      cmd->add_option( "--seed", flags.seed, "run seed recorded in reports" );
      cmd->add_option( "--cost-table", flags.cost_table,
                       "JJ cost table (default: $SFQMAP_COST_TABLE or built-in)" );
      cmd->add_option( "--emit", flags.emit, "artifacts to write" )
          ->check( CLI::IsMember( { "all", "dot", "json", "netlist" } ) );
      cmd->add_option( "--jobs", flags.jobs, "DFF solver worker threads (0 = all cores)" );
      cmd->add_flag( "--eq13-windows", flags.eq13_windows,
                     "use the chain-of-span-n spacing encoding (comparison mode)" );
      cmd->add_option( "--dump-phase-model", flags.dump_phase_model,
                       "write the phase constraint model to a text file" );
    }
  };

  auto* map_cmd = app.add_subcommand( "map", "map a netlist to a multiphase SFQ circuit" );
  add_common( map_cmd, true );
  map_cmd->add_option( "-n,--phases", flags.phases, "number of clock phases" )
      ->check( CLI::PositiveNumber );

  auto* sweep_cmd = app.add_subcommand( "sweep", "map across several phase counts" );
  add_common( sweep_cmd, true );
  sweep_cmd->add_option( "--phases-list", phase_list, "phase counts to run" )->delimiter( ',' );

  auto* verify_cmd = app.add_subcommand( "verify", "re-verify a mapped annotated netlist" );
  add_common( verify_cmd, false );

  auto* stats_cmd = app.add_subcommand( "stats", "print netlist statistics" );
  add_common( stats_cmd, false );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    const int rc = app.exit( e );
    return rc == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( map_cmd->parsed() )
      return cmd_map( flags );
    if ( sweep_cmd->parsed() )
      return cmd_sweep( flags, phase_list );
    if ( verify_cmd->parsed() )
      return cmd_verify( flags );
    return cmd_stats( flags );
  }
  catch ( ParseError const& e )
  {
    std::cerr << flags.input << ": " << e.what() << "\n";
    return exit_usage;
  }
  catch ( std::invalid_argument const& e )
  {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_solver;
  }
  catch ( std::exception const& e )
  {
    std::cerr << e.what() << "\n";
    return exit_usage;
  }
}
