// Acceptance suite: runs every acceptance check and prints one PASS/FAIL
// line per criterion.  Exits nonzero if any criterion fails.

#include <sfqmap/blif.hpp>
#include <sfqmap/decompose.hpp>
#include <sfqmap/dff_insert.hpp>
#include <sfqmap/json_io.hpp>
#include <sfqmap/phase_assign.hpp>
#include <sfqmap/pipeline.hpp>
#include <sfqmap/report.hpp>
#include <sfqmap/splitter_synth.hpp>
#include <sfqmap/verify.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace sfqmap;
namespace fs = std::filesystem;

namespace
{

int failures = 0;

void report( int criterion, bool pass, std::string const& details )
{
  std::cout << "criterion " << criterion << ": " << ( pass ? "PASS" : "FAIL" ) << " - "
            << details << "\n";
  if ( !pass )
    ++failures;
}

double seconds_since( std::chrono::steady_clock::time_point t0 )
{
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
}

SolverBudget unlimited()
{
  SolverBudget b;
  b.time_limit_s = 0.0;
  return b;
}

Network random_network( uint64_t seed, uint32_t num_pis, uint32_t num_gates, uint32_t num_pos )
{
  std::mt19937_64 rng( seed );
  Network net( "rand" + std::to_string( seed ) );
  std::vector<uint32_t> pool;
  for ( uint32_t i = 0; i < num_pis; ++i )
    pool.push_back( net.add_node( GateKind::PI ) );
  const GateKind kinds[] = { GateKind::AND, GateKind::OR, GateKind::XOR, GateKind::NOT };
  for ( uint32_t i = 0; i < num_gates; ++i )
  {
    const GateKind kind = kinds[rng() % 4];
    std::vector<uint32_t> fanins{ pool[rng() % pool.size()] };
    if ( gate_arity( kind ) == 2 )
      fanins.push_back( pool[rng() % pool.size()] );
    pool.push_back( net.add_node( kind, std::move( fanins ) ) );
  }
  for ( uint32_t i = 0; i < num_pos; ++i )
    net.add_node( GateKind::PO, { pool[pool.size() - 1 - i] } );
  return net;
}

// ---- criterion 1: solver vs oracle on random independent paths --------

void criterion_1()
{
  const auto t0 = std::chrono::steady_clock::now();
  uint32_t checked = 0, mismatches = 0;

  for ( uint64_t seed = 1; checked < 200 && seed < 400; ++seed )
  {
    const uint32_t n = 2 + seed % 4; // phases 2..5
    MappingConfig cfg;
    cfg.n = n;
    cfg.solver_budget = unlimited();

    auto net = random_network( 1000 + seed, 4, 12, 2 );
    auto sfq = decompose( net, cfg );
    auto phase = assign_stages( sfq, cfg );
    if ( phase.status != SolveStatus::optimal )
      continue;
    auto split = insert_splitter_trees( sfq, phase.stages );

    for ( auto const& path : extract_paths( split.sfq, split.stages ) )
    {
      auto sites = enumerate_sites( path, split.sfq, split.stages, n );
      if ( sites.empty() || sites.size() > 12 )
        continue;
      auto oracle = brute_force_min_dffs( path, sites, split.sfq, split.stages, n );
      auto im = build_insertion_model( path, sites, split.sfq, split.stages, n );
      auto sol = solve( im.model, unlimited() );
      const bool agrees = oracle.has_value() && sol.status == SolveStatus::optimal &&
                          sol.objective_value == *oracle;
      if ( !agrees )
        ++mismatches;
      ++checked;
    }
  }

  const double dt = seconds_since( t0 );
  std::ostringstream details;
  details << checked << " paths, " << mismatches << " mismatches, " << dt << " s";
  report( 1, checked >= 200 && mismatches == 0 && dt < 60.0, details.str() );
}

// ---- criterion 2: straight-line closed form ---------------------------

void criterion_2()
{
  uint32_t mismatches = 0;
  for ( uint32_t n = 1; n <= 8; ++n )
  {
    for ( int32_t q = 1; q <= 20; ++q )
    {
      Network net( "s" );
      auto a = net.add_node( GateKind::PI );
      auto g = net.add_node( GateKind::NOT, { a } );
      auto h = net.add_node( GateKind::NOT, { g } );
      net.add_node( GateKind::PO, { h } );
      MappingConfig cfg;
      auto sfq = decompose( net, cfg );
      StageAssignment stages{ n, { 0, 1, 1 + q, 1 + q } };

      for ( auto const& path : extract_paths( sfq, stages ) )
      {
        if ( path.edges[0].from != g || path.edges[0].to != h )
          continue;
        auto sites = enumerate_sites( path, sfq, stages, n );
        auto oracle = brute_force_min_dffs( path, sites, sfq, stages, n );
        const int64_t closed_form = ( q + n - 1 ) / n - 1; // ceil(q/n) - 1
        if ( !oracle.has_value() || *oracle != closed_form )
          ++mismatches;
      }
    }
  }
  report( 2, mismatches == 0,
          "q in [1,20] x n in [1,8], " + std::to_string( mismatches ) + " mismatches" );
}

// ---- criteria 3/4/7: bundled circuits ---------------------------------

struct CircuitRun
{
  std::string name;
  std::map<uint32_t, uint32_t> dff_count;
  std::map<uint32_t, bool> all_optimal;
  bool violations_free = true;
  bool equivalent = true;
};

std::vector<CircuitRun> run_suite( fs::path const& bench_dir, std::string& c3_details )
{
  std::vector<CircuitRun> runs;
  uint32_t circuits = 0, clean = 0;

  for ( auto const& entry : fs::directory_iterator( bench_dir ) )
  {
    if ( entry.path().extension() != ".blif" )
      continue;
    ++circuits;
    auto net = read_blif( entry.path().string() );

    CircuitRun run;
    run.name = entry.path().stem().string();
    for ( uint32_t n : { 1u, 2u, 4u, 7u } )
    {
      MapOptions options;
      options.cfg.n = n;
      options.cfg.solver_budget.time_limit_s = 10.0;
      options.jobs = 2;
      auto outcome = run_mapping( net, options, default_cost_table() );

      const bool mapped_ok = outcome.solved() && outcome.timing.ok;
      if ( !mapped_ok )
      {
        run.violations_free = false;
        for ( auto const& v : outcome.timing.violations )
          std::cout << "  [" << run.name << " n=" << n << "] " << v.rule << " node " << v.node
                    << ": " << v.message << "\n";
        continue;
      }
      if ( !functionally_equivalent( net, outcome.sfq.net, options.cfg.seed ) )
        run.equivalent = false;
      run.dff_count[n] = outcome.report.dff_count;
      run.all_optimal[n] = outcome.phase_status == SolveStatus::optimal &&
                           outcome.dff_status == SolveStatus::optimal;
    }
    if ( run.violations_free && run.equivalent )
      ++clean;
    runs.push_back( std::move( run ) );
  }

  c3_details = std::to_string( circuits ) + " circuits x {1,2,4,7}, " +
               std::to_string( clean ) + " fully clean";
  report( 3, circuits >= 8 && clean == circuits, c3_details );
  return runs;
}

void criterion_4( std::vector<CircuitRun> const& runs )
{
  bool dominance = true;
  uint32_t gated = 0;
  std::ostringstream detail;
  for ( auto const& run : runs )
  {
    if ( run.dff_count.size() != 4 )
      continue;
    bool optimal_everywhere = true;
    for ( auto const& [n, opt] : run.all_optimal )
      optimal_everywhere &= opt;
    if ( !optimal_everywhere )
      continue;
    ++gated;
    for ( uint32_t n : { 2u, 4u, 7u } )
    {
      if ( run.dff_count.at( n ) > run.dff_count.at( 1 ) )
      {
        dominance = false;
        detail << run.name << " n=" << n << " breaks dominance; ";
      }
    }
  }

  // geometric-mean trend over the whole suite, normalized to n=1
  double log_sum_2 = 0.0, log_sum_4 = 0.0;
  uint32_t counted = 0;
  for ( auto const& run : runs )
  {
    if ( run.dff_count.size() != 4 || run.dff_count.at( 1 ) == 0 )
      continue;
    ++counted;
    log_sum_2 += std::log( double( run.dff_count.at( 2 ) ) / run.dff_count.at( 1 ) );
    log_sum_4 += std::log( double( run.dff_count.at( 4 ) ) / run.dff_count.at( 1 ) );
  }
  const double geo2 = counted ? std::exp( log_sum_2 / counted ) : 1.0;
  const double geo4 = counted ? std::exp( log_sum_4 / counted ) : 1.0;
  const bool trend = geo2 <= 1.0 && geo4 <= geo2;

  detail << gated << " circuits optimality-gated; geomean ratio n2=" << geo2
         << " n4=" << geo4 << " over " << counted << " circuits";
  report( 4, dominance && trend && counted >= 5, detail.str() );
}

// ---- criterion 5: solver optimality within the stated bounds ----------

std::optional<int64_t> enumerate_minimum( ConstraintModel const& model )
{
  const uint32_t nv = model.num_vars();
  std::vector<int64_t> assignment( nv );
  std::optional<int64_t> best;
  auto recurse = [&]( auto&& self, uint32_t v ) -> void {
    if ( v == nv )
    {
      if ( !verify_solution( model, assignment ) )
        return;
      int64_t obj = 0;
      for ( auto const& t : model.objective() )
        obj += t.coeff * assignment[t.var];
      if ( !best || obj < *best )
        best = obj;
      return;
    }
    for ( int64_t val = model.lower( v ); val <= model.upper( v ); ++val )
    {
      assignment[v] = val;
      self( self, v + 1 );
    }
  };
  recurse( recurse, 0 );
  return best;
}

void criterion_5()
{
  uint32_t mismatches = 0, feasible = 0;
  for ( uint64_t seed = 1; seed <= 100; ++seed )
  {
    std::mt19937_64 rng( seed * 77 );
    ConstraintModel model;
    std::vector<VarId> ints, bools;
    const uint32_t num_ints = 1 + rng() % 4;   // <= 6 ints, domain <= 8
    const uint32_t num_bools = 3 + rng() % 10; // <= 12 bools
    for ( uint32_t i = 0; i < num_ints; ++i )
    {
      const int64_t lo = int64_t( rng() % 5 ) - 2;
      ints.push_back( model.add_int_var( "x" + std::to_string( i ), lo, lo + rng() % 8 ) );
    }
    for ( uint32_t i = 0; i < num_bools; ++i )
      bools.push_back( model.add_bool_var( "b" + std::to_string( i ) ) );
    for ( uint32_t c = 0, e = rng() % 6; c < e; ++c )
    {
      std::vector<LinearTerm> terms;
      for ( uint32_t j = 0, len = 1 + rng() % 3; j < len; ++j )
      {
        const int64_t coeff = int64_t( rng() % 9 ) - 4;
        if ( coeff != 0 )
          terms.push_back(
              { coeff, rng() % 2 ? ints[rng() % ints.size()] : bools[rng() % bools.size()] } );
      }
      if ( !terms.empty() )
        model.add_linear( std::move( terms ), static_cast<Cmp>( rng() % 3 ),
                          int64_t( rng() % 13 ) - 6 );
    }
    for ( uint32_t c = 0, e = rng() % 6; c < e; ++c )
    {
      std::vector<Literal> clause;
      for ( uint32_t j = 0, len = 1 + rng() % 3; j < len; ++j )
        clause.push_back( { bools[rng() % bools.size()], rng() % 2 == 0 } );
      model.add_clause( std::move( clause ) );
    }
    std::vector<LinearTerm> objective;
    for ( auto v : ints )
      if ( rng() % 2 )
        objective.push_back( { int64_t( rng() % 5 ) - 2, v } );
    for ( auto v : bools )
      if ( rng() % 2 )
        objective.push_back( { int64_t( rng() % 3 ), v } );
    model.set_objective( std::move( objective ) );

    auto expected = enumerate_minimum( model );
    auto sol = solve( model, unlimited() );
    if ( expected )
    {
      ++feasible;
      if ( sol.status != SolveStatus::optimal || sol.objective_value != *expected ||
           !verify_solution( model, sol.assignment ) )
        ++mismatches;
    }
    else if ( sol.status != SolveStatus::infeasible )
    {
      ++mismatches;
    }
  }
  report( 5, mismatches == 0,
          "100 models (" + std::to_string( feasible ) + " feasible), " +
              std::to_string( mismatches ) + " mismatches" );
}

// ---- criterion 6: byte-identical artifacts ----------------------------

void criterion_6( fs::path const& bench_dir )
{
  auto net = read_blif( ( bench_dir / "comp8.blif" ).string() );
  MapOptions options;
  options.cfg.n = 4;
  options.cfg.seed = 11;
  options.cfg.solver_budget.time_limit_s = 0.0;
  options.cfg.solver_budget.node_limit = 250000;
  options.jobs = 3;

  auto a = run_mapping( net, options, default_cost_table() );
  auto b = run_mapping( net, options, default_cost_table() );
  const bool pass = a.ok() && b.ok() &&
                    emit_report_json( a.report ) == emit_report_json( b.report ) &&
                    emit_netlist( a.sfq, a.stages ) == emit_netlist( b.sfq, b.stages ) &&
                    emit_dot( a.sfq, a.stages ) == emit_dot( b.sfq, b.stages );
  report( 6, pass, "two node-limited runs, report/netlist/dot byte-compared" );
}

// ---- criterion 7: runtime envelope ------------------------------------

void criterion_7( fs::path const& bench_dir )
{
  bool pass = true;
  double worst = 0.0;
  std::string worst_name;
  for ( auto const& entry : fs::directory_iterator( bench_dir ) )
  {
    if ( entry.path().extension() != ".blif" )
      continue;
    auto net = read_blif( entry.path().string() );
    MapOptions options; // default budget
    options.cfg.n = 7;
    options.jobs = 2;
    const auto t0 = std::chrono::steady_clock::now();
    auto outcome = run_mapping( net, options, default_cost_table() );
    const double dt = seconds_since( t0 );
    if ( dt > worst )
    {
      worst = dt;
      worst_name = entry.path().stem().string();
    }
    if ( dt >= 60.0 || !outcome.ok() )
      pass = false;
  }
  std::ostringstream detail;
  detail << "slowest " << worst_name << " at " << worst << " s (limit 60)";
  report( 7, pass, detail.str() );
}

// ---- criterion 8: mutation detection ----------------------------------

void criterion_8( fs::path const& bench_dir )
{
  auto net = read_blif( ( bench_dir / "comp8.blif" ).string() );
  MapOptions options;
  options.cfg.n = 2;
  options.cfg.solver_budget.time_limit_s = 10.0;
  auto outcome = run_mapping( net, options, default_cost_table() );
  if ( !outcome.ok() || outcome.report.dff_count == 0 )
  {
    report( 8, false, "mapping for the mutation target failed" );
    return;
  }

  uint32_t undetected = 0, dff_mutations = 0, stage_mutations = 0;

  // (a) deleting any one inserted DFF
  for ( uint32_t victim = 0; victim < outcome.sfq.net.size(); ++victim )
  {
    if ( outcome.sfq.net.node( victim ).kind != GateKind::DFF )
      continue;
    ++dff_mutations;
    Network pruned( outcome.sfq.net.name() );
    std::vector<uint32_t> remap( outcome.sfq.net.size() );
    StageAssignment stages{ outcome.stages.n, {} };
    for ( auto const& node : outcome.sfq.net.nodes() )
    {
      if ( node.id == victim )
        continue;
      std::vector<uint32_t> fanins;
      for ( auto f : node.fanins )
        fanins.push_back( remap[f == victim ? outcome.sfq.net.node( victim ).fanins[0] : f] );
      remap[node.id] = pruned.add_node( node.kind, std::move( fanins ) );
      stages.sigma.push_back( outcome.stages.stage( node.id ) );
    }
    if ( verify_timing( attach_categories( pruned ), stages, stages.n ).ok )
      ++undetected;
  }

  // (b) decrementing any one gate's stage
  for ( auto const& node : outcome.sfq.net.nodes() )
  {
    if ( node.kind == GateKind::PI || node.kind == GateKind::PO )
      continue;
    ++stage_mutations;
    auto stages = outcome.stages;
    stages.sigma[node.id] -= 1;
    if ( verify_timing( outcome.sfq, stages, stages.n ).ok )
      ++undetected;
  }

  std::ostringstream detail;
  detail << dff_mutations << " DFF deletions + " << stage_mutations << " stage decrements, "
         << undetected << " undetected";
  report( 8, undetected == 0 && dff_mutations > 0, detail.str() );
}

} // namespace

int main( int argc, char** argv )
{
  if ( argc < 2 )
  {
    std::cerr << "usage: acceptance <data-dir>\n";
    return 2;
  }
  const fs::path bench_dir = fs::path( argv[1] ) / "benchmarks";

  criterion_1();
  criterion_2();
  std::string c3_details;
  auto runs = run_suite( bench_dir, c3_details );
  criterion_4( runs );
  criterion_5();
  criterion_6( bench_dir );
  criterion_7( bench_dir );
  criterion_8( bench_dir );

  std::cout << ( failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string( failures ) )
            << "\n";
  return failures == 0 ? 0 : 1;
}
