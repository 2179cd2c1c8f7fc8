#include <doctest.h>

#include <sfqmap/blif.hpp>
#include <sfqmap/json_io.hpp>
#include <sfqmap/pipeline.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sfqmap;
namespace fs = std::filesystem;

namespace
{

std::string cli_binary()
{
  const char* env = std::getenv( "SFQMAP_CLI" );
  REQUIRE_MESSAGE( env != nullptr, "SFQMAP_CLI must point at the sfqmap binary" );
  return env;
}

std::string data_dir()
{
  const char* env = std::getenv( "SFQMAP_DATA" );
  REQUIRE_MESSAGE( env != nullptr, "SFQMAP_DATA must point at the data directory" );
  return env;
}

int run( std::string const& args )
{
  const int rc = std::system( ( cli_binary() + " " + args + " > /dev/null 2>&1" ).c_str() );
  return WEXITSTATUS( rc );
}

std::string slurp( fs::path const& path )
{
  std::ifstream in( path, std::ios::binary );
  REQUIRE_MESSAGE( in.good(), "missing ", path.string() );
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write( fs::path const& path, std::string const& text )
{
  std::ofstream out( path, std::ios::binary );
  out << text;
}

fs::path temp_dir( std::string const& tag )
{
  auto dir = fs::temp_directory_path() / ( "sfqmap_cli_" + tag );
  fs::remove_all( dir );
  fs::create_directories( dir );
  return dir;
}

} // namespace

TEST_CASE( "map on the imbalanced toy exits 0 and matches re-verification" )
{
  const auto dir = temp_dir( "map" );
  const auto toy = dir / "toy.blif";
  // 4-deep imbalanced toy: one branch of depth 4, one of depth 1
  write( toy, ".model toy\n.inputs a b\n.outputs x y\n"
              ".names a t1\n0 1\n.names t1 t2\n0 1\n.names t2 t3\n0 1\n.names t3 x\n0 1\n"
              ".names b y\n0 1\n.end\n" );

  CHECK( run( "map " + toy.string() + " --phases 4 --time-limit 0 -o " + dir.string() ) == 0 );
  CHECK( fs::exists( dir / "report.json" ) );
  CHECK( fs::exists( dir / "mapped.json" ) );
  CHECK( fs::exists( dir / "mapped.dot" ) );

  // the mapped netlist re-verifies clean
  CHECK( run( "verify " + ( dir / "mapped.json" ).string() ) == 0 );
}

TEST_CASE( "usage errors exit 1" )
{
  const auto dir = temp_dir( "usage" );
  const auto toy = dir / "toy.blif";
  write( toy, ".model toy\n.inputs a\n.outputs y\n.names a y\n0 1\n.end\n" );

  CHECK( run( "map " + toy.string() + " --phases 0 -o " + dir.string() ) == 1 );
  CHECK( run( "map " + ( dir / "missing.blif" ).string() + " -o " + dir.string() ) == 1 );

  const auto cyclic = dir / "cyclic.blif";
  write( cyclic, ".model c\n.inputs a\n.outputs y\n"
                 ".names a u y\n11 1\n.names y u\n1 1\n.end\n" );
  CHECK( run( "map " + cyclic.string() + " -o " + dir.string() ) == 1 );
}

TEST_CASE( "verify exits 1 on stripped annotations and 2 on mutations" )
{
  const auto dir = temp_dir( "verify" );
  const auto toy = dir / "toy.blif";
  write( toy, ".model toy\n.inputs a b\n.outputs x y\n"
              ".names a t1\n0 1\n.names t1 t2\n0 1\n.names t2 t3\n0 1\n.names t3 x\n0 1\n"
              ".names b y\n0 1\n.end\n" );
  REQUIRE( run( "map " + toy.string() + " --phases 2 --time-limit 0 -o " + dir.string() ) == 0 );

  auto parsed = parse_netlist_json( slurp( dir / "mapped.json" ) );
  REQUIRE( parsed.stages.has_value() );

  // strip annotations
  write( dir / "stripped.json", emit_netlist( parsed.net ) );
  CHECK( run( "verify " + ( dir / "stripped.json" ).string() ) == 1 );

  // mutate one clocked gate's stage
  auto mutated = *parsed.stages;
  for ( auto const& node : parsed.net.nodes() )
  {
    if ( node.kind == GateKind::NOT )
    {
      mutated.sigma[node.id] -= 1;
      break;
    }
  }
  auto sfq = attach_categories( parsed.net );
  write( dir / "mutated.json", emit_netlist( sfq, mutated ) );
  CHECK( run( "verify " + ( dir / "mutated.json" ).string() ) == 2 );
}

TEST_CASE( "map artifacts are byte-identical across reruns" )
{
  const auto dir1 = temp_dir( "det1" );
  const auto dir2 = temp_dir( "det2" );
  const auto input = fs::path( data_dir() ) / "benchmarks" / "comp8.blif";
  const std::string flags = " --phases 4 --seed 7 --time-limit 0 --node-limit 300000 --jobs 3 -o ";

  REQUIRE( run( "map " + input.string() + flags + dir1.string() ) == 0 );
  REQUIRE( run( "map " + input.string() + flags + dir2.string() ) == 0 );

  for ( auto const* name : { "report.json", "mapped.json", "mapped.dot" } )
    CHECK( slurp( dir1 / name ) == slurp( dir2 / name ) );
}

TEST_CASE( "sweep writes the combined table" )
{
  const auto dir = temp_dir( "sweep" );
  const auto input = fs::path( data_dir() ) / "benchmarks" / "parity16.blif";
  REQUIRE( run( "sweep " + input.string() + " --phases-list 1,2,4 --time-limit 0 -o " +
                dir.string() ) == 0 );
  const auto csv = slurp( dir / "sweep.csv" );
  CHECK( csv.find( "n,dff_count,jj_count,status" ) != std::string::npos );
  CHECK( csv.find( "1," ) != std::string::npos );
  CHECK( csv.find( "4," ) != std::string::npos );
  CHECK( fs::exists( dir / "sweep.json" ) );
  CHECK( fs::exists( dir / "n1" / "report.json" ) );
  CHECK( fs::exists( dir / "n4" / "report.json" ) );
}

TEST_CASE( "n=1 mapping fully balances every clocked gap" )
{
  // at a single phase, consecutive clocked elements sit one stage apart
  const auto dir = temp_dir( "full" );
  const auto input = fs::path( data_dir() ) / "benchmarks" / "adder8.blif";
  REQUIRE( run( "map " + input.string() + " --phases 1 --time-limit 2 -o " + dir.string() ) ==
           0 );
  auto parsed = parse_netlist_json( slurp( dir / "mapped.json" ) );
  REQUIRE( parsed.stages.has_value() );
  auto sfq = attach_categories( parsed.net );

  // every AS gate's release chain: gap to each reaching release == 1
  auto const& net = parsed.net;
  auto const& stages = *parsed.stages;
  const auto order = topological_order( net );
  std::vector<std::vector<int32_t>> releases( net.size() );
  for ( auto id : order )
  {
    auto const& node = net.node( id );
    if ( node.kind == GateKind::PO )
      continue;
    const auto cat = sfq.category_of( id );
    if ( cat != GateCategory::AA )
    {
      releases[id] = { stages.stage( id ) };
      continue;
    }
    for ( auto f : node.fanins )
      for ( auto r : releases[f] )
        releases[id].push_back( r );
  }
  for ( auto const& node : net.nodes() )
  {
    if ( sfq.category_of( node.id ) != GateCategory::AS )
      continue;
    for ( auto f : node.fanins )
      for ( auto r : releases[f] )
        CHECK( stages.stage( node.id ) - r == 1 );
  }
}

TEST_CASE( "stats reports gate counts" )
{
  const auto input = fs::path( data_dir() ) / "benchmarks" / "mux8.blif";
  CHECK( run( "stats " + input.string() ) == 0 );
}
