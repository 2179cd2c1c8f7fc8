#include <doctest.h>

#include <sfqmap/blif.hpp>
#include <sfqmap/decompose.hpp>

#include <random>

using namespace sfqmap;

namespace
{

MappingConfig config( OrStyle style = OrStyle::merger )
{
  MappingConfig cfg;
  cfg.or_style = style;
  return cfg;
}

bool equivalent( Network const& a, Network const& b, uint64_t seed = 11 )
{
  REQUIRE( a.num_pis() == b.num_pis() );
  REQUIRE( a.num_pos() == b.num_pos() );
  const uint32_t k = a.num_pis();
  if ( k <= 16 )
  {
    for ( uint64_t m = 0; m < ( 1ull << k ); ++m )
    {
      std::vector<bool> in( k );
      for ( uint32_t i = 0; i < k; ++i )
        in[i] = ( m >> i ) & 1;
      if ( simulate( a, in ) != simulate( b, in ) )
        return false;
    }
    return true;
  }
  std::mt19937_64 rng( seed );
  for ( int t = 0; t < 10000; ++t )
  {
    std::vector<bool> in( k );
    for ( uint32_t i = 0; i < k; ++i )
      in[i] = rng() & 1;
    if ( simulate( a, in ) != simulate( b, in ) )
      return false;
  }
  return true;
}

// Seeded random DAG over the supported source kinds, including DFFs and
// BUFs that decomposition must dissolve.
Network random_network( uint64_t seed, uint32_t num_pis = 5, uint32_t num_gates = 14 )
{
  std::mt19937_64 rng( seed );
  Network net( "rand" );
  std::vector<uint32_t> pool;
  for ( uint32_t i = 0; i < num_pis; ++i )
    pool.push_back( net.add_node( GateKind::PI ) );

  const GateKind kinds[] = { GateKind::AND, GateKind::OR, GateKind::XOR, GateKind::NOT,
                             GateKind::BUF, GateKind::DFF };
  for ( uint32_t i = 0; i < num_gates; ++i )
  {
    const GateKind kind = kinds[rng() % 6];
    std::vector<uint32_t> fanins;
    fanins.push_back( pool[rng() % pool.size()] );
    if ( gate_arity( kind ) == 2 )
      fanins.push_back( pool[rng() % pool.size()] );
    pool.push_back( net.add_node( kind, std::move( fanins ) ) );
  }
  // last few nodes become POs so depth is nontrivial
  for ( uint32_t i = 0; i < 3; ++i )
    net.add_node( GateKind::PO, { pool[pool.size() - 1 - i] } );
  return net;
}

} // namespace

TEST_CASE( "classify fixed category mapping" )
{
  auto cfg = config();
  CHECK( classify( GateKind::NOT, cfg ) == GateCategory::AS );
  CHECK( classify( GateKind::XOR, cfg ) == GateCategory::AS );
  CHECK( classify( GateKind::DFF, cfg ) == GateCategory::AS );
  CHECK( classify( GateKind::SPLITTER, cfg ) == GateCategory::AA );
  CHECK( classify( GateKind::MERGER, cfg ) == GateCategory::AA );
  CHECK( classify( GateKind::AND, cfg ) == GateCategory::SA );

  CHECK( classify( GateKind::OR, config( OrStyle::merger ) ) == GateCategory::AA );
  CHECK( classify( GateKind::OR, config( OrStyle::sa_or ) ) == GateCategory::SA );

  CHECK_THROWS_AS( classify( GateKind::PI, cfg ), std::invalid_argument );
  CHECK_THROWS_AS( classify( GateKind::BUF, cfg ), std::invalid_argument );
}

TEST_CASE( "decompose removes a DFF between two ANDs" )
{
  Network net;
  auto a = net.add_node( GateKind::PI );
  auto b = net.add_node( GateKind::PI );
  auto g1 = net.add_node( GateKind::AND, { a, b } );
  auto d = net.add_node( GateKind::DFF, { g1 } );
  auto g2 = net.add_node( GateKind::AND, { d, b } );
  net.add_node( GateKind::PO, { g2 } );

  auto sfq = decompose( net, config() );
  for ( auto const& n : sfq.net.nodes() )
    CHECK( n.kind != GateKind::DFF );
  CHECK( sfq.net.num_gates() == 2 );
  CHECK( equivalent( net, sfq.net ) );
}

TEST_CASE( "decompose maps OR to merger by default" )
{
  Network net;
  auto a = net.add_node( GateKind::PI );
  auto b = net.add_node( GateKind::PI );
  auto o = net.add_node( GateKind::OR, { a, b } );
  net.add_node( GateKind::PO, { o } );

  auto sfq = decompose( net, config() );
  REQUIRE( sfq.net.num_gates() == 1 );
  const auto& gate = sfq.net.node( 2 );
  CHECK( gate.kind == GateKind::MERGER );
  CHECK( sfq.category_of( gate.id ) == GateCategory::AA );

  auto sa = decompose( net, config( OrStyle::sa_or ) );
  CHECK( sa.net.node( 2 ).kind == GateKind::OR );
  CHECK( sa.category_of( 2 ) == GateCategory::SA );
}

TEST_CASE( "decompose keeps NOT chains intact" )
{
  auto net = parse_blif( ".model t\n.inputs a\n.outputs y\n"
                         ".names a u\n0 1\n.names u y\n0 1\n.end\n" );
  auto sfq = decompose( net, config() );
  CHECK( sfq.net.num_gates() == 2 );
  uint32_t as_nodes = 0;
  for ( auto const& n : sfq.net.nodes() )
  {
    if ( n.kind == GateKind::NOT )
    {
      CHECK( sfq.category_of( n.id ) == GateCategory::AS );
      ++as_nodes;
    }
  }
  CHECK( as_nodes == 2 );
}

TEST_CASE( "decompose preserves function for both or styles" )
{
  for ( uint64_t seed = 1; seed <= 20; ++seed )
  {
    auto net = random_network( seed );
    for ( auto style : { OrStyle::merger, OrStyle::sa_or } )
    {
      auto sfq = decompose( net, config( style ) );
      CHECK( validate( sfq.net ).ok );
      CHECK_MESSAGE( equivalent( net, sfq.net ), "seed ", seed );
    }
  }
}

TEST_CASE( "decompose is idempotent on decomposed networks" )
{
  auto net = random_network( 42 );
  auto once = decompose( net, config() );
  auto twice = decompose( once.net, config() );
  REQUIRE( once.net.size() == twice.net.size() );
  for ( uint32_t id = 0; id < once.net.size(); ++id )
  {
    CHECK( once.net.node( id ).kind == twice.net.node( id ).kind );
    CHECK( once.net.node( id ).fanins == twice.net.node( id ).fanins );
  }
}

TEST_CASE( "category partition is total over gates" )
{
  auto net = random_network( 3 );
  auto sfq = decompose( net, config() );
  REQUIRE( sfq.category.size() == sfq.net.size() );
  for ( auto const& n : sfq.net.nodes() )
  {
    const auto cat = sfq.category_of( n.id );
    if ( n.kind == GateKind::PI || n.kind == GateKind::PO )
      CHECK( cat == GateCategory::IO );
    else
      CHECK( cat != GateCategory::IO );
  }
}
