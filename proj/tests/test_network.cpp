#include <doctest.h>

#include <sfqmap/blif.hpp>
#include <sfqmap/json_io.hpp>
#include <sfqmap/network.hpp>

#include <random>

using namespace sfqmap;

namespace
{

Network chain3()
{
  Network net( "chain" );
  auto a = net.add_node( GateKind::PI );
  auto b = net.add_node( GateKind::NOT, { a } );
  auto c = net.add_node( GateKind::NOT, { b } );
  net.add_node( GateKind::PO, { c } );
  return net;
}

} // namespace

TEST_CASE( "validate accepts a well-formed network" )
{
  auto net = chain3();
  auto report = validate( net );
  CHECK( report.ok );
  CHECK( report.violations.empty() );
}

TEST_CASE( "validate reports arity violations" )
{
  Network net;
  auto a = net.add_node( GateKind::PI );
  auto b = net.add_node( GateKind::PI );
  auto c = net.add_node( GateKind::PI );
  net.add_node( GateKind::AND, { a, b, c } );
  auto report = validate( net );
  CHECK( !report.ok );
  REQUIRE( report.violations.size() == 1 );
  CHECK( report.violations[0].rule == "arity" );
}

TEST_CASE( "validate reports cycles" )
{
  Network net;
  auto a = net.add_node( GateKind::PI );
  // u and v form a 2-cycle; fanins are patched in by hand.
  auto u = net.add_node( GateKind::AND, { a, a } );
  auto v = net.add_node( GateKind::AND, { u, u } );
  // rebuild with a cycle: u depends on v
  Network cyclic;
  auto p = cyclic.add_node( GateKind::PI );
  auto x = cyclic.add_node( GateKind::AND, { p, 2u } );
  auto y = cyclic.add_node( GateKind::AND, { x, p } );
  (void)u;
  (void)v;
  (void)y;
  auto report = validate( cyclic );
  CHECK( !report.ok );
  bool has_cycle = false;
  for ( auto const& viol : report.violations )
    has_cycle |= viol.rule == "cycle";
  CHECK( has_cycle );
}

TEST_CASE( "topological order is deterministic and respects edges" )
{
  // diamond: a -> {b, c} -> d
  Network net;
  auto a = net.add_node( GateKind::PI );
  auto b = net.add_node( GateKind::NOT, { a } );
  auto c = net.add_node( GateKind::NOT, { a } );
  auto d = net.add_node( GateKind::AND, { b, c } );
  net.add_node( GateKind::PO, { d } );

  auto order = topological_order( net );
  CHECK( order == std::vector<uint32_t>{ 0, 1, 2, 3, 4 } );
}

TEST_CASE( "topological order throws on a cycle" )
{
  Network cyclic;
  auto p = cyclic.add_node( GateKind::PI );
  cyclic.add_node( GateKind::AND, { p, 2u } );
  cyclic.add_node( GateKind::AND, { 1u, p } );
  CHECK_THROWS( topological_order( cyclic ) );
}

TEST_CASE( "simulate basic gate semantics" )
{
  Network net;
  auto a = net.add_node( GateKind::PI );
  auto b = net.add_node( GateKind::PI );
  auto x = net.add_node( GateKind::XOR, { a, b } );
  auto m = net.add_node( GateKind::MERGER, { a, b } );
  auto d = net.add_node( GateKind::DFF, { a } );
  net.add_node( GateKind::PO, { x } );
  net.add_node( GateKind::PO, { m } );
  net.add_node( GateKind::PO, { d } );

  CHECK( simulate( net, { true, true } ) == std::vector<bool>{ false, true, true } );
  CHECK( simulate( net, { false, true } ) == std::vector<bool>{ true, true, false } );
  CHECK( simulate( net, { false, false } ) == std::vector<bool>{ false, false, false } );
  CHECK_THROWS( simulate( net, { true } ) );
}

TEST_CASE( "blif: two-input AND with declared output" )
{
  auto net = parse_blif( ".model tiny\n"
                         ".inputs a b\n"
                         ".outputs y\n"
                         ".names a b y\n"
                         "11 1\n"
                         ".end\n" );
  CHECK( net.num_pis() == 2 );
  CHECK( net.num_pos() == 1 );
  CHECK( net.num_gates() == 1 );
  CHECK( net.node( 2 ).kind == GateKind::AND );
  CHECK( simulate( net, { true, true } ) == std::vector<bool>{ true } );
  CHECK( simulate( net, { true, false } ) == std::vector<bool>{ false } );
}

TEST_CASE( "blif: empty model is rejected" )
{
  CHECK_THROWS_WITH_AS( parse_blif( ".model empty\n.end\n" ), doctest::Contains( "no primary outputs" ),
                        ParseError );
}

TEST_CASE( "blif: OR recognized from one-hot rows" )
{
  // hand-encoded pattern: {"1- 1", "-1 1"} is the canonical 2-input OR cover
  auto net = parse_blif( ".model t\n.inputs a b\n.outputs y\n"
                         ".names a b y\n1- 1\n-1 1\n.end\n" );
  REQUIRE( net.num_gates() == 1 );
  CHECK( net.node( 2 ).kind == GateKind::OR );
  CHECK( simulate( net, { false, true } ) == std::vector<bool>{ true } );
  CHECK( simulate( net, { false, false } ) == std::vector<bool>{ false } );
}

TEST_CASE( "blif: recognized pattern table" )
{
  struct Sample
  {
    const char* rows;
    GateKind kind;
    std::vector<bool> expected; // f(00), f(01), f(10), f(11) with inputs (a,b)
  };
  // expanded truth tables serve as the oracle for each canonical cover
  const Sample samples[] = {
      { "11 1\n", GateKind::AND, { false, false, false, true } },
      { "0- 1\n-0 1\n", GateKind::AND, { true, true, true, false } },   // NAND: inverted downstream
      { "00 1\n", GateKind::OR, { true, false, false, false } },       // NOR
      { "10 1\n01 1\n", GateKind::XOR, { false, true, true, false } },
      { "11 1\n00 1\n", GateKind::XOR, { true, false, false, true } }, // XNOR
  };
  for ( auto const& s : samples )
  {
    auto net = parse_blif( std::string( ".model t\n.inputs a b\n.outputs y\n.names a b y\n" ) +
                           s.rows + ".end\n" );
    bool found = false;
    for ( auto const& n : net.nodes() )
      found |= n.kind == s.kind;
    CHECK_MESSAGE( found, "rows: ", s.rows );
    for ( uint32_t m = 0; m < 4; ++m )
    {
      const bool a = ( m >> 1 ) & 1, b = m & 1;
      CHECK( simulate( net, { a, b } )[0] == s.expected[m] );
    }
  }
}

TEST_CASE( "blif: multi-input gates decompose into 2-input trees" )
{
  auto net = parse_blif( ".model t\n.inputs a b c d\n.outputs y\n"
                         ".names a b c d y\n1111 1\n.end\n" );
  uint32_t ands = 0;
  for ( auto const& n : net.nodes() )
  {
    if ( n.kind == GateKind::AND )
    {
      ++ands;
      CHECK( n.fanins.size() == 2 );
    }
  }
  CHECK( ands == 3 );
  CHECK( simulate( net, { true, true, true, true } ) == std::vector<bool>{ true } );
  CHECK( simulate( net, { true, true, false, true } ) == std::vector<bool>{ false } );
}

TEST_CASE( "blif: constants are rejected" )
{
  CHECK_THROWS_AS( parse_blif( ".model t\n.inputs a\n.outputs y\n.names y\n1\n.end\n" ), ParseError );
}

TEST_CASE( "blif: non-canonical tables are rejected" )
{
  // 2-input majority-like cover is not a recognized pattern
  CHECK_THROWS_WITH_AS( parse_blif( ".model t\n.inputs a b c\n.outputs y\n"
                                    ".names a b c y\n11- 1\n1-1 1\n-11 1\n.end\n" ),
                        doctest::Contains( "unsupported truth table" ), ParseError );
}

TEST_CASE( "blif: undeclared signals and duplicates are reported" )
{
  CHECK_THROWS_WITH_AS( parse_blif( ".model t\n.inputs a\n.outputs y\n.names a q y\n11 1\n.end\n" ),
                        doctest::Contains( "undeclared" ), ParseError );
  CHECK_THROWS_WITH_AS( parse_blif( ".model t\n.inputs a b\n.outputs y\n"
                                    ".names a y\n1 1\n.names b y\n1 1\n.end\n" ),
                        doctest::Contains( "duplicate" ), ParseError );
}

TEST_CASE( "blif: latches are cut into PI/PO pairs" )
{
  auto net = parse_blif( ".model seq\n.inputs a\n.outputs y\n"
                         ".latch ns q 0\n"
                         ".names a q ns\n11 1\n"
                         ".names q y\n0 1\n.end\n" );
  CHECK( net.num_pis() == 2 ); // a, q
  CHECK( net.num_pos() == 2 ); // y, ns
  // cut state input behaves combinationally
  CHECK( simulate( net, { true, true } ) == std::vector<bool>{ false, true } );
}

TEST_CASE( "blif: comments and line continuation" )
{
  auto net = parse_blif( "# header comment\n"
                         ".model t # trailing\n"
                         ".inputs a \\\n b\n"
                         ".outputs y\n"
                         ".names a b y\n11 1\n.end\n" );
  CHECK( net.num_pis() == 2 );
  CHECK( net.num_pos() == 1 );
}

TEST_CASE( "blif: combinational cycle is a parse error" )
{
  CHECK_THROWS_WITH_AS( parse_blif( ".model t\n.inputs a\n.outputs y\n"
                                    ".names a u y\n11 1\n"
                                    ".names y u\n1 1\n.end\n" ),
                        doctest::Contains( "cycle" ), ParseError );
}

TEST_CASE( "json netlist: parse and identity check" )
{
  const std::string text = R"({
    "name": "t",
    "inputs": [0, 1],
    "outputs": [3],
    "gates": [
      {"id": 0, "kind": "PI", "fanins": []},
      {"id": 1, "kind": "PI", "fanins": []},
      {"id": 2, "kind": "XOR", "fanins": [0, 1]},
      {"id": 3, "kind": "PO", "fanins": [2]}
    ]
  })";
  auto parsed = parse_netlist( text );
  CHECK( parsed.net.num_pis() == 2 );
  CHECK( parsed.net.node( 2 ).kind == GateKind::XOR );
  CHECK( !parsed.stages.has_value() );
}

TEST_CASE( "json netlist: stage annotations round into a StageAssignment" )
{
  const std::string text = R"({
    "name": "t", "phases": 2,
    "inputs": [0], "outputs": [2],
    "gates": [
      {"id": 0, "kind": "PI", "fanins": [], "stage": 0, "epoch": 0, "phase": 0},
      {"id": 1, "kind": "NOT", "fanins": [0], "stage": 3, "epoch": 1, "phase": 1},
      {"id": 2, "kind": "PO", "fanins": [1], "stage": 3}
    ]
  })";
  auto parsed = parse_netlist_json( text );
  REQUIRE( parsed.stages.has_value() );
  CHECK( parsed.stages->n == 2 );
  CHECK( parsed.stages->stage( 1 ) == 3 );
  CHECK( parsed.stages->epoch( 1 ) == 1 );
  CHECK( parsed.stages->phase( 1 ) == 1 );
}

TEST_CASE( "json netlist: inconsistent annotations are rejected" )
{
  const std::string text = R"({
    "name": "t", "phases": 2, "inputs": [0], "outputs": [1],
    "gates": [
      {"id": 0, "kind": "PI", "fanins": [], "stage": 0},
      {"id": 1, "kind": "PO", "fanins": [0], "stage": 3, "epoch": 0}
    ]
  })";
  CHECK_THROWS( parse_netlist_json( text ) );
}

TEST_CASE( "simulate is deterministic on random vectors" )
{
  auto net = parse_blif( ".model t\n.inputs a b c d e\n.outputs y z\n"
                         ".names a b t1\n10 1\n01 1\n"
                         ".names c d t2\n11 1\n"
                         ".names t1 t2 y\n1- 1\n-1 1\n"
                         ".names e t1 z\n11 1\n.end\n" );
  std::mt19937_64 rng( 7 );
  for ( int i = 0; i < 100; ++i )
  {
    std::vector<bool> in( 5 );
    for ( auto&& b : in )
      b = rng() & 1;
    auto r1 = simulate( net, in );
    auto r2 = simulate( net, in );
    CHECK( r1 == r2 );
  }
}
