#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "majmap/bench_io.hpp"
#include "majmap/errors.hpp"
#include "majmap/postprocess.hpp"
#include "majmap/preprocess.hpp"
#include "oracles.hpp"

using namespace majmap;

namespace
{

std::string slurp( const std::string& path )
{
  std::ifstream in( path );
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t parse_error_line( const std::string& text )
{
  try
  {
    parse_bench( text );
  }
  catch ( const parse_error& e )
  {
    return e.line();
  }
  return ~std::size_t{ 0 };
}

std::size_t count_kind( const Network& net, GateKind k )
{
  std::size_t n = 0;
  net.foreach_node( [&]( const Node& x ) { n += x.kind == k; } );
  return n;
}

} // namespace

TEST_CASE( "c17 parses to the counts in its text" )
{
  const auto text = slurp( MAJMAP_BENCHMARKS "/c17.bench" );
  std::size_t ins = 0, outs = 0, nands = 0;
  std::istringstream ls( text );
  for ( std::string line; std::getline( ls, line ); )
  {
    ins += line.rfind( "INPUT(", 0 ) == 0;
    outs += line.rfind( "OUTPUT(", 0 ) == 0;
    nands += line.find( "= NAND(" ) != std::string::npos;
  }
  auto net = parse_bench( text, "c17" );
  CHECK( net.pis().size() == ins );
  CHECK( net.pos().size() == outs );
  CHECK( count_kind( net, GateKind::NAND ) == nands );
  CHECK( ins == 5 );
  CHECK( outs == 2 );
  CHECK( nands == 6 );
  CHECK_NOTHROW( check_consistency( net ) );
}

TEST_CASE( "lines may appear in any order and BUF is an alias" )
{
  auto net = parse_bench( "OUTPUT(o)\no = BUFF(t)\nt = AND(a, b)\nINPUT(b)\nINPUT(a)\n" );
  CHECK( net.pis().size() == 2 );
  CHECK( count_kind( net, GateKind::AND2 ) == 1 );
  CHECK( net.size() == 4 );
  auto po = *net.find_po( "o" );
  CHECK( net.kind( net.node( po ).fanins[0] ) == GateKind::AND2 );
}

TEST_CASE( "wide and inverting gates keep their own kinds until conversion" )
{
  auto net = parse_bench( "INPUT(a)\nINPUT(b)\nINPUT(c)\nINPUT(d)\nINPUT(e)\nOUTPUT(w)\nOUTPUT(x)\n"
                          "w = AND(a, b, c, d, e)\nx = XOR(a, b, c)\ny = NOR(a, b)\nOUTPUT(y)\n" );
  CHECK( count_kind( net, GateKind::AND_WIDE ) == 1 );
  CHECK( count_kind( net, GateKind::XOR_WIDE ) == 1 );
  CHECK( count_kind( net, GateKind::NOR ) == 1 );
  CHECK_THROWS_AS( write_bench( net ), structural_error );
}

TEST_CASE( "parse errors carry the offending line" )
{
  CHECK( parse_error_line( "INPUT(a)\nOUTPUT(o)\no = FOO(a)\n" ) == 3 );
  CHECK( parse_error_line( "INPUT(a)\nOUTPUT(o)\no = NOT(a, a)\n" ) == 3 );
  CHECK( parse_error_line( "INPUT(a)\nOUTPUT(o)\n\no = AND(a, zz)\n" ) == 4 );
  CHECK( parse_error_line( "INPUT(a)\nx = NOT(a)\nx = NOT(a)\n" ) == 3 );
  CHECK( parse_error_line( "INPUT(a)\nOUTPUT(o)\np = AND(a, o)\no = OR(a, p)\n" ) >= 3 );
  CHECK( parse_error_line( "INPUT(a)\nthis is not bench\n" ) == 2 );
  CHECK( parse_error_line( "INPUT(a)\nOUTPUT(o)\no = NOT(a)  # origin=bogus\n" ) == 3 );
  CHECK_THROWS_AS( read_bench_file( "/nonexistent/x.bench" ), parse_error );
}

TEST_CASE( "registers break cycles" )
{
  auto net = parse_bench( "INPUT(a)\nOUTPUT(o)\nq = DFF(o)\no = AND(a, q)\n" );
  auto q = *net.find_node( "q" );
  CHECK( is_register( net.node( q ) ) );
  CHECK_NOTHROW( topological_order( net ) );
}

TEST_CASE( "empty network writes a header only" )
{
  Network net( "empty" );
  auto text = write_bench( net );
  CHECK( text.find( "INPUT" ) == std::string::npos );
  CHECK( text.find( "OUTPUT" ) == std::string::npos );
  auto back = parse_bench( text );
  CHECK( back.size() == 0 );
}

TEST_CASE( "write then read is isomorphic on random converted nets" )
{
  std::mt19937_64 rng( 42 );
  for ( int t = 0; t < 100; ++t )
  {
    auto net = oracle::random_network( rng, 2 + rng() % 5, 5 + rng() % 25, 1 + rng() % 3, true );
    convert_gates( net );
    insert_splitters( net );
    if ( t % 2 )
      balance_paths( net );
    compute_levels( net );
    auto back = parse_bench( write_bench( net ) );
    compute_levels( back );
    CHECK( oracle::isomorphic( net, back ) );
    CHECK( oracle::same_function( net, back ) );
  }
}

TEST_CASE( "a PO named differently from its driver survives the round trip" )
{
  auto net = parse_bench( "INPUT(a)\nINPUT(b)\nOUTPUT(o1)\nOUTPUT(o2)\nt = AND(a, b)\no1 = BUF(t)\no2 = BUF(t)\n" );
  insert_splitters( net );
  auto back = parse_bench( write_bench( net ) );
  CHECK( back.find_po( "o1" ).has_value() );
  CHECK( back.find_po( "o2" ).has_value() );
  CHECK( oracle::isomorphic( net, back ) );
}

TEST_CASE( "JSON mirror lists every node" )
{
  auto net = read_bench_file( MAJMAP_TEST_DATA "/dff_chains.bench" );
  auto j = nlohmann::json::parse( network_to_json( net ) );
  CHECK( j["nodes"].size() == net.size() );
  CHECK( j["inputs"].size() == 3 );
  std::size_t balancing = 0;
  for ( const auto& n : j["nodes"] )
    balancing += n["origin"] == "balancing_dff";
  CHECK( balancing == 8 );
}
