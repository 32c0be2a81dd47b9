#include <doctest.h>

#include <map>
#include <random>

#include "majmap/bench_io.hpp"
#include "majmap/errors.hpp"
#include "majmap/preprocess.hpp"
#include "majmap/verify.hpp"
#include "oracles.hpp"

using namespace majmap;

TEST_CASE( "single pattern simulation" )
{
  auto net = parse_bench( "INPUT(a)\nINPUT(b)\nINPUT(c)\nOUTPUT(m)\nm = MAJ(a, b, c)\n" );
  CHECK( simulate( net, { true, true, false } ) == std::vector<bool>{ true } );
  CHECK( simulate( net, { true, false, false } ) == std::vector<bool>{ false } );
}

TEST_CASE( "c17 matches its NAND equations" )
{
  auto net = read_bench_file( MAJMAP_BENCHMARKS "/c17.bench" );
  convert_gates( net );
  insert_splitters( net );
  auto nand = []( bool x, bool y ) { return !( x && y ); };
  for ( std::uint32_t m = 0; m < 32; ++m )
  {
    std::vector<bool> in;
    for ( int i = 0; i < 5; ++i )
      in.push_back( ( m >> i ) & 1u );
    // PI order N1 N2 N3 N6 N7
    bool n1 = in[0], n2 = in[1], n3 = in[2], n6 = in[3], n7 = in[4];
    bool n10 = nand( n1, n3 ), n11 = nand( n3, n6 ), n16 = nand( n2, n11 ), n19 = nand( n11, n7 );
    auto out = simulate( net, in );
    CHECK( out[0] == nand( n10, n16 ) );
    CHECK( out[1] == nand( n16, n19 ) );
  }
}

TEST_CASE( "word simulation agrees with the recursive oracle" )
{
  std::mt19937_64 rng( 4 );
  for ( int t = 0; t < 40; ++t )
  {
    auto net = oracle::random_network( rng, 5, 25, 3, true );
    std::vector<std::uint64_t> words;
    for ( std::size_t i = 0; i < net.pis().size(); ++i )
      words.push_back( rng() );
    auto vals = simulate_words( net, words );
    for ( int bit = 0; bit < 64; bit += 7 )
    {
      std::map<std::string, bool> assign;
      for ( std::size_t i = 0; i < net.pis().size(); ++i )
        assign[net.node( net.pis()[i] ).name] = ( words[i] >> bit ) & 1u;
      auto ref = oracle::eval_outputs( net, assign );
      for ( auto po : net.pos() )
        CHECK( static_cast<bool>( ( vals[po] >> bit ) & 1u ) == ref.at( net.node( po ).name ) );
    }
  }
}

TEST_CASE( "a mutation is caught with a valid counterexample" )
{
  auto a = read_bench_file( MAJMAP_BENCHMARKS "/c17.bench" );
  auto b = a;
  auto victim = *b.find_node( "N16" );
  b.set_kind( victim, GateKind::NOR );
  auto rep = check_equivalence( a, b );
  CHECK_FALSE( rep.equivalent );
  CHECK( rep.exhaustive );
  CHECK_FALSE( rep.mismatch.empty() );
  std::map<std::string, bool> assign( rep.counterexample.begin(), rep.counterexample.end() );
  CHECK( oracle::eval_outputs( a, assign ).at( rep.mismatch ) != oracle::eval_outputs( b, assign ).at( rep.mismatch ) );
}

TEST_CASE( "conversion is equivalent, exhaustively on small nets" )
{
  auto a = read_bench_file( MAJMAP_BENCHMARKS "/c17.bench" );
  auto b = a;
  convert_gates( b );
  insert_splitters( b );
  auto rep = check_equivalence( a, b );
  CHECK( rep.equivalent );
  CHECK( rep.exhaustive );
  CHECK( rep.effective_inputs == 5 );
  CHECK( rep.patterns == 32 );
}

TEST_CASE( "large nets use seeded random vectors" )
{
  auto a = read_bench_file( MAJMAP_BENCHMARKS "/c432.bench" );
  auto b = a;
  convert_gates( b );
  EquivalenceOptions opt;
  opt.vectors = 1000;
  auto rep = check_equivalence( a, b, opt );
  CHECK( rep.equivalent );
  CHECK_FALSE( rep.exhaustive );
  CHECK( rep.patterns >= 1000 );
}

TEST_CASE( "registers are cut points" )
{
  auto a = read_bench_file( MAJMAP_BENCHMARKS "/s27.bench" );
  CHECK( a.registers().size() == 3 );
  auto b = a;
  convert_gates( b );
  insert_splitters( b );
  auto rep = check_equivalence( a, b );
  CHECK( rep.equivalent );
  CHECK( rep.effective_inputs == a.pis().size() + 3 );
  // a mutation behind a register input is still found
  auto c = a;
  auto d = c.node( *c.find_node( "G6" ) ).fanins[0];
  REQUIRE( c.kind( d ) == GateKind::NOR );
  c.set_kind( d, GateKind::OR_WIDE );
  CHECK_FALSE( check_equivalence( a, c ).equivalent );
}

TEST_CASE( "interface mismatches are reported" )
{
  auto a = parse_bench( "INPUT(a)\nINPUT(b)\nOUTPUT(o)\no = AND(a, b)\n" );
  auto b = parse_bench( "INPUT(a)\nINPUT(c)\nOUTPUT(o)\no = AND(a, c)\n" );
  auto c = parse_bench( "INPUT(a)\nINPUT(b)\nOUTPUT(p)\np = AND(a, b)\n" );
  CHECK_THROWS_AS( check_equivalence( a, b ), interface_error );
  CHECK_THROWS_AS( check_equivalence( a, c ), interface_error );
}
