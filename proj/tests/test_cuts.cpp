#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "majmap/bench_io.hpp"
#include "majmap/cuts.hpp"
#include "majmap/errors.hpp"
#include "majmap/preprocess.hpp"
#include "oracles.hpp"

using namespace majmap;

namespace
{

std::set<std::set<std::string>> leaf_names( const Network& net, const std::vector<Cut>& cuts )
{
  std::set<std::set<std::string>> r;
  for ( const auto& c : cuts )
  {
    std::set<std::string> s;
    for ( auto l : c.leaves )
      s.insert( net.node( l ).name );
    r.insert( s );
  }
  return r;
}

std::set<std::vector<NodeId>> leaf_sets( const std::vector<Cut>& cuts )
{
  std::set<std::vector<NodeId>> r;
  for ( const auto& c : cuts )
    r.insert( c.leaves );
  return r;
}

} // namespace

TEST_CASE( "node H has exactly five 3-feasible cuts" )
{
  auto net = read_bench_file( MAJMAP_TEST_DATA "/cut_example.bench" );
  auto h = *net.find_node( "H" );
  auto cuts = enumerate_cuts( net, h, 3 );
  std::set<std::set<std::string>> expected{
      { "F", "G" }, { "A", "B", "E" }, { "A", "D", "E" }, { "D", "E", "F" }, { "A", "D", "G" } };
  CHECK( leaf_names( net, cuts ) == expected );
  CHECK( cuts.size() == 5 );
  for ( const auto& c : cuts )
    CHECK( std::is_sorted( c.leaves.begin(), c.leaves.end() ) );
}

TEST_CASE( "truth tables follow leaf order" )
{
  auto net = parse_bench( "INPUT(a)\nINPUT(b)\nINPUT(c)\nOUTPUT(o)\nOUTPUT(m)\no = AND(a, b)\nm = MAJ(a, b, c)\n" );
  insert_splitters( net );
  std::vector<NodeId> ab{ *net.find_pi( "a" ), *net.find_pi( "b" ) };
  std::vector<NodeId> abc{ *net.find_pi( "a" ), *net.find_pi( "b" ), *net.find_pi( "c" ) };
  // bit b holds f(b): AND2 is 0001 read from index 0, MAJ3 is 00010111
  CHECK( cut_truth_table( net, *net.find_node( "o" ), ab ) == 0b1000 );
  CHECK( cut_truth_table( net, *net.find_node( "m" ), abc ) == 0b11101000 );
}

TEST_CASE( "cuts never stop at a splitter and respect K" )
{
  auto net = read_bench_file( MAJMAP_BENCHMARKS "/c432.bench" );
  convert_gates( net );
  insert_splitters( net );
  for ( std::uint32_t k = 2; k <= 4; ++k )
  {
    CutEnumerator en( net, { k, 64, true } );
    net.foreach_node( [&]( const Node& n ) {
      for ( const auto& c : en.cuts( n.id ) )
      {
        CHECK( c.arity() <= k );
        CHECK( c.arity() >= 2 );
        for ( auto l : c.leaves )
          CHECK( net.kind( l ) != GateKind::SP );
      }
    } );
  }
}

TEST_CASE( "cut enumeration agrees with a brute-force oracle" )
{
  std::mt19937_64 rng( 11 );
  for ( int t = 0; t < 60; ++t )
  {
    auto net = oracle::random_network( rng, 4, 10, 2 );
    insert_splitters( net );
    for ( std::uint32_t k = 2; k <= 4; ++k )
    {
      for ( bool shared : { false, true } )
      {
        net.foreach_node( [&]( const Node& n ) {
          if ( n.kind == GateKind::PI || n.kind == GateKind::PO || n.kind == GateKind::SP )
            return;
          auto got = leaf_sets( enumerate_cuts( net, n.id, k, 100000, shared ) );
          auto want = oracle::brute_force_cuts( net, n.id, k, shared );
          // the library drops cuts whose function does not depend on all leaves
          std::set<std::vector<NodeId>> filtered;
          for ( const auto& ls : want )
          {
            auto tt = cut_truth_table( net, n.id, ls );
            bool all_used = true;
            for ( std::uint32_t i = 0; i < ls.size(); ++i )
            {
              bool dep = false;
              for ( std::uint32_t m = 0; m < ( 1u << ls.size() ); ++m )
                dep |= ( ( tt >> m ) & 1u ) != ( ( tt >> ( m ^ ( 1u << i ) ) ) & 1u );
              all_used &= dep;
            }
            if ( all_used || got.count( ls ) )
              filtered.insert( ls );
          }
          CHECK( got == filtered );
        } );
      }
    }
  }
}

TEST_CASE( "K=4 cuts contain the K=3 cuts" )
{
  std::mt19937_64 rng( 5 );
  for ( int t = 0; t < 40; ++t )
  {
    auto net = oracle::random_network( rng, 5, 14, 2 );
    insert_splitters( net );
    net.foreach_node( [&]( const Node& n ) {
      auto k3 = leaf_sets( enumerate_cuts( net, n.id, 3, 100000 ) );
      auto k4 = leaf_sets( enumerate_cuts( net, n.id, 4, 100000 ) );
      CHECK( std::includes( k4.begin(), k4.end(), k3.begin(), k3.end() ) );
    } );
  }
}

TEST_CASE( "cut truth tables match simulation of the interior" )
{
  std::mt19937_64 rng( 9 );
  for ( int t = 0; t < 30; ++t )
  {
    auto net = oracle::random_network( rng, 4, 12, 2 );
    insert_splitters( net );
    net.foreach_node( [&]( const Node& n ) {
      for ( const auto& c : enumerate_cuts( net, n.id, 4 ) )
      {
        // leaves as free inputs: their values override the evaluation
        for ( std::uint32_t m = 0; m < ( 1u << c.arity() ); ++m )
        {
          std::unordered_map<NodeId, bool> memo;
          for ( std::uint32_t i = 0; i < c.arity(); ++i )
            memo[c.leaves[i]] = ( m >> i ) & 1u;
          std::map<std::string, bool> assign;
          for ( auto pi : net.pis() )
            assign[net.node( pi ).name] = false;
          bool v = oracle::eval_node( net, c.root, assign, memo );
          CHECK( v == static_cast<bool>( ( c.truth >> m ) & 1u ) );
        }
      }
    } );
  }
}

TEST_CASE( "invalid K is a configuration error" )
{
  CHECK_THROWS_AS( check_k( 1 ), config_error );
  CHECK_THROWS_AS( check_k( 5 ), config_error );
  CHECK_NOTHROW( check_k( 4 ) );
}

TEST_CASE( "invalidation recomputes cuts after a rewrite" )
{
  auto net = read_bench_file( MAJMAP_TEST_DATA "/cut_example.bench" );
  CutEnumerator en( net, { 3, 64, false } );
  auto h = *net.find_node( "H" );
  auto first = en.cuts( h );
  en.invalidate( *net.find_node( "A" ) );
  auto second = en.cuts( h );
  CHECK( leaf_sets( first ) == leaf_sets( second ) );
}
