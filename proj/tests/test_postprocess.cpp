#include <doctest.h>

#include <random>

#include "majmap/bench_io.hpp"
#include "majmap/metrics.hpp"
#include "majmap/postprocess.hpp"
#include "majmap/preprocess.hpp"
#include "oracles.hpp"

using namespace majmap;

namespace
{

std::size_t count_origin( const Network& net, Origin o )
{
  std::size_t n = 0;
  net.foreach_node( [&]( const Node& x ) { n += x.origin == o; } );
  return n;
}

// every maximal chain of InsertedINVs has even length
bool inv_runs_even( const Network& net )
{
  bool ok = true;
  net.foreach_node( [&]( const Node& n ) {
    if ( n.origin != Origin::InsertedINV )
      return;
    if ( net.node( n.fanins[0] ).origin == Origin::InsertedINV )
      return; // not the head of a run
    std::size_t len = 0;
    auto cur = n.id;
    while ( true )
    {
      ++len;
      const auto& c = net.node( cur );
      if ( c.fanouts.size() != 1 || net.node( c.fanouts[0] ).origin != Origin::InsertedINV )
        break;
      cur = c.fanouts[0];
    }
    ok &= len % 2 == 0;
  } );
  return ok;
}

} // namespace

TEST_CASE( "OR2 with fan-in levels 1 and 2 needs one DFF" )
{
  auto net = parse_bench( "INPUT(a)\nINPUT(b)\nOUTPUT(o)\nx = NOT(a)\ny1 = NOT(b)\ny = NOT(y1)\no = OR(x, y)\n" );
  const auto ref = net;
  CHECK( pending_balancing_dffs( net ) == 1 );
  CHECK_FALSE( is_balanced( net ) );
  CHECK( balance_paths( net ) == 1 );
  CHECK( is_balanced( net ) );
  CHECK( count_origin( net, Origin::BalancingDFF ) == 1 );
  CHECK( balance_paths( net ) == 0 );
  CHECK( oracle::same_function( ref, net ) );
}

TEST_CASE( "merge and replace halves the balancing cells on chains of 2, 3 and 3" )
{
  CellLibrary lib;
  auto net = read_bench_file( MAJMAP_TEST_DATA "/dff_chains.bench" );
  const auto ref = net;
  REQUIRE( is_balanced( net ) );
  auto before = network_metrics( net, lib );
  auto cells_before = before.balancing_dffs + before.inserted_invs;
  CHECK( cells_before == 8 );

  auto st = merge_and_replace( net );
  auto after = network_metrics( net, lib );
  CHECK( st.merged_gates == 1 );
  CHECK( st.dffs_removed == 4 );
  CHECK( after.balancing_dffs + after.inserted_invs == 4 );
  CHECK( 2 * ( after.balancing_dffs + after.inserted_invs ) == cells_before );
  CHECK( after.jjs < before.jjs );
  CHECK( after.depth == before.depth );
  CHECK( is_balanced( net ) );
  CHECK( oracle::same_function( ref, net ) );
}

TEST_CASE( "a run of five DFFs keeps one and turns four into INVs" )
{
  CellLibrary lib;
  auto net = parse_bench( "INPUT(a)\nINPUT(b)\nOUTPUT(o)\n"
                          "x1 = NOT(a)\nx2 = NOT(x1)\nx3 = NOT(x2)\nx4 = NOT(x3)\nx5 = NOT(x4)\no = AND(x5, b)\n" );
  const auto ref = net;
  CHECK( balance_paths( net ) == 5 );
  auto jj0 = network_metrics( net, lib ).jjs;
  auto st = merge_and_replace( net );
  CHECK( st.replaced == 4 );
  CHECK( count_origin( net, Origin::InsertedINV ) == 4 );
  CHECK( count_origin( net, Origin::BalancingDFF ) == 1 );
  CHECK( network_metrics( net, lib ).jjs == jj0 - 4 * ( 8 - 5 ) );
  // the surviving DFF is the one next to the gate
  auto o = net.node( *net.find_po( "o" ) ).fanins[0];
  bool dff_last = false;
  for ( auto f : net.node( o ).fanins )
    dff_last |= net.node( f ).origin == Origin::BalancingDFF;
  CHECK( dff_last );
  CHECK( inv_runs_even( net ) );
  CHECK( oracle::same_function( ref, net ) );
}

TEST_CASE( "runs of two are left as DFFs" )
{
  auto net = parse_bench( "INPUT(a)\nINPUT(b)\nOUTPUT(o)\nx1 = NOT(a)\nx2 = NOT(x1)\no = AND(x2, b)\n" );
  balance_paths( net );
  auto st = merge_and_replace( net );
  CHECK( st.replaced == 0 );
  CHECK( count_origin( net, Origin::BalancingDFF ) == 2 );
}

TEST_CASE( "design registers are never touched" )
{
  auto net = parse_bench( "INPUT(a)\nOUTPUT(o)\nq1 = DFF(a)\nq2 = DFF(q1)\nq3 = DFF(q2)\no = NOT(q3)\n" );
  const auto ref = net;
  auto st = merge_and_replace( net );
  CHECK( st.replaced == 0 );
  CHECK( st.merged_gates == 0 );
  CHECK( oracle::isomorphic( ref, net ) );
}

TEST_CASE( "balancing and merge and replace on random nets" )
{
  CellLibrary lib;
  std::mt19937_64 rng( 31 );
  for ( int t = 0; t < 150; ++t )
  {
    auto net = oracle::random_network( rng, 3 + rng() % 3, 10 + rng() % 30, 1 + rng() % 3, true );
    const auto ref = net;
    convert_gates( net );
    insert_splitters( net );
    auto pending = pending_balancing_dffs( net );
    CHECK( balance_paths( net ) == pending );
    CHECK( is_balanced( net ) );
    CHECK( pending_balancing_dffs( net ) == 0 );
    auto before = network_metrics( net, lib );
    merge_and_replace( net );
    auto after = network_metrics( net, lib );
    CHECK( after.jjs <= before.jjs );
    CHECK( after.depth == before.depth );
    CHECK( is_balanced( net ) );
    CHECK( inv_runs_even( net ) );
    CHECK_NOTHROW( check_consistency( net ) );
    CHECK( oracle::same_function( ref, net ) );
  }
}
