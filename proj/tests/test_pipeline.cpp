#include <doctest.h>

#include "majmap/bench_io.hpp"
#include "majmap/pipeline.hpp"
#include "oracles.hpp"

using namespace majmap;

TEST_CASE( "majority example through the whole pipeline" )
{
  CellLibrary lib;
  auto input = read_bench_file( MAJMAP_TEST_DATA "/majority.bench" );
  auto r = run_pipeline( input, lib );
  CHECK( r.metrics.pnd == 52 );
  CHECK( r.metrics.depth == 2 );
  CHECK( r.metrics.balancing_dffs == 0 );
  CHECK( r.metrics.splitters == 0 );
  REQUIRE( r.verification );
  CHECK( r.verification->equivalent );
  CHECK( r.verification->exhaustive );
  std::vector<std::string> names;
  for ( const auto& p : r.phases )
    names.push_back( p.phase );
  CHECK( names == std::vector<std::string>{ "convert", "splitters", "map", "balance", "merge_replace" } );
  CHECK( oracle::same_function( input, r.output ) );
}

TEST_CASE( "the input is not modified" )
{
  CellLibrary lib;
  const auto input = read_bench_file( MAJMAP_BENCHMARKS "/c17.bench" );
  auto copy = input;
  run_pipeline( copy, lib );
  CHECK( oracle::isomorphic( input, copy ) );
}

TEST_CASE( "without mapping the pipeline is the baseline" )
{
  CellLibrary lib;
  auto input = read_bench_file( MAJMAP_BENCHMARKS "/c17.bench" );
  PipelineOptions opt;
  opt.map = false;
  opt.merge_replace = false;
  auto r = run_pipeline( input, lib, opt );
  auto b1 = baseline_network( input );
  CHECK( network_metrics( b1, lib ) == r.metrics );
  CHECK( is_balanced( b1 ) );
  CHECK( r.mapping.rewrites == 0 );
}

TEST_CASE( "mapped c17 beats the baseline" )
{
  CellLibrary lib;
  auto input = read_bench_file( MAJMAP_BENCHMARKS "/c17.bench" );
  auto r = run_pipeline( input, lib );
  auto b1 = network_metrics( baseline_network( input ), lib );
  CHECK( r.metrics.pnd < b1.pnd );
  CHECK( r.metrics.jjs < b1.jjs );
  CHECK( r.verification->equivalent );
  CHECK( is_balanced( r.output ) );
}

TEST_CASE( "sequential designs keep their registers" )
{
  CellLibrary lib;
  auto input = read_bench_file( MAJMAP_BENCHMARKS "/s27.bench" );
  auto r = run_pipeline( input, lib );
  CHECK( r.metrics.user_dffs == 3 );
  CHECK( r.verification->equivalent );
}
