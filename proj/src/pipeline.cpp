#include "majmap/pipeline.hpp"

namespace majmap
{

PipelineResult run_pipeline( const Network& input, const CellLibrary& lib, const PipelineOptions& options )
{
  PipelineResult r;
  Network net = input;
  auto record = [&]( const char* phase ) { r.phases.push_back( { phase, network_metrics( net, lib ) } ); };

  r.conversion = convert_gates( net );
  record( "convert" );
  r.splitters = insert_splitters( net );
  record( "splitters" );
  if ( options.map )
  {
    r.mapping = map_network( net, lib, options.mapper );
    record( "map" );
  }
  r.balancing_dffs_inserted = balance_paths( net );
  record( "balance" );
  if ( options.merge_replace )
  {
    r.merge_replace = merge_and_replace( net );
    record( "merge_replace" );
  }
  r.metrics = network_metrics( net, lib );
  if ( options.verify )
    r.verification = check_equivalence( input, net, options.equivalence );
  r.output = std::move( net );
  return r;
}

Network baseline_network( const Network& input )
{
  Network net = input;
  convert_gates( net );
  insert_splitters( net );
  balance_paths( net );
  return net;
}

} // namespace majmap
