#include "majmap/mapper.hpp"

#include <algorithm>
#include <random>

#include "majmap/errors.hpp"
#include "majmap/metrics.hpp"
#include "majmap/preprocess.hpp"

namespace majmap
{

namespace
{

bool mappable( GateKind k )
{
  return is_library_kind( k ) && k != GateKind::PI && k != GateKind::PO && k != GateKind::SP && k != GateKind::DFF;
}

} // namespace

std::vector<RewriteChoice> ranked_candidates( const Network& net, NodeId node, CutEnumerator& cuts,
                                              const CellLibrary& lib, const MapperOptions& options )
{
  std::vector<RewriteChoice> out;
  if ( !net.alive( node ) || !mappable( net.kind( node ) ) )
    return out;

  for ( auto& cut : cuts.cuts( node ) )
  {
    std::vector<std::uint32_t> levels;
    for ( auto l : cut.leaves )
      levels.push_back( net.level( l ) );
    const auto original = cost_original_cut( net, cut, lib );

    auto consider = [&]( std::uint16_t truth, bool complemented ) {
      auto cover = minimize( truth, cut.arity(), options.minimize );
      auto cand = build_candidate( cover, levels, lib, complemented );
      if ( !cand )
        return;
      auto gain = original - cand->pnd;
      if ( gain <= 0 )
        return;
      out.push_back( RewriteChoice{ cut, std::move( *cand ), original, gain } );
    };
    consider( cut.truth, false );
    if ( options.complement )
      consider( static_cast<std::uint16_t>( ~cut.truth & full_mask( cut.arity() ) ), true );
  }

  if ( options.seed )
  {
    std::mt19937_64 rng( options.seed ^ node );
    std::shuffle( out.begin(), out.end(), rng );
  }
  std::stable_sort( out.begin(), out.end(), []( const RewriteChoice& a, const RewriteChoice& b ) {
    if ( a.improvement != b.improvement )
      return a.improvement > b.improvement;
    if ( a.candidate.jjs != b.candidate.jjs )
      return a.candidate.jjs < b.candidate.jjs;
    if ( a.candidate.local_depth != b.candidate.local_depth )
      return a.candidate.local_depth < b.candidate.local_depth;
    return a.candidate.balancing_dffs < b.candidate.balancing_dffs;
  } );
  return out;
}

std::optional<RewriteChoice> representative_cut( const Network& net, NodeId node, CutEnumerator& cuts,
                                                 const CellLibrary& lib, const MapperOptions& options )
{
  auto ranked = ranked_candidates( net, node, cuts, lib, options );
  if ( ranked.empty() )
    return std::nullopt;
  return std::move( ranked.front() );
}

MapStats map_network( Network& net, const CellLibrary& lib, const MapperOptions& options )
{
  check_k( options.k );
  if ( options.max_passes == 0 )
    throw config_error( "max-passes must be at least 1" );

  MapStats stats;
  compute_levels( net );
  CutEnumerator cuts( net, CutOptions{ options.k, options.cut_cap, options.shared_cuts } );
  auto current = estimated_pnd( net, lib );
  stats.estimated_pnd_before = current;

  for ( std::uint32_t pass = 0; pass < options.max_passes; ++pass )
  {
    ++stats.passes;
    bool changed = false;
    for ( auto id : topological_order( net ) )
    {
      if ( !net.alive( id ) || !mappable( net.kind( id ) ) )
        continue;
      for ( const auto& choice : ranked_candidates( net, id, cuts, lib, options ) )
      {
        Network trial = net;
        auto res = replace_cone( trial, id, choice.cut.interior, choice.candidate.fragment, choice.cut.leaves );
        if ( !res.changed )
          continue;
        insert_splitters( trial );
        auto est = estimated_pnd( trial, lib );
        if ( options.global_guard && est >= current )
        {
          ++stats.guard_rejections;
          continue;
        }
        net = std::move( trial );
        current = est;
        cuts.invalidate( res.new_root );
        ++stats.rewrites;
        changed = true;
        break;
      }
    }
    if ( !changed )
      break;
  }
  stats.estimated_pnd_after = current;
  return stats;
}

} // namespace majmap
