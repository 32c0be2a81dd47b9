#include "majmap/cuts.hpp"

#include <algorithm>
#include <unordered_set>

#include "majmap/errors.hpp"

namespace majmap
{

namespace
{

bool is_cut_source( const Node& n ) { return n.kind == GateKind::PI || is_register( n ); }

bool smaller( const std::vector<NodeId>& a, const std::vector<NodeId>& b )
{
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::vector<NodeId> merge_sorted( const std::vector<NodeId>& a, const std::vector<NodeId>& b )
{
  std::vector<NodeId> r;
  r.reserve( a.size() + b.size() );
  std::set_union( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( r ) );
  return r;
}

} // namespace

void check_k( std::uint32_t k )
{
  if ( k < 2 || k > 4 )
    throw config_error( "K must be in [2, 4], got " + std::to_string( k ) );
}

CutEnumerator::CutEnumerator( const Network& net, CutOptions options ) : net_( net ), options_( options )
{
  check_k( options_.k );
  if ( options_.cap == 0 )
    throw config_error( "cut cap must be positive" );
}

const std::vector<std::vector<NodeId>>& CutEnumerator::leaf_sets( NodeId id )
{
  if ( auto it = cache_.find( id ); it != cache_.end() )
    return it->second;

  const auto& n = net_.node( id );
  std::vector<std::vector<NodeId>> sets{ { id } };
  if ( !is_cut_source( n ) )
  {
    std::vector<std::vector<NodeId>> acc{ {} };
    auto fanins = logical_fanins( net_, id );
    std::sort( fanins.begin(), fanins.end() );
    fanins.erase( std::unique( fanins.begin(), fanins.end() ), fanins.end() );
    for ( auto f : fanins )
    {
      // copy: the recursive call may rehash the cache
      auto child = leaf_sets( f );
      std::vector<std::vector<NodeId>> next;
      for ( const auto& a : acc )
      {
        for ( const auto& c : child )
        {
          auto u = merge_sorted( a, c );
          if ( u.size() <= options_.k )
            next.push_back( std::move( u ) );
        }
      }
      std::sort( next.begin(), next.end(), smaller );
      next.erase( std::unique( next.begin(), next.end() ), next.end() );
      if ( next.size() > options_.cap )
        next.resize( options_.cap );
      acc = std::move( next );
    }
    for ( auto& a : acc )
      sets.push_back( std::move( a ) );
    std::sort( sets.begin() + 1, sets.end(), smaller );
    sets.erase( std::unique( sets.begin() + 1, sets.end() ), sets.end() );
    sets.erase( std::remove( sets.begin() + 1, sets.end(), std::vector<NodeId>{ id } ), sets.end() );
    if ( sets.size() > options_.cap )
      sets.resize( options_.cap );
  }
  return cache_.emplace( id, std::move( sets ) ).first->second;
}

void CutEnumerator::invalidate( NodeId id )
{
  std::vector<NodeId> stack{ id };
  std::unordered_set<NodeId> seen{ id };
  while ( !stack.empty() )
  {
    auto v = stack.back();
    stack.pop_back();
    cache_.erase( v );
    if ( !net_.alive( v ) )
      continue;
    for ( auto c : net_.node( v ).fanouts )
    {
      if ( is_register( net_.node( c ) ) || !seen.insert( c ).second )
        continue;
      stack.push_back( c );
    }
  }
}

std::vector<NodeId> cut_interior( const Network& net, NodeId root, const std::vector<NodeId>& leaves )
{
  std::unordered_set<NodeId> leafset( leaves.begin(), leaves.end() );
  std::unordered_set<NodeId> seen{ root };
  std::vector<NodeId> stack{ root }, interior;
  while ( !stack.empty() )
  {
    auto v = stack.back();
    stack.pop_back();
    interior.push_back( v );
    for ( auto f : net.node( v ).fanins )
    {
      if ( leafset.count( f ) || !seen.insert( f ).second )
        continue;
      if ( is_cut_source( net.node( f ) ) )
        throw structural_error( "cut of #" + std::to_string( root ) + " does not cover every path" );
      stack.push_back( f );
    }
  }
  std::sort( interior.begin(), interior.end() );
  return interior;
}

std::uint16_t cut_truth_table( const Network& net, NodeId root, const std::vector<NodeId>& leaves )
{
  if ( leaves.size() > 4 )
    throw contract_violation( "truth tables are limited to 4 leaves" );
  static constexpr std::uint64_t projections[4] = { 0xAAAA, 0xCCCC, 0xF0F0, 0xFF00 };
  std::unordered_map<NodeId, std::uint64_t> value;
  for ( std::size_t i = 0; i < leaves.size(); ++i )
    value[leaves[i]] = projections[i];

  std::vector<NodeId> stack{ root };
  while ( !stack.empty() )
  {
    auto v = stack.back();
    if ( value.count( v ) )
    {
      stack.pop_back();
      continue;
    }
    const auto& n = net.node( v );
    if ( is_cut_source( n ) )
      throw structural_error( "cut of #" + std::to_string( root ) + " does not cover every path" );
    bool ready = true;
    for ( auto f : n.fanins )
    {
      if ( !value.count( f ) )
      {
        ready = false;
        stack.push_back( f );
      }
    }
    if ( !ready )
      continue;
    std::uint64_t in[4];
    std::vector<std::uint64_t> wide;
    const std::uint64_t* args = in;
    if ( n.fanins.size() <= 4 )
    {
      for ( std::size_t i = 0; i < n.fanins.size(); ++i )
        in[i] = value[n.fanins[i]];
    }
    else
    {
      for ( auto f : n.fanins )
        wide.push_back( value[f] );
      args = wide.data();
    }
    value[v] = evaluate_word( n.kind, args, n.fanins.size() );
    stack.pop_back();
  }
  auto mask = leaves.size() == 4 ? 0xFFFFu : ( ( 1u << ( 1u << leaves.size() ) ) - 1u );
  return static_cast<std::uint16_t>( value[root] & mask );
}

std::vector<Cut> CutEnumerator::cuts( NodeId root )
{
  std::vector<Cut> result;
  if ( !net_.alive( root ) )
    return result;
  const auto& rn = net_.node( root );
  if ( rn.kind == GateKind::PI || rn.kind == GateKind::PO || rn.kind == GateKind::SP || rn.kind == GateKind::DFF )
    return result;

  auto sets = leaf_sets( root );
  std::vector<std::vector<NodeId>> normalized;
  for ( const auto& s : sets )
  {
    if ( s.size() == 1 && s[0] == root )
      continue;
    // keep only leaves reachable from the root without crossing another leaf
    std::unordered_set<NodeId> leafset( s.begin(), s.end() ), reached, seen{ root };
    std::vector<NodeId> stack{ root };
    while ( !stack.empty() )
    {
      auto v = stack.back();
      stack.pop_back();
      for ( auto f : logical_fanins( net_, v ) )
      {
        if ( leafset.count( f ) )
          reached.insert( f );
        else if ( seen.insert( f ).second )
          stack.push_back( f );
      }
    }
    std::vector<NodeId> kept;
    for ( auto l : s )
    {
      if ( reached.count( l ) )
        kept.push_back( l );
    }
    if ( kept.size() >= 2 )
      normalized.push_back( std::move( kept ) );
  }
  std::sort( normalized.begin(), normalized.end(), smaller );
  normalized.erase( std::unique( normalized.begin(), normalized.end() ), normalized.end() );

  for ( auto& leaves : normalized )
  {
    auto interior = cut_interior( net_, root, leaves );
    std::unordered_set<NodeId> inside( interior.begin(), interior.end() );
    // gates with a consumer outside the cut, plus everything feeding them
    std::unordered_set<NodeId> kept;
    std::vector<NodeId> stack;
    for ( auto v : interior )
    {
      if ( v == root || net_.kind( v ) == GateKind::SP )
        continue;
      for ( auto c : logical_consumers( net_, v ) )
      {
        if ( !inside.count( c ) )
        {
          stack.push_back( v );
          break;
        }
      }
    }
    if ( !stack.empty() && !options_.shared_interior )
      continue;
    while ( !stack.empty() )
    {
      auto v = stack.back();
      stack.pop_back();
      if ( !kept.insert( v ).second )
        continue;
      for ( auto f : logical_fanins( net_, v ) )
      {
        if ( inside.count( f ) )
          stack.push_back( f );
      }
    }
    Cut cut;
    cut.root = root;
    cut.truth = cut_truth_table( net_, root, leaves );
    cut.leaves = std::move( leaves );
    cut.interior = std::move( interior );
    cut.shared.assign( kept.begin(), kept.end() );
    std::sort( cut.shared.begin(), cut.shared.end() );
    result.push_back( std::move( cut ) );
  }
  return result;
}

std::vector<Cut> enumerate_cuts( const Network& net, NodeId root, std::uint32_t k, std::size_t cap,
                                 bool shared_interior )
{
  CutEnumerator e( net, CutOptions{ k, cap, shared_interior } );
  return e.cuts( root );
}

} // namespace majmap
