#include "majmap/preprocess.hpp"

#include <algorithm>

#include "majmap/detail/tree_builder.hpp"
#include "majmap/errors.hpp"

namespace majmap
{

namespace
{

std::uint32_t local_level( const Network& net, NodeId id )
{
  const auto& n = net.node( id );
  if ( n.kind == GateKind::PI || is_register( n ) )
    return 0;
  std::uint32_t l = 0;
  for ( auto f : n.fanins )
    l = std::max( l, net.level( f ) );
  return is_clocked( n.kind ) ? l + 1 : l;
}

struct Rule
{
  GateFamily family;
  bool invert;
};

std::optional<Rule> rule_for( GateKind k )
{
  switch ( k )
  {
  case GateKind::NAND: return Rule{ GateFamily::And, true };
  case GateKind::NOR: return Rule{ GateFamily::Or, true };
  case GateKind::XNOR: return Rule{ GateFamily::Xor, true };
  case GateKind::AND_WIDE: return Rule{ GateFamily::And, false };
  case GateKind::OR_WIDE: return Rule{ GateFamily::Or, false };
  case GateKind::XOR_WIDE: return Rule{ GateFamily::Xor, false };
  default: return std::nullopt;
  }
}

} // namespace

ConversionStats convert_gates( Network& net )
{
  ConversionStats stats;
  compute_levels( net );
  for ( auto id : topological_order( net ) )
  {
    const auto kind = net.kind( id );
    if ( !is_library_kind( kind ) )
    {
      auto rule = rule_for( kind );
      if ( !rule )
        throw structural_error( "no conversion rule for " + std::string( kind_name( kind ) ) );
      auto name = net.node( id ).name;
      std::vector<detail::LeveledOperand<NodeId>> ops;
      for ( auto f : net.node( id ).fanins )
        ops.push_back( { f, net.level( f ) } );

      auto emit = [&]( const std::vector<NodeId>& in ) {
        auto g = net.create_node( family_kind( rule->family, static_cast<std::uint32_t>( in.size() ) ), in );
        net.set_level( g, local_level( net, g ) );
        return g;
      };
      auto root = detail::build_tree( std::move( ops ), family_max_fanin( rule->family ), emit ).op;
      if ( rule->invert )
      {
        root = net.create_node( GateKind::INV, { root } );
        net.set_level( root, local_level( net, root ) );
        ++stats.inverters;
      }
      net.set_name( root, name );
      net.redirect_fanouts( id, root );
      net.remove_node( id );
      ++stats.converted;
      continue;
    }
    net.set_level( id, local_level( net, id ) );
  }
  stats.dead_removed = remove_dead_nodes( net );
  compute_levels( net );
  return stats;
}

namespace
{

struct EdgeRef
{
  NodeId consumer;
  std::size_t index;
};

// Terminal consumer edges below `driver` (through its splitter tree) and the tree's SPs in preorder.
void collect_tree( const Network& net, NodeId driver, std::vector<EdgeRef>& edges, std::vector<NodeId>& sps )
{
  std::vector<NodeId> seen;
  for ( auto c : net.node( driver ).fanouts )
  {
    if ( std::find( seen.begin(), seen.end(), c ) != seen.end() )
      continue;
    seen.push_back( c );
    const auto& cn = net.node( c );
    if ( cn.kind == GateKind::SP )
    {
      sps.push_back( c );
      collect_tree( net, c, edges, sps );
      continue;
    }
    for ( std::size_t i = 0; i < cn.fanins.size(); ++i )
    {
      if ( cn.fanins[i] == driver )
        edges.push_back( { c, i } );
    }
  }
}

bool tree_is_legal( const Network& net, NodeId driver, const std::vector<NodeId>& sps )
{
  if ( net.node( driver ).fanouts.size() > 1 )
    return false;
  return std::all_of( sps.begin(), sps.end(), [&]( NodeId s ) { return net.node( s ).fanouts.size() == 2; } );
}

void attach( Network& net, NodeId parent, const EdgeRef* first, std::size_t count )
{
  if ( count == 1 )
  {
    net.set_fanin( first->consumer, first->index, parent );
    return;
  }
  auto sp = net.create_node( GateKind::SP, { parent }, Origin::InsertedSplitter );
  auto left = ( count + 1 ) / 2;
  attach( net, sp, first, left );
  attach( net, sp, first + left, count - left );
}

} // namespace

SplitterStats insert_splitters( Network& net )
{
  SplitterStats stats;
  std::vector<NodeId> drivers;
  net.foreach_node( [&]( const Node& n ) {
    if ( n.kind != GateKind::SP && n.kind != GateKind::PO )
      drivers.push_back( n.id );
  } );

  for ( auto d : drivers )
  {
    std::vector<EdgeRef> edges;
    std::vector<NodeId> sps;
    collect_tree( net, d, edges, sps );
    if ( tree_is_legal( net, d, sps ) )
      continue;
    // flatten: every terminal edge reads the driver directly, then drop the old tree
    for ( const auto& e : edges )
      net.set_fanin( e.consumer, e.index, d );
    for ( auto it = sps.rbegin(); it != sps.rend(); ++it )
      net.remove_node( *it );
    if ( edges.size() > 1 )
      attach( net, d, edges.data(), edges.size() );
    ++stats.rebuilt;
  }

  net.foreach_node( [&]( const Node& n ) { stats.splitters += n.kind == GateKind::SP ? 1 : 0; } );
  compute_levels( net );
  return stats;
}

std::size_t required_splitters( const Network& net )
{
  std::size_t total = 0;
  net.foreach_node( [&]( const Node& n ) {
    if ( n.kind == GateKind::SP || n.kind == GateKind::PO )
      return;
    auto c = logical_consumers( net, n.id ).size();
    total += c > 1 ? c - 1 : 0;
  } );
  return total;
}

} // namespace majmap
