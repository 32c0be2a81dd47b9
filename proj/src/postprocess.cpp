#include "majmap/postprocess.hpp"

#include <algorithm>

namespace majmap
{

namespace
{

bool is_balancing_dff( const Node& n ) { return n.kind == GateKind::DFF && n.origin == Origin::BalancingDFF; }

bool balanced_gate( const Node& n ) { return is_clocked( n.kind ) && n.fanins.size() >= 2; }

// Balancing DFFs strictly in series right before `consumer` on edge `index`.
std::size_t run_length( const Network& net, NodeId consumer, std::size_t index )
{
  std::size_t len = 0;
  auto d = net.node( consumer ).fanins[index];
  while ( is_balancing_dff( net.node( d ) ) && net.node( d ).fanouts.size() == 1 )
  {
    ++len;
    d = net.node( d ).fanins[0];
  }
  return len;
}

} // namespace

std::size_t balance_paths( Network& net )
{
  auto level = compute_levels( net );
  std::size_t inserted = 0;
  std::vector<NodeId> gates;
  net.foreach_node( [&]( const Node& n ) {
    if ( balanced_gate( n ) )
      gates.push_back( n.id );
  } );
  for ( auto g : gates )
  {
    std::uint32_t lmax = 0;
    for ( auto f : net.node( g ).fanins )
      lmax = std::max( lmax, level[f] );
    for ( std::size_t i = 0; i < net.node( g ).fanins.size(); ++i )
    {
      auto f = net.node( g ).fanins[i];
      auto need = lmax - level[f];
      if ( !need )
        continue;
      auto tail = f;
      for ( std::uint32_t k = 0; k < need; ++k )
        tail = net.create_node( GateKind::DFF, { tail }, Origin::BalancingDFF );
      // the chain took a second fan-out of f; route edge i through it instead
      net.set_fanin( g, i, tail );
      inserted += need;
    }
  }
  compute_levels( net );
  return inserted;
}

bool is_balanced( const Network& net )
{
  auto level = levelize( net );
  bool ok = true;
  net.foreach_node( [&]( const Node& n ) {
    if ( !ok || !balanced_gate( n ) )
      return;
    for ( auto f : n.fanins )
      ok = ok && level[f] == level[n.fanins[0]];
  } );
  return ok;
}

MergeReplaceStats merge_and_replace( Network& net )
{
  MergeReplaceStats stats;

  for ( auto g : topological_order( net ) )
  {
    const auto& n = net.node( g );
    if ( !is_clocked( n.kind ) || n.kind == GateKind::DFF || n.fanins.empty() || n.fanouts.empty() )
      continue;
    std::size_t y = ~std::size_t{ 0 };
    for ( std::size_t i = 0; i < n.fanins.size(); ++i )
      y = std::min( y, run_length( net, g, i ) );
    if ( y == 0 )
      continue;

    const auto arity = n.fanins.size();
    for ( std::size_t i = 0; i < arity; ++i )
    {
      for ( std::size_t k = 0; k < y; ++k )
      {
        auto d = net.node( g ).fanins[i];
        net.set_fanin( g, i, net.node( d ).fanins[0] );
        net.remove_node( d );
      }
    }
    auto consumers = net.node( g ).fanouts;
    auto tail = g;
    for ( std::size_t k = 0; k < y; ++k )
      tail = net.create_node( GateKind::DFF, { tail }, Origin::BalancingDFF );
    // move the original consumers (not the new chain head) behind the chain
    for ( auto c : consumers )
    {
      for ( std::size_t i = 0; i < net.node( c ).fanins.size(); ++i )
      {
        if ( net.node( c ).fanins[i] == g )
          net.set_fanin( c, i, tail );
      }
    }
    ++stats.merged_gates;
    stats.dffs_removed += y * ( arity - 1 );
  }

  // replace
  std::vector<NodeId> heads;
  net.foreach_node( [&]( const Node& n ) {
    if ( is_balancing_dff( n ) && !is_balancing_dff( net.node( n.fanins[0] ) ) )
      heads.push_back( n.id );
  } );
  for ( auto h : heads )
  {
    std::vector<NodeId> run{ h };
    while ( true )
    {
      const auto& last = net.node( run.back() );
      if ( last.fanouts.size() != 1 || !is_balancing_dff( net.node( last.fanouts[0] ) ) )
        break;
      run.push_back( last.fanouts[0] );
    }
    if ( run.size() <= 2 )
      continue;
    auto r = run.size() - run.size() % 2;
    for ( std::size_t k = 0; k < r; ++k )
    {
      net.set_kind( run[k], GateKind::INV );
      net.set_origin( run[k], Origin::InsertedINV );
    }
    stats.replaced += r;
  }

  compute_levels( net );
  return stats;
}

} // namespace majmap
