#include "majmap/network.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_set>

#include "majmap/errors.hpp"

namespace majmap
{

namespace
{

constexpr std::array<std::string_view, 5> origin_names = { "user", "user_dff", "balancing_dff", "splitter", "inserted_inv" };

std::string describe( const Node& n )
{
  std::string s( kind_name( n.kind ) );
  s += " #" + std::to_string( n.id );
  if ( !n.name.empty() )
    s += " '" + n.name + "'";
  return s;
}

void erase_one( std::vector<NodeId>& v, NodeId x )
{
  auto it = std::find( v.begin(), v.end(), x );
  if ( it != v.end() )
    v.erase( it );
}

} // namespace

std::string_view origin_name( Origin o ) noexcept { return origin_names[static_cast<std::size_t>( o )]; }

std::optional<Origin> origin_from_name( std::string_view name ) noexcept
{
  for ( std::size_t i = 0; i < origin_names.size(); ++i )
  {
    if ( origin_names[i] == name )
      return static_cast<Origin>( i );
  }
  return std::nullopt;
}

NodeId Network::push( GateKind kind, Origin origin, std::string name )
{
  Node n;
  n.id = static_cast<NodeId>( nodes_.size() );
  n.kind = kind;
  n.origin = origin;
  n.name = std::move( name );
  nodes_.push_back( std::move( n ) );
  ++live_;
  return nodes_.back().id;
}

NodeId Network::create_pi( std::string name )
{
  auto id = push( GateKind::PI, Origin::UserLogic, std::move( name ) );
  pis_.push_back( id );
  return id;
}

NodeId Network::create_po( NodeId driver, std::string name )
{
  if ( !alive( driver ) )
    throw structural_error( "PO '" + name + "' bound to a dead node" );
  auto id = push( GateKind::PO, Origin::UserLogic, std::move( name ) );
  add_fanin( id, driver );
  pos_.push_back( id );
  return id;
}

NodeId Network::create_node( GateKind kind, std::span<const NodeId> fanins, Origin origin, std::string name )
{
  if ( kind == GateKind::PI || kind == GateKind::PO )
    throw contract_violation( "use create_pi/create_po for terminals" );
  if ( !arity_ok( kind, fanins.size() ) )
    throw structural_error( std::string( kind_name( kind ) ) + " with " + std::to_string( fanins.size() ) +
                            " fan-ins" );
  for ( auto f : fanins )
  {
    if ( !alive( f ) )
      throw structural_error( "fan-in #" + std::to_string( f ) + " is not a live node" );
    if ( nodes_[f].kind == GateKind::PO )
      throw structural_error( "a PO cannot drive other nodes" );
  }
  auto id = push( kind, origin, std::move( name ) );
  for ( auto f : fanins )
    add_fanin( id, f );
  return id;
}

NodeId Network::create_unwired( GateKind kind, Origin origin, std::string name )
{
  if ( kind == GateKind::PI || kind == GateKind::PO )
    throw contract_violation( "use create_pi/create_po for terminals" );
  return push( kind, origin, std::move( name ) );
}

void Network::add_fanin( NodeId consumer, NodeId driver )
{
  if ( !alive( consumer ) || !alive( driver ) )
    throw structural_error( "edge between dead nodes" );
  at( consumer ).fanins.push_back( driver );
  at( driver ).fanouts.push_back( consumer );
}

void Network::set_fanin( NodeId consumer, std::size_t index, NodeId driver )
{
  auto& c = at( consumer );
  if ( index >= c.fanins.size() )
    throw contract_violation( "fan-in index out of range" );
  if ( !alive( driver ) )
    throw structural_error( "fan-in #" + std::to_string( driver ) + " is not a live node" );
  erase_one( at( c.fanins[index] ).fanouts, consumer );
  c.fanins[index] = driver;
  at( driver ).fanouts.push_back( consumer );
}

void Network::redirect_fanouts( NodeId from, NodeId to )
{
  if ( from == to )
    return;
  if ( !alive( to ) )
    throw structural_error( "redirect target is not a live node" );
  auto consumers = at( from ).fanouts;
  std::sort( consumers.begin(), consumers.end() );
  consumers.erase( std::unique( consumers.begin(), consumers.end() ), consumers.end() );
  for ( auto c : consumers )
  {
    for ( auto& f : at( c ).fanins )
    {
      if ( f == from )
      {
        f = to;
        at( to ).fanouts.push_back( c );
      }
    }
  }
  at( from ).fanouts.clear();
}

void Network::remove_node( NodeId id )
{
  auto& n = at( id );
  if ( !n.alive )
    return;
  if ( n.kind == GateKind::PI || n.kind == GateKind::PO )
    throw contract_violation( "PIs and POs cannot be removed" );
  if ( !n.fanouts.empty() )
    throw contract_violation( "removing " + describe( n ) + " which still has fan-outs" );
  for ( auto f : n.fanins )
    erase_one( at( f ).fanouts, id );
  n.fanins.clear();
  n.alive = false;
  --live_;
}

std::vector<NodeId> Network::registers() const
{
  std::vector<NodeId> r;
  for ( const auto& n : nodes_ )
  {
    if ( n.alive && is_register( n ) )
      r.push_back( n.id );
  }
  return r;
}

std::optional<NodeId> Network::find_pi( std::string_view name ) const
{
  for ( auto id : pis_ )
  {
    if ( nodes_[id].name == name )
      return id;
  }
  return std::nullopt;
}

std::optional<NodeId> Network::find_po( std::string_view name ) const
{
  for ( auto id : pos_ )
  {
    if ( nodes_[id].name == name )
      return id;
  }
  return std::nullopt;
}

std::optional<NodeId> Network::find_node( std::string_view name ) const
{
  for ( const auto& n : nodes_ )
  {
    if ( n.alive && n.kind != GateKind::PO && n.name == name )
      return n.id;
  }
  return std::nullopt;
}

std::vector<NodeId> topological_order( const Network& net )
{
  std::vector<std::uint32_t> pending( net.capacity(), 0 );
  std::deque<NodeId> ready;
  net.foreach_node( [&]( const Node& n ) {
    pending[n.id] = is_register( n ) ? 0u : static_cast<std::uint32_t>( n.fanins.size() );
    if ( pending[n.id] == 0 )
      ready.push_back( n.id );
  } );

  std::vector<NodeId> order;
  order.reserve( net.size() );
  while ( !ready.empty() )
  {
    auto id = ready.front();
    ready.pop_front();
    order.push_back( id );
    for ( auto c : net.node( id ).fanouts )
    {
      if ( is_register( net.node( c ) ) )
        continue;
      if ( --pending[c] == 0 )
        ready.push_back( c );
    }
  }
  if ( order.size() != net.size() )
  {
    std::string where;
    net.foreach_node( [&]( const Node& n ) {
      if ( where.empty() && pending[n.id] != 0 )
        where = describe( n );
    } );
    throw structural_error( "combinational cycle through " + where );
  }
  return order;
}

std::vector<std::uint32_t> levelize( const Network& net )
{
  std::vector<std::uint32_t> level( net.capacity(), 0 );
  for ( auto id : topological_order( net ) )
  {
    const auto& n = net.node( id );
    std::uint32_t l = 0;
    if ( n.kind != GateKind::PI && !is_register( n ) )
    {
      for ( auto f : n.fanins )
        l = std::max( l, level[f] );
      if ( is_clocked( n.kind ) )
        ++l;
    }
    level[id] = l;
  }
  return level;
}

std::vector<std::uint32_t> compute_levels( Network& net )
{
  auto level = levelize( net );
  for ( NodeId id = 0; id < net.capacity(); ++id )
  {
    if ( net.alive( id ) )
      net.set_level( id, level[id] );
  }
  return level;
}

void check_consistency( const Network& net )
{
  net.foreach_node( [&]( const Node& n ) {
    if ( !arity_ok( n.kind, n.fanins.size() ) )
      throw structural_error( describe( n ) + " has " + std::to_string( n.fanins.size() ) + " fan-ins" );
    if ( n.kind == GateKind::PO && !n.fanouts.empty() )
      throw structural_error( describe( n ) + " drives other nodes" );
    for ( auto f : n.fanins )
    {
      if ( !net.alive( f ) )
        throw structural_error( describe( n ) + " reads dead node #" + std::to_string( f ) );
      const auto& fo = net.node( f ).fanouts;
      auto a = std::count( fo.begin(), fo.end(), n.id );
      auto b = std::count( n.fanins.begin(), n.fanins.end(), f );
      if ( a != b )
        throw structural_error( "asymmetric edge " + describe( net.node( f ) ) + " -> " + describe( n ) );
    }
    for ( auto c : n.fanouts )
    {
      if ( !net.alive( c ) )
        throw structural_error( describe( n ) + " feeds dead node #" + std::to_string( c ) );
      const auto& fi = net.node( c ).fanins;
      if ( std::find( fi.begin(), fi.end(), n.id ) == fi.end() )
        throw structural_error( "asymmetric edge " + describe( n ) + " -> " + describe( net.node( c ) ) );
    }
  } );
  (void)topological_order( net );
}

NodeId logical_driver( const Network& net, NodeId id )
{
  while ( net.node( id ).kind == GateKind::SP )
    id = net.node( id ).fanins[0];
  return id;
}

std::vector<NodeId> logical_fanins( const Network& net, NodeId id )
{
  std::vector<NodeId> r;
  for ( auto f : net.node( id ).fanins )
    r.push_back( logical_driver( net, f ) );
  return r;
}

std::vector<NodeId> logical_consumers( const Network& net, NodeId id )
{
  std::vector<NodeId> r;
  std::vector<NodeId> stack( net.node( id ).fanouts.rbegin(), net.node( id ).fanouts.rend() );
  while ( !stack.empty() )
  {
    auto c = stack.back();
    stack.pop_back();
    const auto& n = net.node( c );
    if ( n.kind == GateKind::SP )
      stack.insert( stack.end(), n.fanouts.rbegin(), n.fanouts.rend() );
    else
      r.push_back( c );
  }
  return r;
}

namespace
{

bool removable( const Node& n )
{
  return n.alive && n.kind != GateKind::PI && n.kind != GateKind::PO && !is_register( n ) && n.fanouts.empty();
}

std::size_t sweep( Network& net, std::vector<NodeId> work )
{
  std::size_t removed = 0;
  while ( !work.empty() )
  {
    auto id = work.back();
    work.pop_back();
    if ( !net.alive( id ) || !removable( net.node( id ) ) )
      continue;
    auto fanins = net.node( id ).fanins;
    net.remove_node( id );
    ++removed;
    work.insert( work.end(), fanins.begin(), fanins.end() );
  }
  return removed;
}

} // namespace

std::size_t remove_dead_nodes( Network& net )
{
  std::vector<NodeId> work;
  net.foreach_node( [&]( const Node& n ) { work.push_back( n.id ); } );
  std::reverse( work.begin(), work.end() );
  return sweep( net, std::move( work ) );
}

ReplaceResult replace_cone( Network& net, NodeId root, std::span<const NodeId> old_interior, const Fragment& fragment,
                            std::span<const NodeId> leaf_binding )
{
  if ( !net.alive( root ) )
    throw structural_error( "replace_cone: root is not live" );
  if ( leaf_binding.size() != fragment.num_leaves )
    throw structural_error( "replace_cone: binding/leaf count mismatch" );

  std::unordered_set<NodeId> interior( old_interior.begin(), old_interior.end() );
  interior.insert( root );
  for ( auto b : leaf_binding )
  {
    if ( !net.alive( b ) )
      throw structural_error( "replace_cone: leaf bound to dead node #" + std::to_string( b ) );
    if ( interior.count( b ) )
      throw structural_error( "replace_cone: leaf bound inside the replaced cone (#" + std::to_string( b ) + ")" );
  }

  // a leaf in the root's combinational fan-out would close a cycle
  {
    std::unordered_set<NodeId> leaves( leaf_binding.begin(), leaf_binding.end() );
    std::vector<NodeId> stack{ root };
    std::unordered_set<NodeId> seen{ root };
    while ( !stack.empty() )
    {
      auto id = stack.back();
      stack.pop_back();
      for ( auto c : net.node( id ).fanouts )
      {
        if ( is_register( net.node( c ) ) || !seen.insert( c ).second )
          continue;
        if ( leaves.count( c ) )
          throw structural_error( "replace_cone: leaf #" + std::to_string( c ) + " lies in the root's fan-out" );
        stack.push_back( c );
      }
    }
  }

  for ( const auto& g : fragment.gates )
  {
    if ( !arity_ok( g.kind, g.fanins.size() ) )
      throw structural_error( "replace_cone: fragment gate arity mismatch" );
  }

  // identical single gate: nothing to do
  if ( fragment.gates.size() == 1 && !fragment.output.is_leaf && fragment.output.index == 0 &&
       fragment.gates[0].kind == net.kind( root ) )
  {
    auto current = logical_fanins( net, root );
    const auto& g = fragment.gates[0];
    bool same = current.size() == g.fanins.size();
    for ( std::size_t i = 0; same && i < g.fanins.size(); ++i )
      same = g.fanins[i].is_leaf && logical_driver( net, leaf_binding[g.fanins[i].index] ) == current[i];
    if ( same )
      return ReplaceResult{ false, root, 0, 0 };
  }

  std::vector<NodeId> created;
  auto resolve = [&]( const FragmentRef& r ) {
    if ( r.is_leaf )
    {
      if ( r.index >= leaf_binding.size() )
        throw structural_error( "replace_cone: fragment leaf index out of range" );
      return leaf_binding[r.index];
    }
    if ( r.index >= created.size() )
      throw structural_error( "replace_cone: fragment gate refers forward" );
    return created[r.index];
  };
  for ( const auto& g : fragment.gates )
  {
    std::vector<NodeId> fi;
    for ( const auto& r : g.fanins )
      fi.push_back( resolve( r ) );
    created.push_back( net.create_node( g.kind, fi ) );
  }
  auto out = resolve( fragment.output );
  if ( !fragment.output.is_leaf && !net.node( root ).name.empty() )
    net.set_name( out, net.node( root ).name );

  net.redirect_fanouts( root, out );

  std::vector<NodeId> work( created.begin(), created.end() );
  work.insert( work.end(), interior.begin(), interior.end() );
  std::sort( work.begin(), work.end() );
  auto removed = sweep( net, std::move( work ) );
  std::size_t added = 0;
  for ( auto c : created )
    added += net.alive( c ) ? 1 : 0;

  compute_levels( net );
  return ReplaceResult{ true, out, added, removed };
}

} // namespace majmap
