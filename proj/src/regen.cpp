#include "majmap/regen.hpp"

#include <algorithm>
#include <limits>

#include "majmap/detail/tree_builder.hpp"
#include "majmap/errors.hpp"

namespace majmap
{

namespace
{

struct Builder
{
  Fragment frag;
  std::vector<std::uint32_t> leaf_level;
  std::vector<std::uint32_t> gate_level;
  std::vector<std::optional<FragmentRef>> inverted_leaf;

  std::uint32_t level( const FragmentRef& r ) const
  {
    return r.is_leaf ? leaf_level[r.index] : gate_level[r.index];
  }

  FragmentRef gate( GateKind kind, std::vector<FragmentRef> fanins )
  {
    std::uint32_t l = 0;
    for ( const auto& f : fanins )
      l = std::max( l, level( f ) );
    frag.gates.push_back( FragmentGate{ kind, std::move( fanins ) } );
    gate_level.push_back( l + 1 );
    return FragmentRef{ false, static_cast<std::uint32_t>( frag.gates.size() - 1 ) };
  }

  FragmentRef inverted( std::uint32_t leaf )
  {
    if ( !inverted_leaf[leaf] )
      inverted_leaf[leaf] = gate( GateKind::INV, { FragmentRef{ true, leaf } } );
    return *inverted_leaf[leaf];
  }

  FragmentRef tree( GateFamily family, const std::vector<FragmentRef>& ops )
  {
    std::vector<detail::LeveledOperand<FragmentRef>> in;
    for ( const auto& o : ops )
      in.push_back( { o, level( o ) } );
    auto emit = [&]( const std::vector<FragmentRef>& g ) {
      return gate( family_kind( family, static_cast<std::uint32_t>( g.size() ) ), g );
    };
    return detail::build_tree( std::move( in ), family_max_fanin( family ), emit ).op;
  }
};

} // namespace

std::optional<Candidate> build_candidate( const Cover& cover, std::span<const std::uint32_t> leaf_levels,
                                          const CellLibrary& lib, bool complement_output )
{
  if ( cover.arity != leaf_levels.size() )
    throw contract_violation( "cover arity does not match the leaf count" );
  for ( const auto& imp : cover.implicants )
  {
    if ( imp.arity() != cover.arity )
      throw contract_violation( "implicant arity does not match the cover" );
  }
  if ( cover.implicants.empty() )
    return std::nullopt;

  Builder b;
  b.frag.num_leaves = cover.arity;
  b.leaf_level.assign( leaf_levels.begin(), leaf_levels.end() );
  b.inverted_leaf.resize( cover.arity );

  std::vector<FragmentRef> terms;
  for ( const auto& imp : cover.implicants )
  {
    std::vector<FragmentRef> ops;
    for ( std::uint32_t i = 0; i < imp.arity(); ++i )
    {
      if ( imp.cells[i] == '1' )
        ops.push_back( FragmentRef{ true, i } );
      else if ( imp.cells[i] == '0' )
        ops.push_back( b.inverted( i ) );
    }
    for ( const auto& g : imp.groups )
    {
      std::vector<FragmentRef> in;
      for ( auto p : g.positions )
        in.push_back( FragmentRef{ true, p } );
      if ( g.marker == 'm' )
        ops.push_back( b.gate( GateKind::MAJ3, in ) );
      else if ( g.marker == 'x' )
        ops.push_back( b.gate( GateKind::XOR2, in ) );
      else
        ops.push_back( b.gate( GateKind::INV, { b.gate( GateKind::XOR2, in ) } ) );
    }
    if ( ops.empty() )
      return std::nullopt; // tautology term: constant 1
    terms.push_back( ops.size() == 1 ? ops[0] : b.tree( GateFamily::And, ops ) );
  }
  auto out = terms.size() == 1 ? terms[0] : b.tree( GateFamily::Or, terms );
  if ( complement_output )
    out = b.gate( GateKind::INV, { out } );
  b.frag.output = out;

  Candidate c;
  c.cover = cover;
  c.complemented = complement_output;
  std::vector<std::uint32_t> leaf_uses( cover.arity, 0 ), gate_uses( b.frag.gates.size(), 0 );
  std::int64_t cells = 0;
  for ( std::size_t g = 0; g < b.frag.gates.size(); ++g )
  {
    const auto& gate = b.frag.gates[g];
    cells += lib.jj( gate.kind );
    std::uint32_t lmax = 0;
    for ( const auto& f : gate.fanins )
      lmax = std::max( lmax, b.level( f ) );
    for ( const auto& f : gate.fanins )
    {
      c.balancing_dffs += lmax - b.level( f );
      ( f.is_leaf ? leaf_uses[f.index] : gate_uses[f.index] ) += 1;
    }
  }
  for ( auto u : leaf_uses )
    c.splitters += u > 1 ? u - 1 : 0;
  for ( auto u : gate_uses )
    c.splitters += u > 1 ? u - 1 : 0;

  std::uint32_t min_leaf = std::numeric_limits<std::uint32_t>::max();
  for ( auto l : leaf_levels )
    min_leaf = std::min( min_leaf, l );
  c.root_level = b.level( out );
  c.local_depth = c.root_level - min_leaf;
  c.jjs = cells + static_cast<std::int64_t>( c.balancing_dffs ) * lib.jj( GateKind::DFF ) +
          static_cast<std::int64_t>( c.splitters ) * lib.jj( GateKind::SP );
  c.pnd = c.jjs * c.local_depth;
  c.fragment = std::move( b.frag );
  return c;
}

std::int64_t cost_original_cut( const Network& net, const Cut& cut, const CellLibrary& lib )
{
  std::int64_t jj = 0;
  for ( auto v : cut.interior )
  {
    if ( std::binary_search( cut.shared.begin(), cut.shared.end(), v ) )
      continue; // stays in the network after a rewrite
    const auto& n = net.node( v );
    jj += lib.jj( n.kind );
    // balancing DFFs this interior gate will need, the same charge a candidate pays
    if ( is_clocked( n.kind ) && n.fanins.size() >= 2 )
    {
      std::uint32_t lmax = 0;
      for ( auto f : n.fanins )
        lmax = std::max( lmax, net.level( f ) );
      for ( auto f : n.fanins )
        jj += static_cast<std::int64_t>( lmax - net.level( f ) ) * lib.jj( GateKind::DFF );
    }
  }
  std::uint32_t min_leaf = std::numeric_limits<std::uint32_t>::max();
  for ( auto l : cut.leaves )
    min_leaf = std::min( min_leaf, net.level( l ) );
  return jj * static_cast<std::int64_t>( net.level( cut.root ) - min_leaf );
}

std::uint16_t fragment_truth_table( const Fragment& fragment )
{
  static constexpr std::uint64_t projections[4] = { 0xAAAA, 0xCCCC, 0xF0F0, 0xFF00 };
  if ( fragment.num_leaves > 4 )
    throw contract_violation( "fragment truth tables are limited to 4 leaves" );
  std::vector<std::uint64_t> value;
  auto get = [&]( const FragmentRef& r ) { return r.is_leaf ? projections[r.index] : value.at( r.index ); };
  for ( const auto& g : fragment.gates )
  {
    std::uint64_t in[4];
    for ( std::size_t i = 0; i < g.fanins.size(); ++i )
      in[i] = get( g.fanins[i] );
    value.push_back( evaluate_word( g.kind, in, g.fanins.size() ) );
  }
  return static_cast<std::uint16_t>( get( fragment.output ) & full_mask( fragment.num_leaves ) );
}

} // namespace majmap
