#include "majmap/verify.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <unordered_map>

#include "majmap/errors.hpp"

namespace majmap
{

std::vector<std::uint64_t> simulate_words( const Network& net, const std::vector<std::uint64_t>& pi_words,
                                           const std::vector<std::uint64_t>& register_words )
{
  if ( pi_words.size() != net.pis().size() )
    throw contract_violation( "input word count does not match the PI count" );
  std::vector<std::uint64_t> value( net.capacity(), 0 );
  for ( std::size_t i = 0; i < pi_words.size(); ++i )
    value[net.pis()[i]] = pi_words[i];
  auto regs = net.registers();
  for ( std::size_t i = 0; i < regs.size() && i < register_words.size(); ++i )
    value[regs[i]] = register_words[i];

  std::vector<std::uint64_t> in;
  for ( auto id : topological_order( net ) )
  {
    const auto& n = net.node( id );
    if ( n.kind == GateKind::PI || is_register( n ) )
      continue;
    in.clear();
    for ( auto f : n.fanins )
      in.push_back( value[f] );
    value[id] = evaluate_word( n.kind, in.data(), in.size() );
  }
  return value;
}

std::vector<bool> simulate( const Network& net, const std::vector<bool>& inputs )
{
  std::vector<std::uint64_t> words;
  for ( bool b : inputs )
    words.push_back( b ? 1u : 0u );
  auto v = simulate_words( net, words );
  std::vector<bool> out;
  for ( auto po : net.pos() )
    out.push_back( v[po] & 1u );
  return out;
}

namespace
{

struct Interface
{
  std::vector<std::string> inputs;  // PIs then registers, sorted block-wise
  std::vector<std::string> outputs; // POs then register D inputs
};

std::vector<std::string> sorted_names( const Network& net, const std::vector<NodeId>& ids, const char* what )
{
  std::vector<std::string> r;
  for ( auto id : ids )
    r.push_back( net.node( id ).name );
  std::sort( r.begin(), r.end() );
  if ( std::adjacent_find( r.begin(), r.end() ) != r.end() )
    throw interface_error( std::string( "duplicate " ) + what + " name in '" + net.name() + "'" );
  return r;
}

std::unordered_map<std::string, NodeId> by_name( const Network& net, const std::vector<NodeId>& ids )
{
  std::unordered_map<std::string, NodeId> m;
  for ( auto id : ids )
    m[net.node( id ).name] = id;
  return m;
}

} // namespace

EquivalenceReport check_equivalence( const Network& a, const Network& b, const EquivalenceOptions& options )
{
  const auto ra = a.registers(), rb = b.registers();
  const auto pis = sorted_names( a, a.pis(), "input" );
  const auto pos = sorted_names( a, a.pos(), "output" );
  const auto regs = sorted_names( a, ra, "register" );
  if ( pis != sorted_names( b, b.pis(), "input" ) )
    throw interface_error( "primary input names differ" );
  if ( pos != sorted_names( b, b.pos(), "output" ) )
    throw interface_error( "primary output names differ" );
  if ( regs != sorted_names( b, rb, "register" ) )
    throw interface_error( "register names differ" );

  const auto a_pi = by_name( a, a.pis() ), b_pi = by_name( b, b.pis() );
  const auto a_po = by_name( a, a.pos() ), b_po = by_name( b, b.pos() );
  const auto a_reg = by_name( a, ra ), b_reg = by_name( b, rb );

  EquivalenceReport rep;
  rep.effective_inputs = pis.size() + regs.size();
  rep.exhaustive = rep.effective_inputs <= options.exhaustive_limit;
  const std::uint64_t total = rep.exhaustive ? ( std::uint64_t{ 1 } << rep.effective_inputs ) : options.vectors;

  std::mt19937_64 rng( options.seed );
  std::vector<std::uint64_t> word( rep.effective_inputs );
  // name -> position of the inputs of each network
  auto layout = [&]( const Network& net, const std::unordered_map<std::string, NodeId>& pi_map,
                     const std::unordered_map<std::string, NodeId>& reg_map, std::vector<std::uint64_t>& piw,
                     std::vector<std::uint64_t>& regw ) {
    piw.assign( net.pis().size(), 0 );
    auto r = net.registers();
    regw.assign( r.size(), 0 );
    std::unordered_map<NodeId, std::size_t> pi_pos, reg_pos;
    for ( std::size_t i = 0; i < net.pis().size(); ++i )
      pi_pos[net.pis()[i]] = i;
    for ( std::size_t i = 0; i < r.size(); ++i )
      reg_pos[r[i]] = i;
    for ( std::size_t i = 0; i < pis.size(); ++i )
      piw[pi_pos.at( pi_map.at( pis[i] ) )] = word[i];
    for ( std::size_t i = 0; i < regs.size(); ++i )
      regw[reg_pos.at( reg_map.at( regs[i] ) )] = word[pis.size() + i];
  };

  std::vector<std::uint64_t> piw, regw;
  for ( std::uint64_t base = 0; base < total; base += 64 )
  {
    const std::uint64_t count = std::min<std::uint64_t>( 64, total - base );
    const std::uint64_t valid = count == 64 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << count ) - 1 );
    for ( std::size_t i = 0; i < word.size(); ++i )
    {
      if ( rep.exhaustive )
      {
        std::uint64_t w = 0;
        for ( std::uint64_t k = 0; k < count; ++k )
          w |= ( ( ( base + k ) >> i ) & 1u ) << k;
        word[i] = w;
      }
      else
        word[i] = rng();
    }
    layout( a, a_pi, a_reg, piw, regw );
    auto va = simulate_words( a, piw, regw );
    layout( b, b_pi, b_reg, piw, regw );
    auto vb = simulate_words( b, piw, regw );
    rep.patterns += count;

    auto compare = [&]( const std::string& name, std::uint64_t x, std::uint64_t y ) {
      auto diff = ( x ^ y ) & valid;
      if ( !diff || !rep.equivalent )
        return;
      rep.equivalent = false;
      rep.mismatch = name;
      auto bit = static_cast<unsigned>( std::countr_zero( diff ) );
      for ( std::size_t i = 0; i < word.size(); ++i )
      {
        const auto& n = i < pis.size() ? pis[i] : regs[i - pis.size()];
        rep.counterexample.emplace_back( n, ( word[i] >> bit ) & 1u );
      }
    };
    for ( const auto& n : pos )
      compare( n, va[a_po.at( n )], vb[b_po.at( n )] );
    for ( const auto& n : regs )
      compare( n + ".D", va[a.node( a_reg.at( n ) ).fanins.at( 0 )], vb[b.node( b_reg.at( n ) ).fanins.at( 0 )] );
    if ( !rep.equivalent )
      break;
  }
  return rep;
}

} // namespace majmap
