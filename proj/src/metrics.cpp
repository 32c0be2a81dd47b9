#include "majmap/metrics.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace majmap
{

namespace
{

std::uint32_t depth_from( const Network& net, const std::vector<std::uint32_t>& level )
{
  std::uint32_t d = 0;
  net.foreach_node( [&]( const Node& n ) {
    if ( n.kind == GateKind::PI || n.kind == GateKind::PO )
      return;
    if ( is_register( n ) )
      d = std::max( d, level[n.fanins[0]] + 1 );
    else
      d = std::max( d, level[n.id] );
  } );
  return d;
}

std::size_t pending_from( const Network& net, const std::vector<std::uint32_t>& level )
{
  std::size_t total = 0;
  net.foreach_node( [&]( const Node& n ) {
    if ( !is_clocked( n.kind ) || n.fanins.size() < 2 )
      return;
    std::uint32_t lmax = 0;
    for ( auto f : n.fanins )
      lmax = std::max( lmax, level[f] );
    for ( auto f : n.fanins )
      total += lmax - level[f];
  } );
  return total;
}

nlohmann::json to_json( const MetricsReport& m )
{
  nlohmann::json j = { { "depth", m.depth },
                       { "jjs", m.jjs },
                       { "pnd", m.pnd },
                       { "dffs_plus_invs", m.dffs_plus_invs },
                       { "dffs", m.dffs },
                       { "invs", m.invs },
                       { "balancing_dffs", m.balancing_dffs },
                       { "user_dffs", m.user_dffs },
                       { "inserted_invs", m.inserted_invs },
                       { "splitters", m.splitters },
                       { "splitter_jjs", m.splitter_jjs },
                       { "gates", m.gates } };
  nlohmann::json kinds = nlohmann::json::object();
  for ( std::size_t k = 0; k < num_gate_kinds; ++k )
  {
    if ( m.per_kind[k] )
      kinds[std::string( kind_name( static_cast<GateKind>( k ) ) )] = m.per_kind[k];
  }
  j["cells"] = kinds;
  return j;
}

void write_text( std::ostream& os, const std::string& prefix, const MetricsReport& m )
{
  os << prefix << "depth=" << m.depth << '\n'
     << prefix << "jjs=" << m.jjs << '\n'
     << prefix << "pnd=" << m.pnd << '\n'
     << prefix << "dffs_plus_invs=" << m.dffs_plus_invs << '\n'
     << prefix << "balancing_dffs=" << m.balancing_dffs << '\n'
     << prefix << "user_dffs=" << m.user_dffs << '\n'
     << prefix << "inserted_invs=" << m.inserted_invs << '\n'
     << prefix << "splitters=" << m.splitters << '\n'
     << prefix << "splitter_jjs=" << m.splitter_jjs << '\n'
     << prefix << "gates=" << m.gates << '\n';
}

} // namespace

std::uint32_t network_depth( const Network& net ) { return depth_from( net, levelize( net ) ); }

MetricsReport network_metrics( const Network& net, const CellLibrary& lib )
{
  MetricsReport m;
  auto level = levelize( net );
  net.foreach_node( [&]( const Node& n ) {
    m.per_kind[index_of( n.kind )]++;
    m.jjs += lib.jj( n.kind );
    if ( n.kind == GateKind::PI || n.kind == GateKind::PO )
      return;
    ++m.gates;
    if ( n.kind == GateKind::DFF )
    {
      ++m.dffs;
      m.balancing_dffs += n.origin == Origin::BalancingDFF ? 1 : 0;
      m.user_dffs += n.origin == Origin::UserDFF ? 1 : 0;
    }
    if ( n.kind == GateKind::INV )
    {
      ++m.invs;
      m.inserted_invs += n.origin == Origin::InsertedINV ? 1 : 0;
    }
    if ( n.kind == GateKind::SP )
    {
      ++m.splitters;
      m.splitter_jjs += static_cast<std::size_t>( lib.jj( GateKind::SP ) );
    }
  } );
  m.dffs_plus_invs = m.dffs + m.invs;
  m.depth = depth_from( net, level );
  m.pnd = m.jjs * static_cast<std::int64_t>( m.depth );
  return m;
}

std::size_t pending_balancing_dffs( const Network& net ) { return pending_from( net, levelize( net ) ); }

std::int64_t estimated_pnd( const Network& net, const CellLibrary& lib )
{
  auto level = levelize( net );
  std::int64_t jjs = 0;
  net.foreach_node( [&]( const Node& n ) { jjs += lib.jj( n.kind ); } );
  jjs += static_cast<std::int64_t>( pending_from( net, level ) ) * lib.jj( GateKind::DFF );
  return jjs * static_cast<std::int64_t>( depth_from( net, level ) );
}

std::string format_report_text( const MetricsReport& final_metrics, const std::vector<PhaseRecord>& phases )
{
  std::ostringstream os;
  write_text( os, "", final_metrics );
  for ( const auto& p : phases )
    write_text( os, "phase." + p.phase + ".", p.metrics );
  return os.str();
}

std::string format_report_json( const MetricsReport& final_metrics, const std::vector<PhaseRecord>& phases )
{
  auto j = to_json( final_metrics );
  j["per_phase"] = nlohmann::json::array();
  for ( const auto& p : phases )
  {
    auto e = to_json( p.metrics );
    e["phase"] = p.phase;
    j["per_phase"].push_back( std::move( e ) );
  }
  return j.dump( 2 );
}

} // namespace majmap
