#include "majmap/bench_io.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "majmap/errors.hpp"

namespace majmap
{

namespace
{

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
    s.remove_suffix( 1 );
  return s;
}

std::string upper( std::string_view s )
{
  std::string r( s );
  for ( auto& c : r )
    c = static_cast<char>( std::toupper( static_cast<unsigned char>( c ) ) );
  return r;
}

bool valid_name( std::string_view s )
{
  if ( s.empty() )
    return false;
  for ( char c : s )
  {
    if ( std::isspace( static_cast<unsigned char>( c ) ) || c == '(' || c == ')' || c == ',' || c == '=' )
      return false;
  }
  return true;
}

struct Definition
{
  std::string op; // upper-cased keyword
  std::vector<std::string> args;
  std::size_t line{ 0 };
  std::optional<Origin> origin;
};

struct Parsed
{
  std::vector<std::pair<std::string, std::size_t>> inputs;
  std::vector<std::pair<std::string, std::size_t>> outputs;
  std::vector<std::string> order; // gate definitions in file order
  std::unordered_map<std::string, Definition> defs;
};

// "OP(arg, arg)" -> op, args
void split_call( std::string_view text, std::size_t line, std::string& op, std::vector<std::string>& args )
{
  auto open = text.find( '(' );
  auto close = text.rfind( ')' );
  if ( open == std::string_view::npos || close == std::string_view::npos || close < open ||
       !trim( text.substr( close + 1 ) ).empty() )
    throw parse_error( line, "expected KEYWORD(args)" );
  op = upper( trim( text.substr( 0, open ) ) );
  auto inner = text.substr( open + 1, close - open - 1 );
  args.clear();
  if ( trim( inner ).empty() )
    return;
  while ( true )
  {
    auto comma = inner.find( ',' );
    auto a = trim( inner.substr( 0, comma ) );
    if ( !valid_name( a ) )
      throw parse_error( line, "malformed signal name '" + std::string( a ) + "'" );
    args.emplace_back( a );
    if ( comma == std::string_view::npos )
      break;
    inner = inner.substr( comma + 1 );
  }
}

Parsed scan( std::string_view text )
{
  Parsed p;
  std::unordered_set<std::string> inputs, outputs;
  std::size_t lineno = 0;
  while ( !text.empty() )
  {
    auto nl = text.find( '\n' );
    auto raw = text.substr( 0, nl );
    text = nl == std::string_view::npos ? std::string_view{} : text.substr( nl + 1 );
    ++lineno;

    std::optional<Origin> origin;
    if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
    {
      auto comment = raw.substr( hash + 1 );
      if ( auto at = comment.find( "origin=" ); at != std::string_view::npos )
      {
        auto v = comment.substr( at + 7 );
        std::size_t len = 0;
        while ( len < v.size() && ( std::isalnum( static_cast<unsigned char>( v[len] ) ) || v[len] == '_' ) )
          ++len;
        origin = origin_from_name( v.substr( 0, len ) );
        if ( !origin )
          throw parse_error( lineno, "unknown origin '" + std::string( v.substr( 0, len ) ) + "'" );
      }
      raw = raw.substr( 0, hash );
    }
    auto line = trim( raw );
    if ( line.empty() )
      continue;

    std::string op;
    std::vector<std::string> args;
    auto eq = line.find( '=' );
    if ( eq == std::string_view::npos )
    {
      split_call( line, lineno, op, args );
      if ( ( op != "INPUT" && op != "OUTPUT" ) || args.size() != 1 )
        throw parse_error( lineno, "expected INPUT(name), OUTPUT(name) or an assignment" );
      if ( op == "INPUT" )
      {
        if ( inputs.count( args[0] ) || p.defs.count( args[0] ) )
          throw parse_error( lineno, "duplicate definition of '" + args[0] + "'" );
        inputs.insert( args[0] );
        p.inputs.emplace_back( args[0], lineno );
      }
      else
      {
        if ( outputs.count( args[0] ) )
          throw parse_error( lineno, "duplicate output '" + args[0] + "'" );
        outputs.insert( args[0] );
        p.outputs.emplace_back( args[0], lineno );
      }
      continue;
    }

    auto lhs = trim( line.substr( 0, eq ) );
    if ( !valid_name( lhs ) )
      throw parse_error( lineno, "malformed signal name '" + std::string( lhs ) + "'" );
    split_call( line.substr( eq + 1 ), lineno, op, args );
    std::string name( lhs );
    if ( inputs.count( name ) || p.defs.count( name ) )
      throw parse_error( lineno, "duplicate definition of '" + name + "'" );

    if ( op == "BUFF" )
      op = "BUF";
    if ( op == "INV" )
      op = "NOT";
    static const std::unordered_set<std::string> known = { "AND", "OR", "NAND", "NOR", "XOR", "XNOR",
                                                           "NOT", "BUF", "DFF", "MAJ", "SP" };
    if ( !known.count( op ) )
      throw parse_error( lineno, "unknown gate keyword '" + op + "'" );
    bool unary = op == "NOT" || op == "BUF" || op == "DFF" || op == "SP";
    if ( unary && args.size() != 1 )
      throw parse_error( lineno, op + " takes exactly one argument" );
    if ( op == "MAJ" && args.size() != 3 )
      throw parse_error( lineno, "MAJ takes exactly three arguments" );
    if ( !unary && op != "MAJ" && args.size() < 2 )
      throw parse_error( lineno, op + " needs at least two arguments" );

    p.order.push_back( name );
    p.defs.emplace( name, Definition{ op, std::move( args ), lineno, origin } );
  }
  return p;
}

GateKind kind_for( const Definition& d )
{
  auto n = static_cast<std::uint32_t>( d.args.size() );
  if ( d.op == "AND" )
    return n <= 4 ? family_kind( GateFamily::And, n ) : GateKind::AND_WIDE;
  if ( d.op == "OR" )
    return n <= 4 ? family_kind( GateFamily::Or, n ) : GateKind::OR_WIDE;
  if ( d.op == "XOR" )
    return n == 2 ? GateKind::XOR2 : GateKind::XOR_WIDE;
  if ( d.op == "NAND" )
    return GateKind::NAND;
  if ( d.op == "NOR" )
    return GateKind::NOR;
  if ( d.op == "XNOR" )
    return GateKind::XNOR;
  if ( d.op == "NOT" )
    return GateKind::INV;
  if ( d.op == "DFF" )
    return GateKind::DFF;
  if ( d.op == "MAJ" )
    return GateKind::MAJ3;
  return GateKind::SP;
}

std::string_view keyword_for( GateKind k )
{
  switch ( k )
  {
  case GateKind::AND2:
  case GateKind::AND3:
  case GateKind::AND4: return "AND";
  case GateKind::OR2:
  case GateKind::OR3:
  case GateKind::OR4: return "OR";
  case GateKind::INV: return "NOT";
  case GateKind::XOR2: return "XOR";
  case GateKind::MAJ3: return "MAJ";
  case GateKind::DFF: return "DFF";
  case GateKind::SP: return "SP";
  default: return {};
  }
}

} // namespace

Network parse_bench( std::string_view text, std::string name )
{
  auto p = scan( text );
  Network net( std::move( name ) );
  std::unordered_map<std::string, NodeId> ids;

  for ( const auto& [n, line] : p.inputs )
    ids[n] = net.create_pi( n );

  std::unordered_map<NodeId, std::size_t> line_of;
  for ( const auto& n : p.order )
  {
    const auto& d = p.defs.at( n );
    if ( d.op == "BUF" )
      continue;
    auto kind = kind_for( d );
    Origin origin = d.origin.value_or( kind == GateKind::DFF  ? Origin::UserDFF
                                       : kind == GateKind::SP ? Origin::InsertedSplitter
                                                              : Origin::UserLogic );
    auto id = net.create_unwired( kind, origin, n );
    ids[n] = id;
    line_of[id] = d.line;
  }

  // BUF chains resolve to their source signal
  auto resolve = [&]( const std::string& signal, std::size_t line ) {
    std::string cur = signal;
    std::unordered_set<std::string> seen;
    while ( true )
    {
      if ( auto it = ids.find( cur ); it != ids.end() )
        return it->second;
      auto d = p.defs.find( cur );
      if ( d == p.defs.end() )
        throw parse_error( line, "undefined signal '" + cur + "'" );
      if ( !seen.insert( cur ).second )
        throw parse_error( d->second.line, "combinational cycle through BUF '" + cur + "'" );
      cur = d->second.args[0];
    }
  };

  for ( const auto& n : p.order )
  {
    const auto& d = p.defs.at( n );
    if ( d.op == "BUF" )
    {
      (void)resolve( n, d.line );
      continue;
    }
    auto id = ids.at( n );
    for ( const auto& a : d.args )
      net.add_fanin( id, resolve( a, d.line ) );
  }
  for ( const auto& [n, line] : p.outputs )
    net.create_po( resolve( n, line ), n );

  // cycle check with line attribution
  std::vector<std::uint32_t> pending( net.capacity(), 0 );
  std::deque<NodeId> ready;
  std::size_t visited = 0;
  net.foreach_node( [&]( const Node& nd ) {
    pending[nd.id] = is_register( nd ) ? 0u : static_cast<std::uint32_t>( nd.fanins.size() );
    if ( !pending[nd.id] )
      ready.push_back( nd.id );
  } );
  while ( !ready.empty() )
  {
    auto id = ready.front();
    ready.pop_front();
    ++visited;
    for ( auto c : net.node( id ).fanouts )
    {
      if ( !is_register( net.node( c ) ) && --pending[c] == 0 )
        ready.push_back( c );
    }
  }
  if ( visited != net.size() )
  {
    std::size_t line = 0;
    std::string where;
    for ( const auto& [id, l] : line_of )
    {
      if ( pending[id] && ( line == 0 || l < line ) )
      {
        line = l;
        where = net.node( id ).name;
      }
    }
    throw parse_error( line, "combinational cycle through '" + where + "'" );
  }

  compute_levels( net );
  return net;
}

Network read_bench_file( const std::filesystem::path& path )
{
  std::ifstream in( path );
  if ( !in )
    throw parse_error( 0, "cannot open " + path.string() );
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bench( ss.str(), path.stem().string() );
}

namespace
{

// Unique emitted names: PIs keep theirs, gates keep theirs unless empty or taken.
std::vector<std::string> emitted_names( const Network& net, const std::vector<NodeId>& order )
{
  std::vector<std::string> names( net.capacity() );
  std::unordered_set<std::string> used;
  std::unordered_map<std::string, NodeId> po_driver;
  for ( auto po : net.pos() )
    po_driver.emplace( net.node( po ).name, net.node( po ).fanins[0] );

  for ( auto pi : net.pis() )
  {
    names[pi] = net.node( pi ).name;
    used.insert( names[pi] );
  }
  for ( auto id : order )
  {
    const auto& n = net.node( id );
    if ( n.kind == GateKind::PI || n.kind == GateKind::PO )
      continue;
    auto ok = [&]( const std::string& s ) {
      if ( s.empty() || !valid_name( s ) || used.count( s ) )
        return false;
      auto it = po_driver.find( s );
      return it == po_driver.end() || it->second == id;
    };
    std::string s = n.name;
    if ( !ok( s ) )
    {
      s = ( n.name.empty() ? std::string( "n" ) : n.name ) + "_" + std::to_string( id );
      while ( !ok( s ) )
        s += "_";
    }
    used.insert( s );
    names[id] = s;
  }
  return names;
}

} // namespace

std::string write_bench( const Network& net )
{
  net.foreach_node( [&]( const Node& n ) {
    if ( !is_library_kind( n.kind ) )
      throw structural_error( "cannot write unconverted " + std::string( kind_name( n.kind ) ) + " node '" + n.name +
                              "'" );
  } );
  auto order = topological_order( net );
  auto names = emitted_names( net, order );

  std::size_t gates = 0;
  net.foreach_node( [&]( const Node& n ) { gates += ( n.kind != GateKind::PI && n.kind != GateKind::PO ) ? 1 : 0; } );

  std::ostringstream os;
  os << "# " << ( net.name().empty() ? "network" : net.name() ) << '\n';
  os << "# " << net.pis().size() << " inputs, " << net.pos().size() << " outputs, " << gates << " gates\n";
  if ( !net.pis().empty() || !net.pos().empty() )
    os << '\n';
  for ( auto pi : net.pis() )
    os << "INPUT(" << names[pi] << ")\n";
  for ( auto po : net.pos() )
    os << "OUTPUT(" << net.node( po ).name << ")\n";
  if ( gates || !net.pos().empty() )
    os << '\n';
  for ( auto id : order )
  {
    const auto& n = net.node( id );
    if ( n.kind == GateKind::PI || n.kind == GateKind::PO )
      continue;
    os << names[id] << " = " << keyword_for( n.kind ) << '(';
    for ( std::size_t i = 0; i < n.fanins.size(); ++i )
      os << ( i ? ", " : "" ) << names[n.fanins[i]];
    os << ")  # origin=" << origin_name( n.origin ) << '\n';
  }
  for ( auto po : net.pos() )
  {
    const auto& n = net.node( po );
    if ( names[n.fanins[0]] != n.name )
      os << n.name << " = BUF(" << names[n.fanins[0]] << ")\n";
  }
  return os.str();
}

void write_bench_file( const Network& net, const std::filesystem::path& path )
{
  std::ofstream out( path );
  if ( !out )
    throw parse_error( 0, "cannot write " + path.string() );
  out << write_bench( net );
}

std::string network_to_json( const Network& net )
{
  auto order = topological_order( net );
  nlohmann::json j;
  j["name"] = net.name();
  j["inputs"] = nlohmann::json::array();
  for ( auto pi : net.pis() )
    j["inputs"].push_back( net.node( pi ).name );
  j["outputs"] = nlohmann::json::array();
  for ( auto po : net.pos() )
    j["outputs"].push_back( net.node( po ).name );
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for ( auto id : order )
  {
    const auto& n = net.node( id );
    nodes.push_back( { { "id", n.id },
                       { "name", n.name },
                       { "kind", std::string( kind_name( n.kind ) ) },
                       { "origin", std::string( origin_name( n.origin ) ) },
                       { "level", n.level },
                       { "fanins", n.fanins } } );
  }
  return j.dump( 2 );
}

} // namespace majmap
