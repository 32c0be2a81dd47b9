#include "majmap/cell_library.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include "majmap/errors.hpp"

namespace majmap
{

namespace
{

constexpr std::array<std::string_view, num_gate_kinds> kind_names = {
    "PI", "PO", "AND2", "AND3", "AND4", "OR2", "OR3", "OR4", "INV", "XOR2",
    "MAJ3", "DFF", "SP", "NAND", "NOR", "XNOR", "AND_WIDE", "OR_WIDE", "XOR_WIDE" };

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && ( s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && ( s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ) )
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

} // namespace

std::string_view kind_name( GateKind k ) noexcept { return kind_names[index_of( k )]; }

std::optional<GateKind> kind_from_name( std::string_view name ) noexcept
{
  for ( std::size_t i = 0; i < num_gate_kinds; ++i )
  {
    if ( kind_names[i] == name )
      return static_cast<GateKind>( i );
  }
  return std::nullopt;
}

std::optional<std::uint32_t> fixed_arity( GateKind k ) noexcept
{
  switch ( k )
  {
  case GateKind::PI: return 0;
  case GateKind::PO:
  case GateKind::INV:
  case GateKind::DFF:
  case GateKind::SP: return 1;
  case GateKind::AND2:
  case GateKind::OR2:
  case GateKind::XOR2: return 2;
  case GateKind::AND3:
  case GateKind::OR3:
  case GateKind::MAJ3: return 3;
  case GateKind::AND4:
  case GateKind::OR4: return 4;
  default: return std::nullopt;
  }
}

bool arity_ok( GateKind k, std::size_t fanins ) noexcept
{
  if ( auto a = fixed_arity( k ) )
    return fanins == *a;
  return fanins >= 2;
}

bool is_library_kind( GateKind k ) noexcept { return index_of( k ) <= index_of( GateKind::SP ); }

GateKind family_kind( GateFamily family, std::uint32_t arity )
{
  switch ( family )
  {
  case GateFamily::And:
    if ( arity >= 2 && arity <= 4 )
      return static_cast<GateKind>( index_of( GateKind::AND2 ) + arity - 2 );
    break;
  case GateFamily::Or:
    if ( arity >= 2 && arity <= 4 )
      return static_cast<GateKind>( index_of( GateKind::OR2 ) + arity - 2 );
    break;
  case GateFamily::Xor:
    if ( arity == 2 )
      return GateKind::XOR2;
    break;
  }
  throw contract_violation( "no library gate for this family/arity" );
}

std::uint32_t family_max_fanin( GateFamily family ) noexcept { return family == GateFamily::Xor ? 2u : 4u; }

std::uint64_t evaluate_word( GateKind k, const std::uint64_t* in, std::size_t n )
{
  std::uint64_t r = 0;
  switch ( k )
  {
  case GateKind::PO:
  case GateKind::DFF:
  case GateKind::SP: return in[0];
  case GateKind::INV: return ~in[0];
  case GateKind::AND2:
  case GateKind::AND3:
  case GateKind::AND4:
  case GateKind::AND_WIDE:
  case GateKind::NAND:
    r = ~std::uint64_t{ 0 };
    for ( std::size_t i = 0; i < n; ++i )
      r &= in[i];
    return k == GateKind::NAND ? ~r : r;
  case GateKind::OR2:
  case GateKind::OR3:
  case GateKind::OR4:
  case GateKind::OR_WIDE:
  case GateKind::NOR:
    for ( std::size_t i = 0; i < n; ++i )
      r |= in[i];
    return k == GateKind::NOR ? ~r : r;
  case GateKind::XOR2:
  case GateKind::XOR_WIDE:
  case GateKind::XNOR:
    for ( std::size_t i = 0; i < n; ++i )
      r ^= in[i];
    return k == GateKind::XNOR ? ~r : r;
  case GateKind::MAJ3: return ( in[0] & in[1] ) | ( in[0] & in[2] ) | ( in[1] & in[2] );
  case GateKind::PI: break;
  }
  throw contract_violation( "PI has no gate function" );
}

CellLibrary::CellLibrary()
{
  auto set = [this]( GateKind k, std::int32_t jj, std::uint32_t fanin ) {
    cells_[index_of( k )] = CellInfo{ jj, fanin, is_clocked( k ) };
  };
  set( GateKind::PI, 0, 0 );
  set( GateKind::PO, 0, 1 );
  set( GateKind::DFF, 8, 1 );
  set( GateKind::AND2, 9, 2 );
  set( GateKind::AND3, 12, 3 );
  set( GateKind::AND4, 15, 4 );
  set( GateKind::OR2, 9, 2 );
  set( GateKind::OR3, 11, 3 );
  set( GateKind::OR4, 13, 4 );
  set( GateKind::INV, 5, 1 );
  set( GateKind::XOR2, 7, 2 );
  set( GateKind::SP, 3, 1 );
  set( GateKind::MAJ3, 12, 3 );
  // conversion-only kinds have no cell and must be gone before costing
  for ( auto k : { GateKind::NAND, GateKind::NOR, GateKind::XNOR, GateKind::AND_WIDE, GateKind::OR_WIDE,
                   GateKind::XOR_WIDE } )
    set( k, 0, 0 );
}

void CellLibrary::set_jj( GateKind k, std::int32_t jj )
{
  if ( jj < 0 )
    throw config_error( "negative JJ count for " + std::string( kind_name( k ) ) );
  if ( !is_library_kind( k ) || k == GateKind::PI || k == GateKind::PO )
    throw config_error( "no cell for kind " + std::string( kind_name( k ) ) );
  cells_[index_of( k )].jj_count = jj;
}

CellLibrary parse_cell_library( std::string_view text )
{
  CellLibrary lib;
  std::size_t lineno = 0;
  while ( !text.empty() )
  {
    auto nl = text.find( '\n' );
    auto line = text.substr( 0, nl );
    text = nl == std::string_view::npos ? std::string_view{} : text.substr( nl + 1 );
    ++lineno;
    if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
      line = line.substr( 0, hash );
    line = trim( line );
    if ( line.empty() )
      continue;
    auto eq = line.find( '=' );
    if ( eq == std::string_view::npos )
      throw config_error( "cell library line " + std::to_string( lineno ) + ": expected NAME=COST" );
    auto name = upper( trim( line.substr( 0, eq ) ) );
    auto value = trim( line.substr( eq + 1 ) );
    if ( name == "NOT" )
      name = "INV";
    else if ( name == "XOR" )
      name = "XOR2";
    else if ( name == "SPLITTER" )
      name = "SP";
    else if ( name == "MAJ" )
      name = "MAJ3";
    auto kind = kind_from_name( name );
    if ( !kind || !is_library_kind( *kind ) || *kind == GateKind::PI || *kind == GateKind::PO )
      throw config_error( "cell library line " + std::to_string( lineno ) + ": unknown cell '" + name + "'" );
    std::int32_t jj = 0;
    auto [ptr, ec] = std::from_chars( value.data(), value.data() + value.size(), jj );
    if ( ec != std::errc{} || ptr != value.data() + value.size() )
      throw config_error( "cell library line " + std::to_string( lineno ) + ": bad cost '" + std::string( value ) + "'" );
    lib.set_jj( *kind, jj );
  }
  return lib;
}

std::string format_cell_library( const CellLibrary& lib )
{
  std::ostringstream os;
  for ( auto k : { GateKind::DFF, GateKind::AND2, GateKind::AND3, GateKind::AND4, GateKind::OR2, GateKind::OR3,
                   GateKind::OR4, GateKind::INV, GateKind::XOR2, GateKind::SP, GateKind::MAJ3 } )
    os << kind_name( k ) << '=' << lib.jj( k ) << '\n';
  return os.str();
}

} // namespace majmap
