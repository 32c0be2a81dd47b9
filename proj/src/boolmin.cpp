#include "majmap/boolmin.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "majmap/errors.hpp"

namespace majmap
{

namespace
{

constexpr std::string_view sym_xor = "\xE2\x8A\x95";  // ⊕
constexpr std::string_view sym_xnor = "\xE2\x8A\x96"; // ⊖
constexpr std::string_view sym_maj = "\xE2\x98\x85";  // ★

void require_unmarked( const Implicant& s )
{
  if ( s.marked() )
    throw contract_violation( "fusion input " + s.str() + " already carries markers" );
}

Implicant finish( Implicant imp )
{
  for ( auto& g : imp.groups )
    std::sort( g.positions.begin(), g.positions.end() );
  std::sort( imp.groups.begin(), imp.groups.end(),
             []( const auto& a, const auto& b ) { return a.positions < b.positions; } );
  imp.covered = expand( imp );
  return imp;
}

} // namespace

std::uint32_t Implicant::literals() const noexcept
{
  return static_cast<std::uint32_t>( std::count_if( cells.begin(), cells.end(), []( char c ) { return c != '-'; } ) );
}

std::string Implicant::str() const
{
  std::string s;
  for ( char c : cells )
  {
    switch ( c )
    {
    case 'x': s += sym_xor; break;
    case 'n': s += sym_xnor; break;
    case 'm': s += sym_maj; break;
    default: s += c; break;
    }
  }
  return s;
}

Implicant make_implicant( std::string_view text )
{
  Implicant imp;
  while ( !text.empty() )
  {
    if ( text.starts_with( sym_xor ) || text.starts_with( sym_xnor ) || text.starts_with( sym_maj ) )
    {
      imp.cells += text.starts_with( sym_xor ) ? 'x' : text.starts_with( sym_xnor ) ? 'n' : 'm';
      text.remove_prefix( 3 );
      continue;
    }
    char c = text.front();
    if ( c != '0' && c != '1' && c != '-' && c != 'x' && c != 'n' && c != 'm' )
      throw contract_violation( "bad implicant character in '" + std::string( text ) + "'" );
    imp.cells += c;
    text.remove_prefix( 1 );
  }
  if ( imp.cells.size() > 4 )
    throw contract_violation( "implicants are limited to 4 inputs" );
  for ( char marker : { 'x', 'n', 'm' } )
  {
    Implicant::Group g{ marker, {} };
    for ( std::uint32_t i = 0; i < imp.cells.size(); ++i )
    {
      if ( imp.cells[i] == marker )
        g.positions.push_back( i );
    }
    if ( g.positions.empty() )
      continue;
    if ( g.positions.size() != ( marker == 'm' ? 3u : 2u ) )
      throw contract_violation( "marker groups must be pairs (XOR/XNOR) or triples (MAJ)" );
    imp.groups.push_back( std::move( g ) );
  }
  return finish( std::move( imp ) );
}

std::uint16_t expand( const Implicant& imp )
{
  const auto n = imp.arity();
  std::uint16_t r = 0;
  for ( std::uint32_t m = 0; m < ( 1u << n ); ++m )
  {
    bool in = true;
    for ( std::uint32_t i = 0; in && i < n; ++i )
    {
      auto bit = ( m >> i ) & 1u;
      if ( ( imp.cells[i] == '0' && bit ) || ( imp.cells[i] == '1' && !bit ) )
        in = false;
    }
    for ( const auto& g : imp.groups )
    {
      if ( !in )
        break;
      std::uint32_t ones = 0;
      for ( auto p : g.positions )
        ones += ( m >> p ) & 1u;
      if ( g.marker == 'x' )
        in = ones % 2 == 1;
      else if ( g.marker == 'n' )
        in = ones % 2 == 0;
      else
        in = ones >= 2;
    }
    if ( in )
      r |= static_cast<std::uint16_t>( 1u << m );
  }
  return r;
}

std::uint16_t minterms_from_strings( const std::vector<std::string>& rows )
{
  std::uint16_t r = 0;
  for ( const auto& row : rows )
  {
    std::uint32_t m = 0;
    for ( std::uint32_t i = 0; i < row.size(); ++i )
      m |= ( row[i] == '1' ? 1u : 0u ) << i;
    r |= static_cast<std::uint16_t>( 1u << m );
  }
  return r;
}

std::uint16_t Cover::covered() const
{
  std::uint16_t r = 0;
  for ( const auto& i : implicants )
    r |= i.covered;
  return r;
}

std::string Cover::str() const
{
  std::string s = "{";
  for ( std::size_t i = 0; i < implicants.size(); ++i )
    s += ( i ? ", " : "" ) + implicants[i].str();
  return s + "}";
}

std::vector<Implicant> qm_prime_implicants( std::uint16_t onset, std::uint32_t arity )
{
  if ( arity > 4 )
    throw contract_violation( "arity above 4" );
  onset &= full_mask( arity );
  // cube = (value bits, free mask)
  std::set<std::pair<std::uint32_t, std::uint32_t>> current, primes;
  for ( std::uint32_t m = 0; m < ( 1u << arity ); ++m )
  {
    if ( ( onset >> m ) & 1u )
      current.insert( { m, 0u } );
  }
  while ( !current.empty() )
  {
    std::set<std::pair<std::uint32_t, std::uint32_t>> next, used;
    for ( auto a = current.begin(); a != current.end(); ++a )
    {
      for ( auto b = std::next( a ); b != current.end(); ++b )
      {
        if ( a->second != b->second )
          continue;
        auto diff = a->first ^ b->first;
        if ( std::popcount( diff ) != 1 )
          continue;
        next.insert( { a->first & ~diff, a->second | diff } );
        used.insert( *a );
        used.insert( *b );
      }
    }
    for ( const auto& c : current )
    {
      if ( !used.count( c ) )
        primes.insert( c );
    }
    current = std::move( next );
  }

  std::vector<Implicant> r;
  for ( const auto& [value, free] : primes )
  {
    Implicant imp;
    for ( std::uint32_t i = 0; i < arity; ++i )
      imp.cells += ( ( free >> i ) & 1u ) ? '-' : ( ( value >> i ) & 1u ) ? '1' : '0';
    r.push_back( finish( std::move( imp ) ) );
  }
  std::sort( r.begin(), r.end(), []( const auto& a, const auto& b ) { return a.cells < b.cells; } );
  return r;
}

namespace
{

struct CoverSearch
{
  const std::vector<Implicant>& cand;
  std::uint16_t onset;
  std::vector<std::size_t> chosen, best;
  std::uint32_t best_literals{ 0 };
  bool found{ false };

  std::vector<std::string> key( const std::vector<std::size_t>& s ) const
  {
    std::vector<std::string> k;
    for ( auto i : s )
      k.push_back( cand[i].cells );
    std::sort( k.begin(), k.end() );
    return k;
  }

  void consider()
  {
    std::uint32_t lits = 0;
    for ( auto i : chosen )
      lits += cand[i].literals();
    bool better = !found || chosen.size() < best.size() ||
                  ( chosen.size() == best.size() &&
                    ( lits < best_literals || ( lits == best_literals && key( chosen ) < key( best ) ) ) );
    if ( better )
    {
      best = chosen;
      best_literals = lits;
      found = true;
    }
  }

  void run( std::uint16_t uncovered )
  {
    if ( !uncovered )
    {
      consider();
      return;
    }
    if ( found && chosen.size() >= best.size() )
      return;
    // branch on the uncovered minterm with the fewest options
    std::uint32_t pick = 0, fewest = ~0u;
    for ( std::uint32_t m = 0; m < 16; ++m )
    {
      if ( !( ( uncovered >> m ) & 1u ) )
        continue;
      std::uint32_t n = 0;
      for ( const auto& c : cand )
        n += ( c.covered >> m ) & 1u;
      if ( n < fewest )
      {
        fewest = n;
        pick = m;
      }
    }
    for ( std::size_t i = 0; i < cand.size(); ++i )
    {
      if ( !( ( cand[i].covered >> pick ) & 1u ) )
        continue;
      chosen.push_back( i );
      run( uncovered & static_cast<std::uint16_t>( ~cand[i].covered ) );
      chosen.pop_back();
    }
  }
};

} // namespace

std::vector<Implicant> select_cover( const std::vector<Implicant>& candidates, std::uint16_t onset )
{
  std::vector<Implicant> cand;
  std::uint16_t reach = 0;
  for ( const auto& c : candidates )
  {
    if ( c.covered & ~onset )
      throw contract_violation( "candidate " + c.str() + " covers an off-set minterm" );
    if ( !c.covered || std::find( cand.begin(), cand.end(), c ) != cand.end() )
      continue;
    cand.push_back( c );
    reach |= c.covered;
  }
  if ( ( reach & onset ) != onset )
    throw contract_violation( "candidates do not cover the on-set" );
  if ( !onset )
    return {};

  CoverSearch s{ cand, onset, {}, {} };
  s.run( onset );
  std::vector<Implicant> r;
  for ( auto i : s.best )
    r.push_back( cand[i] );
  std::sort( r.begin(), r.end(), []( const auto& a, const auto& b ) { return a.cells < b.cells; } );
  return r;
}

std::optional<Implicant> fuse_xor_xnor( const Implicant& s1, const Implicant& s2 )
{
  require_unmarked( s1 );
  require_unmarked( s2 );
  if ( s1.arity() != s2.arity() )
    throw contract_violation( "fusion inputs differ in arity" );
  std::vector<std::uint32_t> d01, d10;
  for ( std::uint32_t i = 0; i < s1.arity(); ++i )
  {
    char a = s1.cells[i], b = s2.cells[i];
    if ( a == b )
      continue;
    if ( a == '0' && b == '1' )
      d01.push_back( i );
    else if ( a == '1' && b == '0' )
      d10.push_back( i );
    else
      return std::nullopt;
  }
  Implicant r = s1;
  std::vector<std::uint32_t> pos;
  char marker;
  if ( d01.size() == 1 && d10.size() == 1 )
  {
    marker = 'x';
    pos = { d01[0], d10[0] };
  }
  else if ( d01.size() == 2 && d10.empty() )
  {
    marker = 'n';
    pos = d01;
  }
  else if ( d10.size() == 2 && d01.empty() )
  {
    marker = 'n';
    pos = d10;
  }
  else
    return std::nullopt;
  for ( auto p : pos )
    r.cells[p] = marker;
  r.groups = { { marker, pos } };
  r = finish( std::move( r ) );
  if ( r.covered != ( s1.covered | s2.covered ) )
    return std::nullopt;
  return r;
}

std::optional<Implicant> fuse_maj( const Implicant& s1, const Implicant& s2, const Implicant& s3 )
{
  require_unmarked( s1 );
  require_unmarked( s2 );
  require_unmarked( s3 );
  if ( s1.arity() != s2.arity() || s1.arity() != s3.arity() )
    throw contract_violation( "fusion inputs differ in arity" );
  int seen[3] = { -1, -1, -1 };
  Implicant r = s1;
  for ( std::uint32_t i = 0; i < s1.arity(); ++i )
  {
    char a = s1.cells[i], b = s2.cells[i], c = s3.cells[i];
    if ( a == b && b == c )
      continue;
    int pattern = -1;
    if ( a == '1' && b == '1' && c == '-' )
      pattern = 0;
    else if ( a == '1' && b == '-' && c == '1' )
      pattern = 1;
    else if ( a == '-' && b == '1' && c == '1' )
      pattern = 2;
    if ( pattern < 0 || seen[pattern] >= 0 )
      return std::nullopt;
    seen[pattern] = static_cast<int>( i );
  }
  if ( seen[0] < 0 || seen[1] < 0 || seen[2] < 0 )
    return std::nullopt;
  std::vector<std::uint32_t> pos;
  for ( int p : seen )
  {
    r.cells[static_cast<std::size_t>( p )] = 'm';
    pos.push_back( static_cast<std::uint32_t>( p ) );
  }
  r.groups = { { 'm', pos } };
  r = finish( std::move( r ) );
  if ( r.covered != ( s1.covered | s2.covered | s3.covered ) )
    return std::nullopt;
  return r;
}

namespace
{

// ★ terms whose expansion fits inside the on-set: for each position triple and
// every assignment of the other positions, fuse the three constituent cubes.
std::vector<Implicant> majority_terms( std::uint16_t onset, std::uint32_t arity )
{
  std::vector<Implicant> r;
  if ( arity < 3 )
    return r;
  for ( std::uint32_t p = 0; p < arity; ++p )
    for ( std::uint32_t q = p + 1; q < arity; ++q )
      for ( std::uint32_t s = q + 1; s < arity; ++s )
      {
        std::vector<std::uint32_t> rest;
        for ( std::uint32_t i = 0; i < arity; ++i )
        {
          if ( i != p && i != q && i != s )
            rest.push_back( i );
        }
        std::uint32_t combos = 1;
        for ( std::size_t i = 0; i < rest.size(); ++i )
          combos *= 3;
        for ( std::uint32_t c = 0; c < combos; ++c )
        {
          std::string base( arity, '-' );
          auto v = c;
          for ( auto i : rest )
          {
            base[i] = "01-"[v % 3];
            v /= 3;
          }
          auto cube = [&]( std::uint32_t x, std::uint32_t y ) {
            Implicant imp;
            imp.cells = base;
            imp.cells[x] = '1';
            imp.cells[y] = '1';
            return finish( std::move( imp ) );
          };
          auto fused = fuse_maj( cube( p, q ), cube( p, s ), cube( q, s ) );
          if ( fused && !( fused->covered & ~onset ) )
            r.push_back( std::move( *fused ) );
        }
      }
  return r;
}

bool fuse_pass_maj( std::vector<Implicant>& cover )
{
  for ( std::size_t i = 0; i < cover.size(); ++i )
    for ( std::size_t j = i + 1; j < cover.size(); ++j )
      for ( std::size_t k = j + 1; k < cover.size(); ++k )
      {
        if ( cover[i].marked() || cover[j].marked() || cover[k].marked() )
          continue;
        if ( auto f = fuse_maj( cover[i], cover[j], cover[k] ) )
        {
          cover.erase( cover.begin() + static_cast<std::ptrdiff_t>( k ) );
          cover.erase( cover.begin() + static_cast<std::ptrdiff_t>( j ) );
          cover[i] = std::move( *f );
          return true;
        }
      }
  return false;
}

bool fuse_pass_xor( std::vector<Implicant>& cover )
{
  for ( std::size_t i = 0; i < cover.size(); ++i )
    for ( std::size_t j = i + 1; j < cover.size(); ++j )
    {
      if ( cover[i].marked() || cover[j].marked() )
        continue;
      if ( auto f = fuse_xor_xnor( cover[i], cover[j] ) )
      {
        cover.erase( cover.begin() + static_cast<std::ptrdiff_t>( j ) );
        cover[i] = std::move( *f );
        return true;
      }
    }
  return false;
}

} // namespace

Cover minimize( std::uint16_t truth, std::uint32_t arity, MinimizeOptions options )
{
  if ( arity > 4 )
    throw contract_violation( "arity above 4" );
  const std::uint16_t onset = truth & full_mask( arity );
  thread_local std::unordered_map<std::uint32_t, Cover> memo;
  const std::uint32_t key = onset | ( arity << 16 ) | ( options.maj ? 1u << 20 : 0u ) | ( options.xor_xnor ? 1u << 21 : 0u );
  if ( auto it = memo.find( key ); it != memo.end() )
    return it->second;

  auto pool = qm_prime_implicants( onset, arity );
  if ( options.maj )
  {
    auto extra = majority_terms( onset, arity );
    pool.insert( pool.end(), extra.begin(), extra.end() );
  }
  Cover cover{ arity, select_cover( pool, onset ) };

  bool changed = true;
  while ( changed )
  {
    changed = false;
    while ( options.maj && fuse_pass_maj( cover.implicants ) )
      changed = true;
    while ( options.xor_xnor && fuse_pass_xor( cover.implicants ) )
      changed = true;
  }
  std::sort( cover.implicants.begin(), cover.implicants.end(),
             []( const auto& a, const auto& b ) { return a.cells < b.cells; } );
  if ( cover.covered() != onset )
    throw contract_violation( "minimize produced an unsound cover" );
  memo.emplace( key, cover );
  return cover;
}

} // namespace majmap
