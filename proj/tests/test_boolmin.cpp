#include <doctest.h>

#include <random>
#include <set>

#include "majmap/boolmin.hpp"
#include "majmap/errors.hpp"
#include "oracles.hpp"

using namespace majmap;

namespace
{

std::set<std::string> cells_of( const std::vector<Implicant>& imps )
{
  std::set<std::string> r;
  for ( const auto& i : imps )
    r.insert( i.cells );
  return r;
}

std::set<std::string> rendered( const Cover& c )
{
  std::set<std::string> r;
  for ( const auto& i : c.implicants )
    r.insert( i.str() );
  return r;
}

} // namespace

TEST_CASE( "implicant text and expansion" )
{
  auto p = make_implicant( "1-0" );
  CHECK( p.literals() == 2 );
  // position 0 is bit 0: minterms 001 and 011
  CHECK( expand( p ) == ( ( 1u << 0b001 ) | ( 1u << 0b011 ) ) );
  auto x = make_implicant( "⊕⊕-" );
  CHECK( x.str() == "⊕⊕-" );
  CHECK( expand( x ) == minterms_from_strings( { "100", "010", "101", "011" } ) );
  auto m = make_implicant( "★★★" );
  CHECK( expand( m ) == minterms_from_strings( { "110", "101", "011", "111" } ) );
  auto n = make_implicant( "n-n" );
  CHECK( expand( n ) == minterms_from_strings( { "000", "010", "101", "111" } ) );
  CHECK_THROWS_AS( make_implicant( "1?0" ), contract_violation );
  CHECK_THROWS_AS( make_implicant( "x--" ), contract_violation );
}

TEST_CASE( "QM primes match brute-force cube enumeration" )
{
  for ( std::uint32_t n = 1; n <= 3; ++n )
  {
    for ( std::uint32_t f = 1; f <= full_mask( n ); ++f )
      CHECK( cells_of( qm_prime_implicants( static_cast<std::uint16_t>( f ), n ) ) ==
             oracle::brute_force_primes( static_cast<std::uint16_t>( f ), n ) );
  }
  std::mt19937_64 rng( 1 );
  for ( int t = 0; t < 400; ++t )
  {
    auto f = static_cast<std::uint16_t>( rng() );
    CHECK( cells_of( qm_prime_implicants( f, 4 ) ) == oracle::brute_force_primes( f, 4 ) );
  }
}

TEST_CASE( "four overlapping products are all essential" )
{
  auto onset = minterms_from_strings( { "000", "001", "011", "101", "110", "111" } );
  std::vector<Implicant> cands{ make_implicant( "11-" ), make_implicant( "1-1" ), make_implicant( "-11" ),
                                make_implicant( "00-" ) };
  auto sel = select_cover( cands, onset );
  CHECK( sel.size() == 4 );
  // the textbook prime set of the same on-set is smaller
  CHECK( cells_of( qm_prime_implicants( onset, 3 ) ) == std::set<std::string>{ "00-", "--1", "11-" } );
}

TEST_CASE( "select_cover is minimum on random instances" )
{
  std::mt19937_64 rng( 2 );
  int checked = 0;
  for ( int t = 0; t < 3000 && checked < 500; ++t )
  {
    auto f = static_cast<std::uint16_t>( rng() );
    if ( !f )
      continue;
    auto primes = qm_prime_implicants( f, 4 );
    if ( primes.size() > 14 )
      continue;
    std::vector<std::uint16_t> masks;
    for ( const auto& p : primes )
      masks.push_back( expand( p ) );
    auto sel = select_cover( primes, f );
    std::uint16_t u = 0;
    for ( const auto& s : sel )
      u |= expand( s );
    CHECK( u == f );
    CHECK( sel.size() == oracle::min_cover_size( masks, f ) );
    ++checked;
  }
  CHECK( checked > 100 );
}

TEST_CASE( "select_cover rejects impossible inputs" )
{
  auto onset = minterms_from_strings( { "11" } );
  CHECK_THROWS_AS( select_cover( { make_implicant( "1-" ) }, onset ), contract_violation );
  CHECK_THROWS_AS( select_cover( { make_implicant( "00" ) }, onset ), contract_violation );
}

TEST_CASE( "XOR and XNOR fusion" )
{
  auto x = fuse_xor_xnor( make_implicant( "01-" ), make_implicant( "10-" ) );
  REQUIRE( x );
  CHECK( x->str() == "⊕⊕-" );
  auto n = fuse_xor_xnor( make_implicant( "00-" ), make_implicant( "11-" ) );
  REQUIRE( n );
  CHECK( n->str() == "⊖⊖-" );
  CHECK( expand( *n ) == ( expand( make_implicant( "00-" ) ) | expand( make_implicant( "11-" ) ) ) );
  // differ in three positions, and differ in one
  CHECK_FALSE( fuse_xor_xnor( make_implicant( "010" ), make_implicant( "101" ) ) );
  CHECK_FALSE( fuse_xor_xnor( make_implicant( "01-" ), make_implicant( "11-" ) ) );
  // free cell in different places
  CHECK_FALSE( fuse_xor_xnor( make_implicant( "01-" ), make_implicant( "1-0" ) ) );
  CHECK_THROWS_AS( fuse_xor_xnor( *x, make_implicant( "00-" ) ), contract_violation );
}

TEST_CASE( "majority fusion" )
{
  auto m = fuse_maj( make_implicant( "11-0" ), make_implicant( "1-10" ), make_implicant( "-110" ) );
  REQUIRE( m );
  CHECK( m->str() == "★★★0" );
  CHECK( expand( *m ) == ( expand( make_implicant( "11-0" ) ) | expand( make_implicant( "1-10" ) ) |
                           expand( make_implicant( "-110" ) ) ) );
  // order of the three terms does not matter
  auto m2 = fuse_maj( make_implicant( "-110" ), make_implicant( "11-0" ), make_implicant( "1-10" ) );
  REQUIRE( m2 );
  CHECK( m2->str() == "★★★0" );
  CHECK_FALSE( fuse_maj( make_implicant( "11-0" ), make_implicant( "1-10" ), make_implicant( "-111" ) ) );
  CHECK_FALSE( fuse_maj( make_implicant( "11-" ), make_implicant( "11-" ), make_implicant( "-11" ) ) );
  CHECK_THROWS_AS( fuse_maj( make_implicant( "★★★" ), make_implicant( "1-1" ), make_implicant( "-11" ) ),
                   contract_violation );
}

TEST_CASE( "majority plus one product" )
{
  auto onset = minterms_from_strings( { "000", "001", "011", "101", "110", "111" } );
  auto c = minimize( onset, 3 );
  CHECK( rendered( c ) == std::set<std::string>{ "★★★", "00-" } );
  CHECK( c.covered() == onset );
  auto plain = minimize( onset, 3, { false, false } );
  CHECK( plain.covered() == onset );
  for ( const auto& i : plain.implicants )
    CHECK_FALSE( i.marked() );
}

TEST_CASE( "minimize on small functions" )
{
  CHECK( rendered( minimize( 0b0110, 2 ) ) == std::set<std::string>{ "⊕⊕" } );
  CHECK( rendered( minimize( 0b1001, 2 ) ) == std::set<std::string>{ "⊖⊖" } );
  CHECK( rendered( minimize( 0b1000, 2 ) ) == std::set<std::string>{ "11" } );
  CHECK( rendered( minimize( 0b11101000, 3 ) ) == std::set<std::string>{ "★★★" } );
  CHECK( minimize( 0, 3 ).implicants.empty() );
}

TEST_CASE( "every arity 3 cover is exact and never larger than the plain SOP" )
{
  for ( std::uint32_t f = 0; f <= 0xFF; ++f )
  {
    auto t = static_cast<std::uint16_t>( f );
    auto c = minimize( t, 3 );
    CHECK( c.covered() == t );
    std::uint16_t u = 0;
    for ( const auto& i : c.implicants )
      u |= expand( i );
    CHECK( u == t );
    CHECK( c.implicants.size() <= minimize( t, 3, { false, false } ).implicants.size() );
  }
}
