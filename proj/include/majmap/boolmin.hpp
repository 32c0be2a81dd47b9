#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace majmap
{

/*! \brief Product term over at most 4 inputs.
 *
 * `cells[i]` describes input i (bit i of a minterm index):
 * '0', '1', '-' (free), 'x' (XOR pair member), 'n' (XNOR pair member),
 * 'm' (majority triple member). `groups` lists the positions of each
 * marker pair/triple so that two pairs in one term stay distinguishable.
 */
struct Implicant
{
  struct Group
  {
    char marker{ 'x' };
    std::vector<std::uint32_t> positions;

    bool operator==( const Group& ) const = default;
  };

  std::string cells;
  std::vector<Group> groups;
  std::uint16_t covered{ 0 };

  std::uint32_t arity() const noexcept { return static_cast<std::uint32_t>( cells.size() ); }
  bool marked() const noexcept { return !groups.empty(); }
  /*! \brief Non-free positions. */
  std::uint32_t literals() const noexcept;
  /*! \brief Rendering with the ⊕ ⊖ ★ symbols. */
  std::string str() const;

  bool operator==( const Implicant& other ) const { return cells == other.cells && groups == other.groups; }
};

/*! \brief Build an implicant from text. Accepts 0 1 - and the symbols ⊕ ⊖ ★ (or x n m);
 * each marker kind may form at most one group. Throws contract_violation otherwise. */
Implicant make_implicant( std::string_view text );

/*! \brief Minterm set described by the cells and groups. */
std::uint16_t expand( const Implicant& imp );

/*! \brief Minterm set from strings like "011" (position 0 first). */
std::uint16_t minterms_from_strings( const std::vector<std::string>& rows );

struct Cover
{
  std::uint32_t arity{ 0 };
  std::vector<Implicant> implicants;

  std::uint16_t covered() const;
  std::string str() const;
};

/*! \brief Textbook Quine-McCluskey: every prime implicant over {0, 1, -}. */
std::vector<Implicant> qm_prime_implicants( std::uint16_t onset, std::uint32_t arity );

/*! \brief Minimum-cardinality exact cover of `onset` drawn from `candidates`.
 * Ties go to fewer literals, then to the lexicographically smaller term list.
 * Throws contract_violation if the candidates cannot cover the on-set or a
 * candidate covers an off-set minterm. */
std::vector<Implicant> select_cover( const std::vector<Implicant>& candidates, std::uint16_t onset );

/*! \brief Merge two unmarked terms into one XOR (⊕) or XNOR (⊖) term, if exact. */
std::optional<Implicant> fuse_xor_xnor( const Implicant& s1, const Implicant& s2 );
/*! \brief Merge three unmarked terms 11-, 1-1, -11 (columns) into one ★ term, if exact. */
std::optional<Implicant> fuse_maj( const Implicant& s1, const Implicant& s2, const Implicant& s3 );

struct MinimizeOptions
{
  bool maj{ true };
  bool xor_xnor{ true };
};

/*! \brief Two-level cover of `truth` (bit b = f(b)) using AND/OR and, if enabled,
 * majority and XOR/XNOR terms. The expansion always equals the on-set exactly.
 * Majority terms compete in cover selection; XOR/XNOR fusion runs on the chosen cover. */
Cover minimize( std::uint16_t truth, std::uint32_t arity, MinimizeOptions options = {} );

inline std::uint16_t full_mask( std::uint32_t arity )
{
  return static_cast<std::uint16_t>( arity >= 4 ? 0xFFFFu : ( ( 1u << ( 1u << arity ) ) - 1u ) );
}

} // namespace majmap
