#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "gate_kind.hpp"

namespace majmap
{

struct CellInfo
{
  std::int32_t jj_count{ 0 };
  std::uint32_t max_fanin{ 0 };
  bool clocked{ false };

  bool operator==( const CellInfo& ) const = default;
};

/*! \brief Per-kind JJ cost table.
 *
 * The default table is the SFQ cell set the mapper targets: DFF 8, AND2 9,
 * AND3 12, AND4 15, OR2 9, OR3 11, OR4 13, INV 5, XOR2 7, SP 3, MAJ3 12.
 */
class CellLibrary
{
public:
  CellLibrary();

  static CellLibrary defaults() { return CellLibrary{}; }

  const CellInfo& operator[]( GateKind k ) const { return cells_[index_of( k )]; }
  std::int32_t jj( GateKind k ) const { return cells_[index_of( k )].jj_count; }

  void set_jj( GateKind k, std::int32_t jj );

  bool operator==( const CellLibrary& ) const = default;

private:
  std::array<CellInfo, num_gate_kinds> cells_{};
};

/*! \brief Parse `NAME=COST` lines (`#` comments, blank lines allowed).
 *
 * Accepted names: DFF, AND2, AND3, AND4, OR2, OR3, OR4, INV (NOT), XOR (XOR2),
 * SP (SPLITTER), MAJ (MAJ3). Missing entries keep their default cost.
 * Throws config_error on unknown names, malformed lines and negative costs.
 */
CellLibrary parse_cell_library( std::string_view text );

std::string format_cell_library( const CellLibrary& lib );

} // namespace majmap
