#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace majmap
{

/*! \brief Node kinds.
 *
 * The first block is the SFQ cell basis. `NAND`, `NOR`, `XNOR` and the
 * `*_WIDE` kinds only exist between parsing and gate conversion.
 */
enum class GateKind : std::uint8_t
{
  PI,
  PO,
  AND2,
  AND3,
  AND4,
  OR2,
  OR3,
  OR4,
  INV,
  XOR2,
  MAJ3,
  DFF,
  SP,
  NAND,
  NOR,
  XNOR,
  AND_WIDE,
  OR_WIDE,
  XOR_WIDE,
};

inline constexpr std::size_t num_gate_kinds = 19;

constexpr std::size_t index_of( GateKind k ) noexcept { return static_cast<std::size_t>( k ); }

std::string_view kind_name( GateKind k ) noexcept;
std::optional<GateKind> kind_from_name( std::string_view name ) noexcept;

/*! \brief Fixed fan-in of a kind, or nullopt for variable-arity conversion inputs. */
std::optional<std::uint32_t> fixed_arity( GateKind k ) noexcept;
bool arity_ok( GateKind k, std::size_t fanins ) noexcept;

/*! \brief True for kinds that may appear in a converted (SFQ-legal) network. */
bool is_library_kind( GateKind k ) noexcept;

/*! \brief Clocked cells add one stage to the logic level. PI, PO and SP are asynchronous. */
constexpr bool is_clocked( GateKind k ) noexcept
{
  return k != GateKind::PI && k != GateKind::PO && k != GateKind::SP;
}

enum class GateFamily : std::uint8_t
{
  And,
  Or,
  Xor,
};

/*! \brief Library kind for a `family` gate with `arity` inputs (AND2..4, OR2..4, XOR2). */
GateKind family_kind( GateFamily family, std::uint32_t arity );
std::uint32_t family_max_fanin( GateFamily family ) noexcept;

/*! \brief Functional evaluation of a logic kind over bit-parallel words. */
std::uint64_t evaluate_word( GateKind k, const std::uint64_t* fanins, std::size_t n );

} // namespace majmap
