#pragma once

#include <cstddef>

#include "network.hpp"

namespace majmap
{

struct ConversionStats
{
  std::size_t converted{ 0 };     // NAND/NOR/XNOR/wide nodes rewritten
  std::size_t inverters{ 0 };     // INVs added for inverting gates
  std::size_t dead_removed{ 0 };  // dangling logic removed
};

/*! \brief Rewrite into the cell basis: NAND/NOR/XNOR become AND/OR/XOR trees plus INV,
 * gates wider than the library become trees of at most 4-input gates (XOR: 2).
 * Dangling logic is removed. A network already in the basis is left unchanged. */
ConversionStats convert_gates( Network& net );

struct SplitterStats
{
  std::size_t rebuilt{ 0 };    // drivers whose fan-out tree was (re)built
  std::size_t splitters{ 0 };  // total live SP nodes afterwards
};

/*! \brief Give every node fan-out at most 1 by hanging a balanced binary tree of
 * n - 1 splitters below each driver with n consumers. Drivers whose existing
 * tree is already legal are untouched. */
SplitterStats insert_splitters( Network& net );

/*! \brief Sum over non-SP nodes of max(0, logical consumers - 1). */
std::size_t required_splitters( const Network& net );

} // namespace majmap
