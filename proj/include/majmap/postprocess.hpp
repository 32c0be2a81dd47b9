#pragma once

#include <cstddef>

#include "network.hpp"

namespace majmap
{

/*! \brief Insert (l_max - l_i) balancing DFFs on every fan-in edge of every clocked
 * gate with two or more fan-ins. Splitters and POs are not balanced.
 * Returns the number of DFFs inserted. */
std::size_t balance_paths( Network& net );

/*! \brief True when every clocked multi-input gate sees equal fan-in levels. */
bool is_balanced( const Network& net );

struct MergeReplaceStats
{
  std::size_t merged_gates{ 0 };   // gates that had a shared DFF run moved to their output
  std::size_t dffs_removed{ 0 };   // net DFF reduction from merging
  std::size_t replaced{ 0 };       // DFFs turned into INVs
};

/*! \brief Shrink balancing DFF overhead without changing any function or balance.
 *
 * Merge: a gate whose every fan-in edge ends in at least y balancing DFFs has y
 * taken off each edge and y placed on its output (before a splitter or PO),
 * sweeping from inputs to outputs. Splitters are never crossed.
 * Replace: in each maximal run of x > 2 balancing DFFs, the x - x % 2 nearest
 * the driver become INVs (an even number, so the value is unchanged).
 * Registers of the design are never touched.
 */
MergeReplaceStats merge_and_replace( Network& net );

} // namespace majmap
