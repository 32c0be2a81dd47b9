#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "boolmin.hpp"
#include "cell_library.hpp"
#include "cuts.hpp"
#include "network.hpp"

namespace majmap
{

/*! \brief A regenerated cut circuit and its local cost.
 *
 * `jjs` counts the fragment cells, the balancing DFFs its unequal input
 * levels would need, and the splitters needed for values used more than once
 * inside the fragment. `pnd = jjs * local_depth`.
 */
struct Candidate
{
  Fragment fragment;
  Cover cover;
  bool complemented{ false };
  std::int64_t jjs{ 0 };
  std::uint32_t local_depth{ 0 };
  std::int64_t pnd{ 0 };
  std::uint32_t balancing_dffs{ 0 };
  std::uint32_t splitters{ 0 };
  std::uint32_t root_level{ 0 };
};

/*! \brief Rebuild `cover` over leaves at `leaf_levels`. ★ groups become MAJ3, ⊕ XOR2,
 * ⊖ XOR2 + INV, complemented literals share one INV per leaf, products are AND
 * trees and the sum is an OR tree, all built lowest level first. With
 * `complement_output` an INV is added on the output (the cover then describes
 * the off-set). Returns nullopt for constant functions, which have no cell. */
std::optional<Candidate> build_candidate( const Cover& cover, std::span<const std::uint32_t> leaf_levels,
                                          const CellLibrary& lib, bool complement_output = false );

/*! \brief Cost of the cut as it stands: interior JJs (splitters and DFFs included)
 * plus the balancing DFFs the interior gates will need, times (root level - lowest
 * leaf level). Gates listed in `cut.shared` survive a rewrite and are not counted. */
std::int64_t cost_original_cut( const Network& net, const Cut& cut, const CellLibrary& lib );

inline std::int64_t improvement( const Network& net, const Cut& cut, const Candidate& cand, const CellLibrary& lib )
{
  return cost_original_cut( net, cut, lib ) - cand.pnd;
}

/*! \brief Function of a fragment over its leaves (bit b = output under leaf bits of b). */
std::uint16_t fragment_truth_table( const Fragment& fragment );

} // namespace majmap
