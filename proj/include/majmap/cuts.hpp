#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "network.hpp"

namespace majmap
{

/*! \brief A K-feasible cut of `root`.
 *
 * Leaves are logical nodes (never splitters) in ascending id order. The
 * interior is every physical node strictly above the leaves up to and
 * including the root, splitters and DFFs on those paths included.
 * `truth` bit b is the root value when leaf i carries bit i of b.
 */
struct Cut
{
  NodeId root{ invalid_node };
  std::vector<NodeId> leaves;
  std::vector<NodeId> interior;
  /*! Interior gates that also feed logic outside the cut; they survive a rewrite. */
  std::vector<NodeId> shared;
  std::uint16_t truth{ 0 };

  std::uint32_t arity() const noexcept { return static_cast<std::uint32_t>( leaves.size() ); }
};

struct CutOptions
{
  std::uint32_t k{ 3 };
  std::size_t cap{ 64 }; // per-node limit, smaller cuts kept first
  bool shared_interior{ false }; // also return cuts whose interior gates feed outside logic
};

/*! \brief Bottom-up cut enumeration with a per-node cache.
 *
 * Splitters are transparent: a cut never stops at an SP, it stops at the SP's
 * driver. By default a cut is kept only if every non-root interior gate has
 * all its consumers inside the cut, so that a rewrite never leaves a partially
 * used interior gate behind. With `shared_interior` such cuts are returned too
 * and the gates that must survive are listed in `Cut::shared`.
 * Registers and PIs are always leaves.
 */
class CutEnumerator
{
public:
  CutEnumerator( const Network& net, CutOptions options );

  /*! \brief Cuts of `root` with 2..K leaves. Empty for PI, PO, SP and DFF roots. */
  std::vector<Cut> cuts( NodeId root );

  /*! \brief Drop cached leaf sets of `id` and of its logical transitive fan-out. */
  void invalidate( NodeId id );
  void clear() { cache_.clear(); }

  const CutOptions& options() const noexcept { return options_; }

private:
  const std::vector<std::vector<NodeId>>& leaf_sets( NodeId id );

  const Network& net_;
  CutOptions options_;
  std::unordered_map<NodeId, std::vector<std::vector<NodeId>>> cache_;
};

std::vector<Cut> enumerate_cuts( const Network& net, NodeId root, std::uint32_t k, std::size_t cap = 64,
                                 bool shared_interior = false );

/*! \brief Physical nodes between `leaves` and `root` (root included), ascending. */
std::vector<NodeId> cut_interior( const Network& net, NodeId root, const std::vector<NodeId>& leaves );

/*! \brief Root function over the leaves (at most 4). SP and DFF interior nodes are wires. */
std::uint16_t cut_truth_table( const Network& net, NodeId root, const std::vector<NodeId>& leaves );
inline std::uint16_t cut_truth_table( const Network& net, const Cut& cut )
{
  return cut_truth_table( net, cut.root, cut.leaves );
}

void check_k( std::uint32_t k );

} // namespace majmap
