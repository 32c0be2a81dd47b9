#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolmin.hpp"
#include "cell_library.hpp"
#include "cuts.hpp"
#include "network.hpp"
#include "regen.hpp"

namespace majmap
{

struct MapperOptions
{
  std::uint32_t k{ 3 };
  std::uint32_t max_passes{ 8 };
  std::size_t cut_cap{ 64 };
  bool shared_cuts{ true };   // allow cuts whose interior gates are also used elsewhere
  MinimizeOptions minimize{};
  bool complement{ false };   // also try the off-set cover plus an output INV
  bool global_guard{ true };  // accept a rewrite only if the estimated network PND drops
  std::uint64_t seed{ 0 };    // 0: deterministic tie-breaks
};

struct RewriteChoice
{
  Cut cut;
  Candidate candidate;
  std::int64_t original_pnd{ 0 };
  std::int64_t improvement{ 0 };
};

/*! \brief Every candidate of `node` with positive local improvement, best first
 * (improvement, then fewer JJs, lower depth, fewer balancing DFFs). */
std::vector<RewriteChoice> ranked_candidates( const Network& net, NodeId node, CutEnumerator& cuts,
                                              const CellLibrary& lib, const MapperOptions& options );

/*! \brief Best entry of ranked_candidates, or nullopt when nothing improves. */
std::optional<RewriteChoice> representative_cut( const Network& net, NodeId node, CutEnumerator& cuts,
                                                 const CellLibrary& lib, const MapperOptions& options );

struct MapStats
{
  std::uint32_t passes{ 0 };
  std::size_t rewrites{ 0 };
  std::size_t guard_rejections{ 0 };
  std::int64_t estimated_pnd_before{ 0 };
  std::int64_t estimated_pnd_after{ 0 };
};

/*! \brief Greedy cut rewriting over the whole network.
 *
 * Nodes are visited in topological order. Each node's candidates are tried
 * best first on a copy; the first one that (with the guard on) lowers the
 * estimated post-balancing PND is committed, splitter trees are repaired and
 * the affected cut caches are dropped. Passes repeat until one changes
 * nothing or `max_passes` is reached. Expects a converted, splitterized net.
 */
MapStats map_network( Network& net, const CellLibrary& lib, const MapperOptions& options );

} // namespace majmap
