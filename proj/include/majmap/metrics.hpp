#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cell_library.hpp"
#include "network.hpp"

namespace majmap
{

struct MetricsReport
{
  std::int64_t jjs{ 0 };
  std::uint32_t depth{ 0 };
  std::int64_t pnd{ 0 };
  std::size_t dffs_plus_invs{ 0 };
  std::size_t dffs{ 0 };
  std::size_t invs{ 0 };
  std::size_t balancing_dffs{ 0 };
  std::size_t user_dffs{ 0 };
  std::size_t inserted_invs{ 0 };
  std::size_t splitters{ 0 };
  std::size_t splitter_jjs{ 0 };
  std::size_t gates{ 0 }; // every non-terminal node
  std::array<std::size_t, num_gate_kinds> per_kind{};

  bool operator==( const MetricsReport& ) const = default;
};

/*! \brief Largest level of an internal node. A register counts one stage past its D input. */
std::uint32_t network_depth( const Network& net );

/*! \brief JJ total, depth and their product, plus DFF/INV/SP counts. Levels are recomputed. */
MetricsReport network_metrics( const Network& net, const CellLibrary& lib );

/*! \brief DFFs that path balancing would insert: over clocked gates with two or more
 * fan-ins, the sum of (max fan-in level - fan-in level). */
std::size_t pending_balancing_dffs( const Network& net );

/*! \brief PND of the network as it would be after path balancing. */
std::int64_t estimated_pnd( const Network& net, const CellLibrary& lib );

struct PhaseRecord
{
  std::string phase;
  MetricsReport metrics;
};

/*! \brief Flat key=value text: the final metrics followed by one `phase.<name>.*` block per phase. */
std::string format_report_text( const MetricsReport& final_metrics, const std::vector<PhaseRecord>& phases );
/*! \brief JSON document {depth, jjs, pnd, dffs_plus_invs, ..., per_phase: [...]}. */
std::string format_report_json( const MetricsReport& final_metrics, const std::vector<PhaseRecord>& phases );

} // namespace majmap
