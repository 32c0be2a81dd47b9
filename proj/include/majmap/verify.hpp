#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "network.hpp"

namespace majmap
{

/*! \brief Evaluate 64 input patterns at once. `pi_words` follows `net.pis()`,
 * `register_words` follows `net.registers()` (register outputs are free inputs).
 * Every DFF that is not a register, every SP and every PO is a wire.
 * Returns one word per node id. */
std::vector<std::uint64_t> simulate_words( const Network& net, const std::vector<std::uint64_t>& pi_words,
                                           const std::vector<std::uint64_t>& register_words = {} );

/*! \brief Single-pattern evaluation; returns PO values in `net.pos()` order. Registers read 0. */
std::vector<bool> simulate( const Network& net, const std::vector<bool>& inputs );

struct EquivalenceOptions
{
  std::uint64_t vectors{ 10000 };
  std::uint64_t seed{ 0x5eed5eedULL };
  std::uint32_t exhaustive_limit{ 12 };
};

struct EquivalenceReport
{
  bool equivalent{ true };
  bool exhaustive{ false };
  std::size_t effective_inputs{ 0 };
  std::uint64_t patterns{ 0 };
  std::string mismatch;                                      // output (or register input) that differed
  std::vector<std::pair<std::string, bool>> counterexample; // input/register assignment
};

/*! \brief Compare two networks output by output.
 *
 * PIs, POs and registers are matched by name. Register outputs become extra
 * inputs and register D inputs extra outputs, so sequential designs are checked
 * one clock frame at a time. Exhaustive up to `exhaustive_limit` effective inputs,
 * seeded random patterns otherwise. Throws interface_error on name mismatch.
 */
EquivalenceReport check_equivalence( const Network& a, const Network& b, const EquivalenceOptions& options = {} );

} // namespace majmap
