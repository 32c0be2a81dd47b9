#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "network.hpp"

namespace majmap
{

/*! \brief Read a `.bench` netlist.
 *
 * Keywords: INPUT, OUTPUT, AND, OR, NAND, NOR, XOR, XNOR, NOT, BUF, DFF, MAJ, SP.
 * Lines may appear in any order. BUF lines are aliases and create no node.
 * A trailing `# origin=<name>` comment restores the node origin; a DFF without
 * one is a register of the design. Throws parse_error with the offending line.
 */
Network parse_bench( std::string_view text, std::string name = {} );
Network read_bench_file( const std::filesystem::path& path );

/*! \brief Emit a converted network. PIs, POs and gates appear in topological
 * order; a PO whose name differs from its driver gets a BUF line.
 * Throws structural_error if NAND/NOR/XNOR or wide gates remain. */
std::string write_bench( const Network& net );
void write_bench_file( const Network& net, const std::filesystem::path& path );

/*! \brief Same content as write_bench as a JSON document (nodes, edges, origins, levels). */
std::string network_to_json( const Network& net );

} // namespace majmap
