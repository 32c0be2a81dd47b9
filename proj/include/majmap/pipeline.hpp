#pragma once

#include <optional>
#include <vector>

#include "cell_library.hpp"
#include "mapper.hpp"
#include "metrics.hpp"
#include "network.hpp"
#include "postprocess.hpp"
#include "preprocess.hpp"
#include "verify.hpp"

namespace majmap
{

struct PipelineOptions
{
  MapperOptions mapper{};
  bool map{ true };
  bool merge_replace{ true };
  bool verify{ true };
  EquivalenceOptions equivalence{};
};

struct PipelineResult
{
  Network output;
  MetricsReport metrics;
  std::vector<PhaseRecord> phases;
  ConversionStats conversion;
  SplitterStats splitters;
  MapStats mapping;
  std::size_t balancing_dffs_inserted{ 0 };
  MergeReplaceStats merge_replace;
  std::optional<EquivalenceReport> verification;
};

/*! \brief convert -> splitters -> map -> balance -> merge & replace -> metrics -> verify.
 * The input is left untouched and is the reference for verification. */
PipelineResult run_pipeline( const Network& input, const CellLibrary& lib, const PipelineOptions& options = {} );

/*! \brief Preprocess-only baseline: conversion, splitters and path balancing, no mapping. */
Network baseline_network( const Network& input );

} // namespace majmap
