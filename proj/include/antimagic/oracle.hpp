#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "antimagic/graph.hpp"
#include "antimagic/labelers.hpp"

namespace antimagic {

/// Exhaustive search refuses graphs with more edges than this (10! labelings).
inline constexpr std::size_t kMaxExhaustiveEdges = 10;

struct SearchResult {
  std::uint64_t total_labelings_checked = 0;
  std::uint64_t antimagic_count = 0;
  std::optional<Labeling> first_antimagic;
  /// Set only when a reference labeling was supplied.
  std::optional<bool> contains_constructed;
};

struct ExhaustiveOptions {
  /// Skip subtrees once two completed vertices share a sum. Counts are
  /// unchanged; skipped labelings are counted as checked.
  bool prune = false;
  /// Worker threads; the enumeration is split by the label of edge 0.
  unsigned workers = 1;
};

/// Called once per enumerated labeling (labels indexed by EdgeId) with the
/// oracle's own verdict. Must be thread-safe when workers > 1.
using LabelingVisitor = std::function<void(std::span<const Label>, bool antimagic)>;

/// Enumerates every bijection E -> 1..|E| in lexicographic order of the label
/// sequence and counts the antimagic ones, recomputing vertex sums from
/// scratch. Throws SizeLimitExceeded above kMaxExhaustiveEdges and
/// InvalidParameter when a visitor is combined with pruning.
SearchResult exhaustive_search(const Graph& g, const std::optional<Labeling>& reference = std::nullopt,
                               const ExhaustiveOptions& options = {}, const LabelingVisitor& visit = {});

/// Samples `trials` uniform bijections.
///
/// Generator: std::mt19937_64 seeded with `seed`. Each trial starts from the
/// identity labeling 1..|E| and applies Fisher-Yates: for i = |E|-1 down to 1,
/// swap positions i and j, where j is drawn uniformly from 0..i by rejection
/// (discard raw draws below 2^64 mod (i+1), then take the draw mod (i+1)).
SearchResult random_search(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                           const std::optional<Labeling>& reference = std::nullopt);

/// Independent antimagic test used by the oracle: sums from the edge list,
/// distinctness by sorting. Assumes labels are a bijection.
bool oracle_is_antimagic(const Graph& g, std::span<const Label> labels);

}  // namespace antimagic
