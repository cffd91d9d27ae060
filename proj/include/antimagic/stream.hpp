#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>

#include "antimagic/graph.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic {

/// Names one edge of a lattice or prism without materializing the graph:
/// the factor it lies in, its canonical lower endpoint, and its edge index in
/// the arrangement of the axis it runs along.
struct EdgeKey {
  FamilySpec spec;
  Factor factor = Factor::first;
  Vertex lower;
  Index index = 0;

  bool operator==(const EdgeKey&) const = default;
};

/// Throws InvalidParameter when edge is not an edge of spec's graph.
EdgeKey key_of(const FamilySpec& spec, const Edge& edge);
Edge endpoints(const EdgeKey& key);

/// c_i of the lattice merge sequence in O(1), 1 <= i <= mn + n, n >= m >= 2.
Label merge_element(Index m, Index n, Index i);

/// Constant-time labels for lattices and prisms, equal to what label(spec)
/// assigns. Construction validates the spec once; lookups are pure.
class ClosedFormLabeler {
 public:
  explicit ClosedFormLabeler(const FamilySpec& spec);

  const FamilySpec& spec() const { return spec_; }
  const GridShape& shape() const { return shape_; }

  /// Label of the edge with arrangement index k along the given factor,
  /// inside column `line` (first factor) or row `line` (second factor).
  Label label(Factor factor, Index line, Index k) const;
  Label label(const EdgeKey& key) const { return label(key.factor, line_of(key), key.index); }

  /// Inverse: the edge carrying `value`. Throws InvalidParameter outside 1..|E|.
  EdgeKey edge_with_label(Label value) const;

 private:
  enum class Case { lattice_general, lattice_thin, lattice_square, prism_general, prism_two_layers };

  static Index line_of(const EdgeKey& key) { return key.factor == Factor::first ? key.lower.col : key.lower.row; }
  // Label in the orientation the construction is written in.
  Label oriented(Factor factor, Index line, Index k) const;
  EdgeKey make_key(Factor factor, Index line, Index k) const;

  FamilySpec spec_;
  GridShape shape_;
  Case case_ = Case::lattice_general;
  bool transposed_ = false;
  Index m_ = 0;  // oriented dimensions
  Index n_ = 0;
  Index head_ = 0;  // s - t of the merge sequence
  Label phase_one_top_ = 0;
  AxisLayout skip_;  // the skip-path whose U/R coloring drives the blocks
};

Label closed_form_label(const EdgeKey& key);
EdgeKey edge_with_label(const FamilySpec& spec, Label value);

// ---------------------------------------------------------------------------

struct StreamOptions {
  /// Bits per distinctness window; 0 selects kStreamWindowBitsPerUnit *
  /// (min(rows, cols) + 1).
  std::uint64_t window_bits = 0;
};

inline constexpr std::uint64_t kStreamWindowBitsPerUnit = 1u << 16;

struct StreamStats {
  std::uint64_t label_passes = 0;
  std::uint64_t sum_passes = 0;
  std::uint64_t edges_evaluated = 0;
  std::uint64_t vertices_evaluated = 0;
  /// Largest number of bytes held by the verifier's working state at once.
  std::uint64_t peak_state_bytes = 0;
};

struct StreamResult {
  Verdict verdict;
  StreamStats stats;
};

using EdgeLabelFn = std::function<Label(const EdgeKey&)>;

/// Bounded-memory antimagic check. Labels and sums are recomputed per
/// vertex; uniqueness is tested window by window over the value range with
/// exact bitsets, so the verdict matches check_antimagic(label(spec)).
StreamResult stream_verify(const FamilySpec& spec, const StreamOptions& options = {});

/// Same check for an arbitrary per-edge labeling of spec's graph.
StreamResult stream_verify(const FamilySpec& spec, const EdgeLabelFn& label_fn, const StreamOptions& options = {});

/// Writes "row1 col1 row2 col2 label" lines, tab-separated, in canonical
/// edge order or, with by_label, in ascending label order.
void stream_edges(const FamilySpec& spec, std::ostream& out, bool by_label = false);

}  // namespace antimagic
