#pragma once

#include <memory>
#include <span>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

/// Edge labeling of a graph: labels()[e] is the label of graph().edge(e).
///
/// The constructions below always produce a bijection onto 1..|E|; labelings
/// read from files may not, which is what the verifier reports on.
class Labeling {
 public:
  Labeling(std::shared_ptr<const Graph> graph, std::vector<Label> labels);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  std::span<const Label> labels() const { return labels_; }

  Label operator[](EdgeId e) const { return labels_[e]; }
  Label label_of(const Vertex& x, const Vertex& y) const { return labels_[graph_->edge_id(x, y)]; }

  bool operator==(const Labeling& other) const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<Label> labels_;
};

// ---------------------------------------------------------------------------
// U/R coloring of a skip-path

enum class Letter { U, R };

/// The unique proper 2-coloring of a skip-path's edges with U on v_1 v_3.
struct URColoring {
  Index first_edge = 1;
  std::vector<Letter> colors;  // colors[k - first_edge]

  Letter at(Index k) const { return colors.at(static_cast<std::size_t>(k - first_edge)); }
};

URColoring ur_coloring(const Arrangement& arr);

// ---------------------------------------------------------------------------
// Merge sequence for the second-factor edges of a lattice

/// A (all odd labels), B (the even labels left over after the first-factor
/// blocks) and their merge C = a_1..a_{s-t}, b_1, a_{s-t+1}, b_2, ..., b_t, a_s.
struct MergeSequence {
  std::vector<Label> odds;            // A
  std::vector<Label> leftover_evens;  // B
  Index s = 0;
  Index t = 0;
  std::vector<Label> merged;          // C

  /// c_i, 1-based.
  Label c(Index i) const { return merged.at(static_cast<std::size_t>(i - 1)); }
};

MergeSequence merge_sequence(Index m, Index n);

// ---------------------------------------------------------------------------
// Constructions. Each returns a labeling of build_graph(spec) for its family.

Labeling label_path(Index m);
Labeling label_cycle(Index m);
Labeling label_lattice_general(Index m, Index n);
Labeling label_lattice_thin(Index n);
Labeling label_prism_general(Index m, Index n);
Labeling label_prism_two_layers(Index m);

/// Dispatches to the construction that covers spec, transposing lattices with
/// m > n and mapping the 1x1 lattice onto the 4-cycle.
Labeling label(const FamilySpec& spec);

}  // namespace antimagic
