#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labelers.hpp"
#include "json.hpp"

namespace antimagic {

/// Vertex sums f+ and their split over the two factors, indexed by VertexId.
struct SumReport {
  std::vector<Label> total;
  std::vector<Label> first;   // edges inside first-factor copies
  std::vector<Label> second;  // edges inside second-factor copies
};

SumReport vertex_sums(const Labeling& lab);

struct VertexPair {
  Vertex first;
  Vertex second;

  bool operator==(const VertexPair&) const = default;
};

/// At most this many offending labels are listed in a Verdict.
inline constexpr std::size_t kMaxReportedLabels = 64;

struct Verdict {
  bool antimagic = false;
  /// Lexicographically first pair of vertices with equal sums.
  std::optional<VertexPair> duplicate;
  bool bijection_ok = false;
  /// Labels that are missing from 1..|E|, repeated, or out of range;
  /// ascending, unique, truncated to kMaxReportedLabels.
  std::vector<Label> missing_or_repeated_labels;

  bool operator==(const Verdict&) const = default;
};

Verdict check_antimagic(const Labeling& lab);

/// Certificate attached to a failed property.
struct Certificate {
  std::vector<Vertex> vertices;
  std::vector<Label> values;
  std::string reason;
};

struct PropertyResult {
  std::string name;
  std::string description;
  bool passed = true;
  std::optional<Certificate> certificate;
};

struct PropertyReport {
  FamilySpec spec;
  std::vector<PropertyResult> results;

  bool all_passed() const;
  const PropertyResult* find(std::string_view name) const;
};

/// Evaluates the ordering and parity statements that accompany each
/// construction. Throws InvalidParameter when lab is not a labeling of
/// build_graph(spec).
PropertyReport check_construction_properties(const FamilySpec& spec, const Labeling& lab);

// Serialization: a structured JSON document and a line-oriented text form.
nlohmann::ordered_json to_json(const Verdict& verdict);
nlohmann::ordered_json to_json(const PropertyReport& report);
std::string to_text(const Verdict& verdict);
std::string to_text(const PropertyReport& report);

}  // namespace antimagic
